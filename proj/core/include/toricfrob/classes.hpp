#pragma once

// Divisor class group and Neron-Severi lattice of a complete simplicial
// fan, the standard cones in N^1 and intersections with 1-cycles.

#include <cstddef>
#include <vector>

#include "toricfrob/exactlin.hpp"
#include "toricfrob/fan.hpp"
#include "toricfrob/polyhedra.hpp"

namespace toricfrob {

/// Coordinates in N^1 = Z^rho.
struct NumClass {
  IntVector coords;

  friend bool operator==(const NumClass&, const NumClass&) = default;
  friend bool operator<(const NumClass& a, const NumClass& b) { return lex_less(a.coords, b.coords); }
};

/// An element of Cl(X) = N^1 + torsion; torsion entries reduced mod the
/// matching invariant factor.
struct ClassElement {
  NumClass free;
  IntVector torsion;

  friend bool operator==(const ClassElement&, const ClassElement&) = default;
  friend bool operator<(const ClassElement& a, const ClassElement& b) {
    if (a.free.coords != b.free.coords) return a.free < b.free;
    return lex_less(a.torsion, b.torsion);
  }
  bool is_zero() const { return toricfrob::is_zero(free.coords) && toricfrob::is_zero(torsion); }
};

class ClassGroup {
 public:
  /// Requires a complete simplicial fan.
  explicit ClassGroup(const Fan& fan);

  std::size_t rank() const { return rank_; }
  std::size_t num_rays() const { return num_rays_; }
  std::size_t dim() const { return num_rays_ - rank_; }
  /// Invariant factors > 1.
  const std::vector<Integer>& torsion() const { return torsion_; }

  /// rho x r integer matrix D |-> free part of [D].
  const IntMatrix& free_projection() const { return free_projection_; }
  /// r x rho matrix whose columns are divisors representing the basis of N^1.
  const IntMatrix& section() const { return section_; }
  /// r x d basis of {a in Z^r : free part of [a] = 0}.
  const IntMatrix& numerical_kernel() const { return numerical_kernel_; }
  /// r x d ray matrix; its columns span the principal divisors.
  const IntMatrix& principal() const { return principal_; }

  NumClass numerical(const IntVector& divisor) const;
  ClassElement element(const IntVector& divisor) const;
  /// A divisor in the given class.
  IntVector representative(const ClassElement& e) const;
  IntVector representative(const NumClass& c) const;
  ClassElement lift(const NumClass& c) const;

  /// pi_i = numerical class of the i-th boundary divisor.
  const std::vector<IntVector>& ray_classes() const { return ray_classes_; }

  /// Coordinates of a relation in N_1, dual to N^1. Throws NotARelation.
  IntVector relation_coordinates(const IntVector& relation) const;

  bool is_relation(const IntVector& relation) const;

 private:
  std::size_t num_rays_;
  std::size_t rank_;
  std::vector<Integer> torsion_;
  std::vector<std::size_t> torsion_rows_;
  IntMatrix snf_left_;
  IntMatrix snf_left_inverse_;
  IntMatrix free_projection_;
  IntMatrix basis_change_;  // columns: N^1 basis in raw Smith coordinates
  IntMatrix section_;
  IntMatrix numerical_kernel_;
  IntMatrix principal_;
  std::vector<IntVector> ray_classes_;
};

ClassGroup class_group(const Fan& fan);

NumClass operator+(const NumClass& a, const NumClass& b);
NumClass operator-(const NumClass& a, const NumClass& b);
NumClass operator*(const Integer& k, const NumClass& a);

Cone eff_cone(const ClassGroup& cg);
/// Interior of Eff: sum c_i pi_i = v with every c_i > 0.
bool big_test(const ClassGroup& cg, const NumClass& v);
Cone nef_cone(const Fan& fan, const ClassGroup& cg);
Cone moving_cone(const ClassGroup& cg);

/// D . R for a relation R; independent of the representative of E.
Rational intersection_number(const ClassGroup& cg, const ClassElement& e, const IntVector& relation);

ClassElement anticanonical(const ClassGroup& cg);

/// Number of m in Z^d with <m, u_i> >= -a_i for all i.
Integer h0(const Fan& fan, const IntVector& divisor);

/// {m : <m, u_i> >= -a_i}
HPolytope divisor_polytope(const Fan& fan, const IntVector& divisor);

}  // namespace toricfrob
