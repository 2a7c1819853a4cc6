#pragma once

// Rational polyhedral cones and polytopes. Cones are kept as generator
// lists; polytopes as inequality systems with vertices computed on demand.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "toricfrob/exactlin.hpp"

namespace toricfrob {

/// The cone generated by `generators` in R^dim.
struct Cone {
  std::size_t dim = 0;
  std::vector<IntVector> generators;
};

/// normal . x >= offset
struct Halfspace {
  RatVector normal;
  Rational offset;
};

/// normal . x == offset
struct Hyperplane {
  RatVector normal;
  Rational offset;
};

class HPolytope {
 public:
  explicit HPolytope(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const std::vector<Halfspace>& inequalities() const { return inequalities_; }
  const std::vector<Hyperplane>& equalities() const { return equalities_; }

  void add_inequality(RatVector normal, Rational offset);
  void add_equality(RatVector normal, Rational offset);
  /// Convenience for integer rows.
  void add_inequality(const IntVector& normal, const Integer& offset);
  void add_equality(const IntVector& normal, const Integer& offset);

  bool contains(const RatVector& x) const;

 private:
  std::size_t dim_;
  std::vector<Halfspace> inequalities_;
  std::vector<Hyperplane> equalities_;
};

struct VPolytope {
  std::vector<RatVector> vertices;  // lexicographically sorted
};

/// Generators of {x : a.x >= 0 for all a in normals}. Lineality directions
/// appear as opposite pairs.
Cone cone_from_inequalities(std::size_t dim, const std::vector<IntVector>& normals);

Cone dual_cone(const Cone& cone);

/// Primitive generators of the extreme rays, sorted. Throws NotStronglyConvex.
std::vector<IntVector> extreme_rays(const Cone& cone);

/// strict: relative interior.
bool membership(const Cone& cone, const RatVector& v, bool strict = false);
bool membership(const Cone& cone, const IntVector& v, bool strict = false);

/// Same point sets, compared through extreme rays.
bool same_cone(const Cone& a, const Cone& b);

/// Feasible point of `lp` with x_i > lower_i for i in strict_lower and
/// x_i < upper_i for i in strict_upper. Built as the average of one witness
/// per coordinate that the first feasible point leaves on its bound.
std::optional<RatVector> strict_feasible_point(const LinearProgram& lp,
                                               const std::vector<std::size_t>& strict_lower,
                                               const std::vector<std::size_t>& strict_upper);

/// c in [0,1)^m with sum c_j g_j = point.
std::optional<RatVector> half_open_combination(const std::vector<IntVector>& generators,
                                               const RatVector& point);
/// c in (0,inf)^m with sum c_j g_j = point.
std::optional<RatVector> positive_combination(const std::vector<IntVector>& generators,
                                              const RatVector& point);

/// Throws Unbounded when the polytope has a recession direction; an empty
/// polytope gives no vertices.
VPolytope vertex_enumeration(const HPolytope& P);

/// -1 for the empty set.
int affine_dimension(const std::vector<RatVector>& points);

/// Euclidean volume of the convex hull of full-dimensional points in R^k.
Rational hull_volume(const std::vector<RatVector>& points);

/// Volume in units of the fundamental cell of the lattice spanned by the
/// columns of `lattice_basis`. Throws DimensionMismatch unless P is
/// full-dimensional in a translate of that lattice's span.
Rational lattice_volume(const HPolytope& P, const IntMatrix& lattice_basis);

std::vector<IntVector> lattice_points(const HPolytope& P);
Integer count_lattice_points(const HPolytope& P);
void for_each_lattice_point(const HPolytope& P,
                            const std::function<void(const IntVector&)>& visit);

/// Nonzero lattice point sum_{i in S} v_i carrying coefficients in [0,1),
/// where S is the sign class of the largest |c_i|. Throws DegenerateRelation
/// when c has no mixed signs.
IntVector half_open_point_from_relation(const std::vector<IntVector>& vectors,
                                        const IntVector& relation);

}  // namespace toricfrob
