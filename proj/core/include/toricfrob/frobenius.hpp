#pragma once

// Frobenius pushforwards of line bundles on toric varieties: splitting
// multiplicities, the trace kernel, Frobenius support and densities.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "toricfrob/classes.hpp"
#include "toricfrob/fan.hpp"
#include "toricfrob/polyhedra.hpp"

namespace toricfrob {

/// Largest q^d any enumeration will sweep.
inline constexpr std::uint64_t kEnumerationBudget = 10'000'000;

/// p^e; throws InvalidArgument unless p is prime and e >= 1.
std::uint64_t frobenius_order(unsigned p, unsigned e);

struct Decomposition {
  unsigned p = 0;
  unsigned e = 0;
  std::uint64_t q = 0;
  std::vector<std::pair<ClassElement, Integer>> entries;  // sorted by class

  Integer total() const;
  Integer multiplicity_of(const ClassElement& cls) const;
};

/// #{c in {0..q-1}^r : [sum c_i P_i] = [qE - D]}.
Integer multiplicity(const Fan& fan, const ClassGroup& cg, const IntVector& divisor,
                     const ClassElement& cls, unsigned p, unsigned e);

/// Same count with numerical instead of linear equivalence.
Integer numerical_multiplicity(const Fan& fan, const ClassGroup& cg, const NumClass& cls,
                               unsigned p, unsigned e);

/// F^e_* O(-D) split into O(-E)^m; entries (E, m) with total rank q^d when
/// q is prime to the torsion of Cl.
Decomposition pushforward_decomposition(const Fan& fan, const ClassGroup& cg,
                                        const IntVector& divisor, unsigned p, unsigned e);

/// Nonzero classes of the pushforward of O_X; rank q^d - 1.
Decomposition trace_kernel_decomposition(const Fan& fan, const ClassGroup& cg, unsigned p,
                                         unsigned e);

/// Entries (D, m) counting c with [sum c_i P_i] = [qD - E].
Decomposition twisted_decomposition(const Fan& fan, const ClassGroup& cg, const ClassElement& cls,
                                    unsigned p, unsigned e);

/// Lattice point of the half-open zonotope sum [0,1) pi_i.
bool in_fsupp(const ClassGroup& cg, const NumClass& v);

struct FSuppEntry {
  NumClass cls;
  Rational alpha;
  bool big = false;
  bool nef = false;
  bool ample = false;
};

std::vector<FSuppEntry> fsupp(const Fan& fan, const ClassGroup& cg);

/// Volume of {c in [0,1]^r : sum c_i pi_i = v} against the numerical
/// kernel lattice; 0 outside the support or on degenerate slices.
Rational alpha(const Fan& fan, const ClassGroup& cg, const NumClass& v);

struct SignatureReport {
  Rational ample_signature;
  Rational nef_signature;
  Rational total_big_mass;
};

SignatureReport signatures(const std::vector<FSuppEntry>& support);
SignatureReport signatures(const Fan& fan, const ClassGroup& cg);

struct FEffectiveCones {
  Cone frob;  // generated by the support
  Cone fe;    // its dual, as extreme rays
};

FEffectiveCones f_effective_cones(const ClassGroup& cg, const std::vector<FSuppEntry>& support);

/// Divisorial contraction whose relation has exceptional coefficient -1.
struct InertContraction {
  Fan blown_up;
  Fan target;
  std::size_t exceptional = 0;
  PrimitiveRelation relation;
  std::vector<std::size_t> target_rays;  // target ray j is blown_up ray target_rays[j]
};

/// Throws NotInert.
InertContraction inert_contraction(const Fan& blown_up, const PrimitiveRelation& relation);

/// Pullback of a target divisor: strict transform plus (sum b_i c_i) on the
/// exceptional ray.
IntVector pullback(const InertContraction& contraction, const IntVector& target_divisor);

struct InertInterval {
  Integer low;
  Integer high;
};

/// Range of floor(D~ . R) over [0,1)-representatives D of delta on the target.
InertInterval inert_interval(const InertContraction& contraction, const ClassGroup& target_cg,
                             const NumClass& delta);

struct VolumeCheck {
  Rational lhs;  // normalized volume of P_E
  Rational rhs;  // sum over big support of alpha(D) h0(E - D)
};

/// Throws RequiresSmooth.
VolumeCheck volume_check(const Fan& fan, const ClassGroup& cg, const IntVector& divisor);

/// big(v) iff -K - v lies in the support.
bool big_pairing_check(const ClassGroup& cg, const NumClass& v);

}  // namespace toricfrob
