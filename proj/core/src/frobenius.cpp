#include "toricfrob/frobenius.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toricfrob {

std::uint64_t frobenius_order(unsigned p, unsigned e) {
  if (p < 2 || e < 1) throw Error(ErrorCode::InvalidArgument, "need a prime p and e >= 1");
  for (unsigned f = 2; f * f <= p; ++f) {
    if (p % f == 0) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  }
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kEnumerationBudget) throw Error(ErrorCode::BudgetExceeded, "q = p^e is too large");
  }
  return q;
}

namespace {

void check_budget(std::uint64_t q, std::size_t dim) {
  std::uint64_t sweep = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    sweep *= q;
    if (sweep > kEnumerationBudget) {
      throw Error(ErrorCode::BudgetExceeded,
                  "sweep of q^d = " + std::to_string(q) + "^" + std::to_string(dim) +
                      " exceeds the enumeration budget");
    }
  }
}

// #{n in Z^k : 0 <= base + L n <= q - 1}
Integer count_box_coset(const IntVector& base, const IntMatrix& L, std::uint64_t q) {
  HPolytope P(L.cols());
  const Integer top(static_cast<unsigned long>(q - 1));
  for (std::size_t i = 0; i < L.rows(); ++i) {
    IntVector row = L.row(i);
    P.add_inequality(row, Integer(-base[i]));
    for (auto& x : row) x = -x;
    P.add_inequality(row, Integer(base[i] - top));
  }
  return count_lattice_points(P);
}

Integer floor_div(long long a, long long b) {
  long long d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return Integer(static_cast<long>(d));
}

}  // namespace

Integer Decomposition::total() const {
  Integer t = 0;
  for (const auto& [cls, m] : entries) t += m;
  return t;
}

Integer Decomposition::multiplicity_of(const ClassElement& cls) const {
  for (const auto& [c, m] : entries)
    if (c == cls) return m;
  return 0;
}

Integer multiplicity(const Fan& fan, const ClassGroup& cg, const IntVector& divisor,
                     const ClassElement& cls, unsigned p, unsigned e) {
  const std::uint64_t q = frobenius_order(p, e);
  check_budget(q, fan.dim);
  const IntVector rep = cg.representative(cls);
  IntVector base(rep.size());
  const Integer qz(static_cast<unsigned long>(q));
  for (std::size_t i = 0; i < rep.size(); ++i) base[i] = qz * rep[i] - divisor[i];
  return count_box_coset(base, cg.principal(), q);
}

Integer numerical_multiplicity(const Fan& fan, const ClassGroup& cg, const NumClass& cls,
                               unsigned p, unsigned e) {
  const std::uint64_t q = frobenius_order(p, e);
  check_budget(q, fan.dim);
  const IntVector rep = cg.representative(cls);
  IntVector base(rep.size());
  const Integer qz(static_cast<unsigned long>(q));
  for (std::size_t i = 0; i < rep.size(); ++i) base[i] = qz * rep[i];
  return count_box_coset(base, cg.numerical_kernel(), q);
}

Decomposition pushforward_decomposition(const Fan& fan, const ClassGroup& cg,
                                        const IntVector& divisor, unsigned p, unsigned e) {
  const std::uint64_t q = frobenius_order(p, e);
  check_budget(q, fan.dim);
  const std::size_t d = fan.dim, r = fan.rays.size();
  if (divisor.size() != r) throw Error(ErrorCode::DimensionMismatch, "divisor length differs from ray count");

  std::vector<std::vector<long long>> rays(r, std::vector<long long>(d));
  std::vector<long long> shift(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (!fan.rays[i][j].fits_slong_p()) throw Error(ErrorCode::BudgetExceeded, "ray entries too large");
      rays[i][j] = fan.rays[i][j].get_si();
    }
    if (!divisor[i].fits_slong_p()) throw Error(ErrorCode::BudgetExceeded, "divisor entries too large");
    shift[i] = divisor[i].get_si();
  }

  // Distinct m mod q give distinct c unless q shares a factor with the torsion.
  bool injective = true;
  for (const auto& t : cg.torsion()) {
    if (gcd(t, Integer(static_cast<unsigned long>(q))) > 1) injective = false;
  }

  std::map<ClassElement, Integer> counts;
  std::set<std::vector<long long>> seen;
  const long long qq = static_cast<long long>(q);
  std::vector<long long> m(d, 0), c(r);
  IntVector x(r);
  for (;;) {
    for (std::size_t i = 0; i < r; ++i) {
      long long v = -shift[i];
      for (std::size_t j = 0; j < d; ++j) v += rays[i][j] * m[j];
      // c = v mod q in [0, q); the summand is O(-E) with E = -floor(v / q).
      c[i] = ((v % qq) + qq) % qq;
      x[i] = -floor_div(v, qq);
    }
    if (injective || seen.insert(c).second) counts[cg.element(x)] += 1;

    std::size_t j = 0;
    while (j < d && ++m[j] == qq) m[j++] = 0;
    if (j == d) break;
  }

  Decomposition out{p, e, q, {}};
  for (auto& [cls, n] : counts) out.entries.emplace_back(cls, n);
  return out;
}

Decomposition trace_kernel_decomposition(const Fan& fan, const ClassGroup& cg, unsigned p,
                                         unsigned e) {
  auto dec = pushforward_decomposition(fan, cg, IntVector(fan.rays.size()), p, e);
  std::erase_if(dec.entries, [](const auto& entry) { return entry.first.is_zero(); });
  return dec;
}

Decomposition twisted_decomposition(const Fan& fan, const ClassGroup& cg, const ClassElement& cls,
                                    unsigned p, unsigned e) {
  return pushforward_decomposition(fan, cg, cg.representative(cls), p, e);
}

bool in_fsupp(const ClassGroup& cg, const NumClass& v) {
  if (is_zero(v.coords)) return false;
  return half_open_combination(cg.ray_classes(), to_rational(v.coords)).has_value();
}

namespace {

HPolytope slice(const ClassGroup& cg, const NumClass& v) {
  const std::size_t r = cg.num_rays();
  HPolytope P(r);
  for (std::size_t i = 0; i < r; ++i) {
    IntVector lo(r), hi(r);
    lo[i] = 1;
    hi[i] = -1;
    P.add_inequality(lo, Integer(0));
    P.add_inequality(hi, Integer(-1));
  }
  for (std::size_t j = 0; j < cg.rank(); ++j) P.add_equality(cg.free_projection().row(j), v.coords[j]);
  return P;
}

bool full_dimensional(const Cone& c) {
  std::vector<RatVector> rows;
  for (const auto& g : c.generators) rows.push_back(to_rational(g));
  return rank(RatMatrix::from_rows(rows, c.dim)) == c.dim;
}

}  // namespace

Rational alpha(const Fan& fan, const ClassGroup& cg, const NumClass& v) {
  (void)fan;
  if (!in_fsupp(cg, v)) return 0;
  const HPolytope P = slice(cg, v);
  const auto V = vertex_enumeration(P);
  if (affine_dimension(V.vertices) < static_cast<int>(cg.dim())) return 0;
  return lattice_volume(P, cg.numerical_kernel());
}

std::vector<FSuppEntry> fsupp(const Fan& fan, const ClassGroup& cg) {
  const std::size_t rho = cg.rank();
  std::vector<Integer> lo(rho), hi(rho);
  for (const auto& pi : cg.ray_classes()) {
    for (std::size_t j = 0; j < rho; ++j) {
      if (pi[j] < 0) lo[j] += pi[j];
      if (pi[j] > 0) hi[j] += pi[j];
    }
  }
  const Cone nef = nef_cone(fan, cg);
  const bool ample_possible = full_dimensional(nef);

  std::vector<FSuppEntry> out;
  IntVector v = lo;
  for (;;) {
    const NumClass cls{v};
    if (in_fsupp(cg, cls)) {
      FSuppEntry entry;
      entry.cls = cls;
      entry.alpha = alpha(fan, cg, cls);
      entry.big = big_test(cg, cls);
      entry.nef = membership(nef, v);
      entry.ample = ample_possible && membership(nef, v, true);
      out.push_back(std::move(entry));
    }
    std::size_t j = 0;
    while (j < rho && ++v[j] > hi[j]) {
      v[j] = lo[j];
      ++j;
    }
    if (j == rho) break;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.cls < b.cls; });
  return out;
}

SignatureReport signatures(const std::vector<FSuppEntry>& support) {
  SignatureReport s;
  for (const auto& e : support) {
    if (e.ample) s.ample_signature += e.alpha;
    if (e.nef) s.nef_signature += e.alpha;
    if (e.big) s.total_big_mass += e.alpha;
  }
  return s;
}

SignatureReport signatures(const Fan& fan, const ClassGroup& cg) {
  return signatures(fsupp(fan, cg));
}

FEffectiveCones f_effective_cones(const ClassGroup& cg, const std::vector<FSuppEntry>& support) {
  Cone frob{cg.rank(), {}};
  for (const auto& e : support) frob.generators.push_back(e.cls.coords);
  frob.generators = extreme_rays(frob);
  Cone fe{cg.rank(), extreme_rays(dual_cone(frob))};
  return {std::move(frob), std::move(fe)};
}

InertContraction inert_contraction(const Fan& blown_up, const PrimitiveRelation& relation) {
  if (relation.negative.size() != 1 || relation.coefficients[relation.negative.front()] != -1) {
    throw Error(ErrorCode::NotInert, "relation is not divisorial with exceptional coefficient -1");
  }
  InertContraction out;
  out.blown_up = blown_up;
  out.exceptional = relation.negative.front();
  out.relation = relation;
  out.target = blowdown(blown_up, out.exceptional, relation);
  for (std::size_t i = 0; i < blown_up.rays.size(); ++i)
    if (i != out.exceptional) out.target_rays.push_back(i);
  return out;
}

IntVector pullback(const InertContraction& contraction, const IntVector& target_divisor) {
  if (target_divisor.size() != contraction.target_rays.size()) {
    throw Error(ErrorCode::DimensionMismatch, "divisor length differs from target ray count");
  }
  IntVector out(contraction.blown_up.rays.size());
  Integer excess = 0;
  for (std::size_t j = 0; j < target_divisor.size(); ++j) {
    const std::size_t i = contraction.target_rays[j];
    out[i] = target_divisor[j];
    excess += contraction.relation.coefficients[i] * target_divisor[j];
  }
  out[contraction.exceptional] = excess;
  return out;
}

InertInterval inert_interval(const InertContraction& contraction, const ClassGroup& target_cg,
                             const NumClass& delta) {
  const std::size_t r = target_cg.num_rays();
  if (r != contraction.target_rays.size()) {
    throw Error(ErrorCode::DimensionMismatch, "class group belongs to a different fan");
  }
  // Variables c_0..c_{r-1} in [0,1] and a slack s >= 0 used for the upper test.
  LinearProgram lp = LinearProgram::nonnegative(r + 1);
  for (std::size_t i = 0; i < r; ++i) lp.upper[i] = Rational(1);
  lp.equality_matrix = RatMatrix(target_cg.rank(), r + 1);
  for (std::size_t j = 0; j < target_cg.rank(); ++j) {
    for (std::size_t i = 0; i < r; ++i) lp.equality_matrix(j, i) = target_cg.free_projection()(j, i);
    lp.equality_rhs.push_back(Rational(delta.coords[j]));
  }
  RatVector f(r + 1);
  for (std::size_t i = 0; i < r; ++i) f[i] = contraction.relation.coefficients[contraction.target_rays[i]];

  std::vector<std::size_t> strict(r);
  for (std::size_t i = 0; i < r; ++i) strict[i] = i;
  if (!strict_feasible_point(lp, {}, strict)) {
    throw Error(ErrorCode::InvalidArgument, "class does not lie in the Frobenius support of the target");
  }
  lp.objective = f;
  const auto lo = lp_optimize(lp, Sense::Minimize);
  const auto hi = lp_optimize(lp, Sense::Maximize);

  auto floor_of = [](const Rational& x) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return out;
  };
  InertInterval out{floor_of(lo.value), floor_of(hi.value)};

  // f >= k with every c_i < 1: f - s = k.
  LinearProgram upper = lp;
  upper.objective.assign(r + 1, Rational(0));
  RatMatrix M(lp.equality_matrix.rows() + 1, r + 1);
  for (std::size_t i = 0; i < lp.equality_matrix.rows(); ++i)
    for (std::size_t j = 0; j <= r; ++j) M(i, j) = lp.equality_matrix(i, j);
  for (std::size_t j = 0; j < r; ++j) M(lp.equality_matrix.rows(), j) = f[j];
  M(lp.equality_matrix.rows(), r) = -1;
  upper.equality_matrix = M;
  upper.equality_rhs.push_back(Rational(out.high));
  if (!strict_feasible_point(upper, {}, strict)) out.high -= 1;
  return out;
}

VolumeCheck volume_check(const Fan& fan, const ClassGroup& cg, const IntVector& divisor) {
  if (!validate(fan).smooth) throw Error(ErrorCode::RequiresSmooth, "volume identity is checked on smooth fans");
  VolumeCheck out;
  const HPolytope PE = divisor_polytope(fan, divisor);
  const auto V = vertex_enumeration(PE);
  if (affine_dimension(V.vertices) == static_cast<int>(fan.dim)) {
    out.lhs = lattice_volume(PE, IntMatrix::identity(fan.dim));
  }
  for (const auto& entry : fsupp(fan, cg)) {
    if (!entry.big) continue;
    const IntVector rep = cg.representative(entry.cls);
    IntVector rest(divisor.size());
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = divisor[i] - rep[i];
    out.rhs += entry.alpha * Rational(h0(fan, rest));
  }
  return out;
}

bool big_pairing_check(const ClassGroup& cg, const NumClass& v) {
  const NumClass partner = anticanonical(cg).free - v;
  return big_test(cg, v) == in_fsupp(cg, partner);
}

}  // namespace toricfrob
