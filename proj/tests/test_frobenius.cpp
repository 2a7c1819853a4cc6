#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "support.hpp"
#include "toricfrob/catalog.hpp"
#include "toricfrob/frobenius.hpp"
#include "toricfrob/mori.hpp"

using namespace toricfrob;
using namespace testing_support;

namespace {

// Whether a in Z^r is <m, u_i> for some m in Z^d.
bool is_principal(const Fan& f, const IntVector& a) {
  const RatMatrix B = to_rational(ray_matrix(f));
  const auto m = solve_rational(B, to_rational(a));
  if (!m) return false;
  for (const auto& x : *m)
    if (x.get_den() != 1) return false;
  return true;
}

// m(E; q) for F_* O(-D) by sweeping every coefficient vector c in {0..q-1}^r.
Integer brute_multiplicity(const Fan& f, const ClassGroup& cg, const IntVector& divisor,
                           const ClassElement& cls, long q) {
  const IntVector rep = cg.representative(cls);
  Integer count = 0;
  for_each_box_point(f.rays.size(), q, [&](const std::vector<long>& c) {
    IntVector diff(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) diff[i] = Integer(c[i]) - (q * rep[i] - divisor[i]);
    if (is_principal(f, diff)) ++count;
  });
  return count;
}

Integer power(long base, std::size_t exp) {
  Integer out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

std::set<NumClass> support_classes(const Decomposition& dec) {
  std::set<NumClass> out;
  for (const auto& [cls, m] : dec.entries)
    if (!is_zero(cls.free.coords)) out.insert(cls.free);
  return out;
}

std::set<NumClass> fsupp_classes(const std::vector<FSuppEntry>& support) {
  std::set<NumClass> out;
  for (const auto& e : support) out.insert(e.cls);
  return out;
}

}  // namespace

TEST(Multiplicity, AgreesWithCoefficientSweep) {
  const Fan quotient = make_fan(2, {ivec({2, -1}), ivec({-1, 2}), ivec({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
  std::vector<std::pair<Fan, IntVector>> cases{
      {catalog("projective(2)"), ivec({0, 0, 0})},
      {catalog("product(1,1)"), ivec({1, 0, 0, 0})},
      {catalog("hirzebruch(2)"), ivec({0, 1, 0, 0})},
      {catalog("delpezzo(1)"), ivec({0, 0, 0, 1})},
      {catalog("weighted_projective(1,1,2)"), ivec({0, 0, 1})},
      {quotient, ivec({1, 0, 0})},
  };
  for (const auto& [f, divisor] : cases) {
    SCOPED_TRACE(f.name.empty() ? "quotient" : f.name);
    const ClassGroup cg(f);
    for (unsigned p : {2u, 3u}) {
      const auto dec = pushforward_decomposition(f, cg, divisor, p, 1);
      const bool coprime = std::all_of(cg.torsion().begin(), cg.torsion().end(),
                                       [p](const Integer& t) { return gcd(t, Integer(p)) == 1; });
      if (coprime) EXPECT_EQ(dec.total(), power(p, f.dim));
      for (const auto& [cls, m] : dec.entries) {
        EXPECT_EQ(m, brute_multiplicity(f, cg, divisor, cls, p));
        EXPECT_EQ(m, multiplicity(f, cg, divisor, cls, p, 1));
      }
    }
  }
}

TEST(TraceKernel, RankTotalsAcrossCatalog) {
  for (const auto& name : full_catalog()) {
    SCOPED_TRACE(name);
    const Fan f = catalog(name);
    const ClassGroup cg(f);
    for (unsigned p : {2u, 3u}) {
      for (unsigned e : {1u, 2u, 3u}) {
        const auto dec = trace_kernel_decomposition(f, cg, p, e);
        EXPECT_EQ(dec.total(), power(dec.q, f.dim) - 1);
        const auto full = pushforward_decomposition(f, cg, IntVector(f.rays.size()), p, e);
        EXPECT_EQ(full.total(), power(full.q, f.dim));
      }
    }
  }
}

TEST(TraceKernel, SupportIsIndependentOfCharacteristic) {
  for (const auto& name : full_catalog()) {
    const Fan f = catalog(name);
    if (f.dim > 3) continue;
    SCOPED_TRACE(name);
    const ClassGroup cg(f);
    const auto expected = fsupp_classes(fsupp(f, cg));
    EXPECT_EQ(support_classes(trace_kernel_decomposition(f, cg, 2, 6)), expected);
    EXPECT_EQ(support_classes(trace_kernel_decomposition(f, cg, 3, 4)), expected);
  }
}

TEST(TraceKernel, BudgetIsEnforced) {
  const Fan f = catalog("projective(3)");
  const ClassGroup cg(f);
  EXPECT_THROW(trace_kernel_decomposition(f, cg, 2, 9), Error);
  try {
    trace_kernel_decomposition(f, cg, 2, 9);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  EXPECT_THROW(frobenius_order(4, 1), Error);
}

TEST(Support, KnownSmallCases) {
  const Fan p2 = catalog("projective(2)");
  const auto s2 = fsupp(p2, ClassGroup(p2));
  ASSERT_EQ(s2.size(), 2u);
  EXPECT_EQ(s2[0].cls.coords, ivec({1}));
  EXPECT_EQ(s2[1].cls.coords, ivec({2}));
  EXPECT_EQ(s2[0].alpha, Rational(1, 2));
  EXPECT_EQ(s2[1].alpha, Rational(1, 2));

  const Fan p11 = catalog("product(1,1)");
  const auto s11 = fsupp(p11, ClassGroup(p11));
  ASSERT_EQ(s11.size(), 3u);
  EXPECT_EQ(s11[2].cls.coords, ivec({1, 1}));
  EXPECT_EQ(s11[2].alpha, 1);
  EXPECT_TRUE(s11[2].ample);
  EXPECT_FALSE(s11[0].big);

  const Fan p1 = catalog("projective(1)");
  const auto s1 = fsupp(p1, ClassGroup(p1));
  ASSERT_EQ(s1.size(), 1u);
  EXPECT_EQ(s1[0].alpha, 1);
}

TEST(Support, MassAndBigness) {
  for (const auto& name : full_catalog()) {
    SCOPED_TRACE(name);
    const Fan f = catalog(name);
    const ClassGroup cg(f);
    const auto support = fsupp(f, cg);
    Rational mass = 0;
    for (const auto& e : support) {
      mass += e.alpha;
      EXPECT_EQ(e.big, e.alpha > 0);
      if (e.ample) EXPECT_TRUE(e.nef);
      EXPECT_EQ(e.nef, membership(nef_cone(f, cg), e.cls.coords));
    }
    EXPECT_EQ(mass, 1);
    EXPECT_EQ(signatures(support).total_big_mass, 1);
  }
}

TEST(Support, DensityApproachesCountingRatio) {
  for (const auto& name : {"projective(2)", "hirzebruch(2)", "delpezzo(2)", "fatal_example"}) {
    SCOPED_TRACE(name);
    const Fan f = catalog(name);
    const ClassGroup cg(f);
    const auto dec = trace_kernel_decomposition(f, cg, 2, f.dim == 2 ? 7 : 5);
    const Rational qd(power(dec.q, f.dim));
    std::map<NumClass, Integer> counts;
    for (const auto& [cls, m] : dec.entries) counts[cls.free] += m;
    for (const auto& e : fsupp(f, cg)) {
      const Rational err = abs(Rational(counts[e.cls]) / qd - e.alpha);
      EXPECT_LE(err, ratio(4, static_cast<long>(dec.q)));
    }
  }
}

TEST(Support, BigClassesComeInPairs) {
  for (const auto& name : full_catalog()) {
    SCOPED_TRACE(name);
    const Fan f = catalog(name);
    const ClassGroup cg(f);
    for (const auto& e : fsupp(f, cg)) EXPECT_TRUE(big_pairing_check(cg, e.cls)) << name;
  }
}

TEST(Support, FibrationPullbackStaysInSupport) {
  // Products project onto their second factor; boundary divisors pull back
  // to the matching rays.
  for (const auto& [dims, base] : std::vector<std::pair<std::string, std::string>>{
           {"product(1,1)", "projective(1)"}, {"product(1,2)", "projective(2)"},
           {"product(2,2)", "projective(2)"}}) {
    SCOPED_TRACE(dims);
    const Fan x = catalog(dims), s = catalog(base);
    const ClassGroup cx(x), cs(s);
    const std::size_t offset = x.rays.size() - s.rays.size();
    const auto sx = fsupp_classes(fsupp(x, cx));
    for (const auto& e : fsupp(s, cs)) {
      const IntVector rep = cs.representative(e.cls);
      IntVector pulled(x.rays.size());
      for (std::size_t j = 0; j < rep.size(); ++j) pulled[offset + j] = rep[j];
      EXPECT_TRUE(sx.count(cx.numerical(pulled)));
    }
  }
}

TEST(Twisted, ProductOfLinesUnitClasses) {
  const Fan f = catalog("product(1,1)");
  const ClassGroup cg(f);
  for (unsigned e : {1u, 2u}) {
    const auto q = static_cast<long>(frobenius_order(2, e));
    const auto dec = twisted_decomposition(f, cg, cg.lift(NumClass{ivec({1, 0})}), 2, e);
    EXPECT_EQ(dec.multiplicity_of(cg.lift(NumClass{ivec({1, 0})})), q);
    EXPECT_EQ(dec.multiplicity_of(cg.lift(NumClass{ivec({1, 1})})), q * (q - 1));
    EXPECT_EQ(dec.total(), q * q);
    // The rank count forces q^2 copies for the diagonal class.
    const auto diag = twisted_decomposition(f, cg, cg.lift(NumClass{ivec({1, 1})}), 2, e);
    EXPECT_EQ(diag.multiplicity_of(cg.lift(NumClass{ivec({1, 1})})), q * q);
  }
  const auto zero = twisted_decomposition(f, cg, cg.lift(NumClass{ivec({0, 0})}), 3, 1);
  const auto plain = pushforward_decomposition(f, cg, IntVector(4), 3, 1);
  EXPECT_EQ(zero.entries, plain.entries);
}

TEST(Twisted, CompositionOfFrobeniusPowers) {
  for (const auto& name : {"projective(1)", "product(1,1)"}) {
    SCOPED_TRACE(name);
    const Fan f = catalog(name);
    const ClassGroup cg(f);
    const auto big_q = pushforward_decomposition(f, cg, IntVector(f.rays.size()), 2, 3);
    const auto outer = pushforward_decomposition(f, cg, IntVector(f.rays.size()), 2, 2);
    std::map<ClassElement, Integer> composed;
    for (const auto& [cls, m] : outer.entries)
      for (const auto& [d, k] : twisted_decomposition(f, cg, cls, 2, 1).entries) composed[d] += m * k;
    std::map<ClassElement, Integer> direct(big_q.entries.begin(), big_q.entries.end());
    EXPECT_EQ(composed, direct);
  }
}

TEST(Inert, FatalExampleIntervals) {
  const Fan f = catalog("fatal_example");
  std::optional<PrimitiveRelation> rel;
  for (const auto& r : primitive_relations(f))
    if (r.coefficients == ivec({0, 3, 2, 0, -1})) rel = r;
  ASSERT_TRUE(rel);
  const auto c = inert_contraction(f, *rel);
  const ClassGroup target(c.target);
  std::vector<Integer> lows, highs;
  for (long k = 1; k <= 3; ++k) {
    const auto iv = inert_interval(c, target, NumClass{ivec({k})});
    lows.push_back(iv.low);
    highs.push_back(iv.high);
  }
  EXPECT_EQ(lows, (std::vector<Integer>{0, 0, 2}));
  EXPECT_EQ(highs, (std::vector<Integer>{2, 4, 4}));
}

TEST(Inert, BlownUpPlaneIntervals) {
  const Fan f = catalog("delpezzo(1)");
  std::optional<PrimitiveRelation> rel;
  for (const auto& r : primitive_relations(f))
    if (r.negative.size() == 1) rel = r;
  ASSERT_TRUE(rel);
  const auto c = inert_contraction(f, *rel);
  const ClassGroup target(c.target);
  const auto one = inert_interval(c, target, NumClass{ivec({1})});
  const auto two = inert_interval(c, target, NumClass{ivec({2})});
  EXPECT_EQ(one.low, 0);
  EXPECT_EQ(one.high, 1);
  EXPECT_EQ(two.low, 1);
  EXPECT_EQ(two.high, 1);
  // Pullback keeps the class of the strict transform plus the exceptional part.
  const IntVector pulled = pullback(c, ivec({1, 0, 0}));
  EXPECT_EQ(pulled[c.exceptional], 1);
}

TEST(Inert, RejectsNonInertRelations) {
  const Fan f = catalog("hirzebruch(2)");
  for (const auto& r : primitive_relations(f)) {
    if (r.negative.size() == 1 && r.coefficients[r.negative[0]] == -2) {
      EXPECT_THROW(inert_contraction(f, r), Error);
    }
  }
}

TEST(Volume, ProjectiveExamples) {
  const Fan p2 = catalog("projective(2)");
  const ClassGroup cg2(p2);
  const auto v = volume_check(p2, cg2, ivec({2, 0, 0}));
  EXPECT_EQ(v.lhs, 2);
  EXPECT_EQ(v.rhs, 2);
  const Fan p1 = catalog("projective(1)");
  const auto w = volume_check(p1, ClassGroup(p1), ivec({3, 0}));
  EXPECT_EQ(w.lhs, 3);
  EXPECT_EQ(w.rhs, 3);
  const auto none = volume_check(p2, cg2, ivec({-1, 0, 0}));
  EXPECT_EQ(none.lhs, 0);
  EXPECT_EQ(none.rhs, 0);
  EXPECT_THROW(volume_check(catalog("fatal_example"), ClassGroup(catalog("fatal_example")), IntVector(5)),
               Error);
}
