#include <gtest/gtest.h>

#include "support.hpp"
#include "toricfrob/catalog.hpp"
#include "toricfrob/classes.hpp"

using namespace toricfrob;
using namespace testing_support;

TEST(ClassGroup, RanksAndTorsion) {
  for (const auto& name : full_catalog()) {
    SCOPED_TRACE(name);
    const Fan f = catalog(name);
    const ClassGroup cg(f);
    EXPECT_EQ(cg.rank(), f.rays.size() - f.dim);
    EXPECT_TRUE(cg.torsion().empty());
  }
  // Rays spanning an index-3 sublattice: Z + Z/3.
  const Fan quotient = make_fan(2, {ivec({2, -1}), ivec({-1, 2}), ivec({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
  const ClassGroup cg(quotient);
  EXPECT_EQ(cg.rank(), 1u);
  ASSERT_EQ(cg.torsion().size(), 1u);
  EXPECT_EQ(cg.torsion()[0], 3);
}

TEST(ClassGroup, PrincipalDivisorsVanish) {
  for (const auto& name : full_catalog()) {
    SCOPED_TRACE(name);
    const Fan f = catalog(name);
    const ClassGroup cg(f);
    for (std::size_t j = 0; j < f.dim; ++j) {
      IntVector div;
      for (const auto& u : f.rays) div.push_back(u[j]);
      EXPECT_TRUE(cg.element(div).is_zero());
    }
    // Representatives map back to their class.
    for (std::size_t i = 0; i < cg.rank(); ++i) {
      IntVector c(cg.rank());
      c[i] = 1;
      EXPECT_EQ(cg.numerical(cg.representative(NumClass{c})).coords, c);
    }
  }
}

TEST(ClassGroup, KnownRayClasses) {
  const ClassGroup p11(catalog("product(1,1)"));
  EXPECT_EQ(p11.ray_classes(),
            (std::vector<IntVector>{ivec({1, 0}), ivec({1, 0}), ivec({0, 1}), ivec({0, 1})}));
  for (unsigned n = 1; n <= 4; ++n) {
    const ClassGroup s(catalog("hirzebruch(" + std::to_string(n) + ")"));
    const long k = static_cast<long>(n);
    EXPECT_EQ(s.ray_classes(),
              (std::vector<IntVector>{ivec({1, 0}), ivec({0, 1}), ivec({1, 0}), ivec({k, 1})}));
  }
}

TEST(ClassGroup, NumericalKernelIsTheLatticeOfNumericallyTrivialDivisors) {
  const Fan f = catalog("delpezzo(2)");
  const ClassGroup cg(f);
  const IntMatrix& L = cg.numerical_kernel();
  EXPECT_EQ(L.cols(), f.dim);
  for (std::size_t j = 0; j < L.cols(); ++j) EXPECT_TRUE(is_zero(cg.numerical(L.column(j)).coords));
  // Torsion-free: the kernel is exactly the principal lattice.
  for (std::size_t j = 0; j < f.dim; ++j) EXPECT_TRUE(solve_integer(L, cg.principal().column(j)));
}

TEST(Cones, ProjectivePlaneAndHirzebruch) {
  const Fan p2 = catalog("projective(2)");
  const ClassGroup cg2(p2);
  EXPECT_EQ(extreme_rays(eff_cone(cg2)), (std::vector<IntVector>{ivec({1})}));
  EXPECT_EQ(nef_cone(p2, cg2).generators, (std::vector<IntVector>{ivec({1})}));

  const Fan s2 = catalog("hirzebruch(2)");
  const ClassGroup cg(s2);
  EXPECT_EQ(extreme_rays(eff_cone(cg)), (std::vector<IntVector>{ivec({0, 1}), ivec({1, 0})}));
  EXPECT_EQ(nef_cone(s2, cg).generators, (std::vector<IntVector>{ivec({1, 0}), ivec({2, 1})}));
  EXPECT_TRUE(big_test(cg, NumClass{ivec({1, 1})}));
  EXPECT_FALSE(big_test(cg, NumClass{ivec({1, 0})}));
  EXPECT_EQ(anticanonical(cg).free.coords, ivec({4, 2}));
}

TEST(Cones, NefLiesInMovingLiesInEffective) {
  for (const auto& name : full_catalog()) {
    SCOPED_TRACE(name);
    const Fan f = catalog(name);
    const ClassGroup cg(f);
    const Cone eff = eff_cone(cg), mov = moving_cone(cg), nef = nef_cone(f, cg);
    for (const auto& g : nef.generators) EXPECT_TRUE(membership(mov, g));
    for (const auto& g : mov.generators) EXPECT_TRUE(membership(eff, g));
  }
}

TEST(Intersections, AgainstWallCurves) {
  // On a smooth surface D_i . D_i = -a where u_{i-1} + u_{i+1} = a u_i.
  const Fan f = catalog("hirzebruch(3)");
  const ClassGroup cg(f);
  for (const auto& w : walls(f)) {
    const std::size_t ray = w.face.front();
    IntVector d(f.rays.size());
    d[ray] = 1;
    const Rational self = intersection_number(cg, cg.element(d), w.relation);
    EXPECT_EQ(self, Rational(w.relation[ray]));
    IntVector other(f.rays.size());
    other[w.ray_a] = 1;
    EXPECT_EQ(intersection_number(cg, cg.element(other), w.relation), 1);
  }
}

TEST(GlobalSections, MatchNaiveCount) {
  const Fan f = catalog("delpezzo(1)");
  for (const auto& a : {ivec({1, 0, 0, 0}), ivec({2, 1, 0, 0}), ivec({0, 0, 0, 1}), ivec({1, 1, 1, 1}),
                        ivec({-1, 0, 0, 0})}) {
    long naive = 0;
    for (long x = -10; x <= 10; ++x)
      for (long y = -10; y <= 10; ++y) {
        bool ok = true;
        for (std::size_t i = 0; i < f.rays.size(); ++i)
          if (f.rays[i][0] * x + f.rays[i][1] * y < -a[i]) ok = false;
        naive += ok;
      }
    EXPECT_EQ(h0(f, a), naive);
  }
}
