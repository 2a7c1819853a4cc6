#include <gtest/gtest.h>

#include "support.hpp"
#include "toricfrob/exactlin.hpp"

using namespace toricfrob;
using namespace testing_support;

namespace {

// Optimum of c.x over {x in R^2 : A x <= b} by checking every pairwise
// intersection of constraint lines; assumes the region is bounded.
std::optional<Rational> vertex_brute_force(const std::vector<IntVector>& A, const IntVector& b,
                                           const IntVector& c, bool maximize) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = i + 1; j < A.size(); ++j) {
      const Integer det = A[i][0] * A[j][1] - A[i][1] * A[j][0];
      if (det == 0) continue;
      const Rational x = ratio(b[i] * A[j][1] - A[i][1] * b[j], det);
      const Rational y = ratio(A[i][0] * b[j] - b[i] * A[j][0], det);
      bool feasible = true;
      for (std::size_t k = 0; k < A.size(); ++k) {
        const Rational lhs = Rational(A[k][0]) * x + Rational(A[k][1]) * y;
        if (lhs > Rational(b[k])) feasible = false;
      }
      if (!feasible) continue;
      const Rational v = Rational(c[0]) * x + Rational(c[1]) * y;
      if (!best || (maximize ? v > *best : v < *best)) best = v;
    }
  }
  return best;
}

}  // namespace

TEST(Simplex, MatchesVertexEnumerationOnRandomPolygons) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> coef(-5, 5), rhs(0, 8);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    // A box keeps every instance bounded; random cuts add structure.
    std::vector<IntVector> A{ivec({1, 0}), ivec({-1, 0}), ivec({0, 1}), ivec({0, -1})};
    IntVector b{Integer(6), Integer(6), Integer(6), Integer(6)};
    const int cuts = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < cuts; ++k) {
      A.push_back(ivec({coef(rng), coef(rng)}));
      b.emplace_back(rhs(rng) - 3);
    }
    const IntVector c = ivec({coef(rng), coef(rng)});

    // Slack form: A x + s = b, x free, s >= 0.
    const std::size_t m = A.size();
    LinearProgram lp;
    lp.objective.assign(2 + m, Rational(0));
    lp.objective[0] = c[0];
    lp.objective[1] = c[1];
    lp.equality_matrix = RatMatrix(m, 2 + m);
    for (std::size_t i = 0; i < m; ++i) {
      lp.equality_matrix(i, 0) = A[i][0];
      lp.equality_matrix(i, 1) = A[i][1];
      lp.equality_matrix(i, 2 + i) = 1;
      lp.equality_rhs.emplace_back(b[i]);
    }
    lp.lower.assign(2 + m, Rational(0));
    lp.upper.assign(2 + m, std::nullopt);
    lp.lower[0] = lp.lower[1] = std::nullopt;

    for (bool maximize : {false, true}) {
      const auto expected = vertex_brute_force(A, b, c, maximize);
      const auto got = lp_optimize(lp, maximize ? Sense::Maximize : Sense::Minimize);
      if (!expected) {
        EXPECT_EQ(got.status, LpStatus::Infeasible);
        continue;
      }
      ASSERT_TRUE(got.optimal());
      EXPECT_EQ(got.value, *expected);
      EXPECT_EQ(lp.equality_matrix * got.witness, lp.equality_rhs);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Simplex, ReportsUnboundedAndInfeasible) {
  LinearProgram lp = LinearProgram::nonnegative(2);
  lp.objective = rvec({1, 1});
  EXPECT_EQ(lp_optimize(lp, Sense::Maximize).status, LpStatus::Unbounded);
  EXPECT_EQ(lp_optimize(lp, Sense::Minimize).value, 0);

  lp.equality_matrix = RatMatrix::from_rows({rvec({1, 1})});
  lp.equality_rhs = rvec({-1});
  EXPECT_EQ(lp_optimize(lp, Sense::Minimize).status, LpStatus::Infeasible);
  EXPECT_FALSE(lp_feasible_point(lp).has_value());
}

TEST(Simplex, HandlesDegenerateAndRedundantRows) {
  // x + y = 1 stated twice, plus the sum of both rows.
  LinearProgram lp = LinearProgram::nonnegative(3);
  lp.objective = rvec({1, 2, 0});
  lp.equality_matrix = RatMatrix::from_rows({rvec({1, 1, 0}), rvec({1, 1, 0}), rvec({2, 2, 0})});
  lp.equality_rhs = rvec({1, 1, 2});
  const auto r = lp_optimize(lp, Sense::Maximize);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.value, 2);
}

TEST(Simplex, RespectsUpperOnlyAndBoxedBounds) {
  LinearProgram lp;
  lp.objective = rvec({1, -1});
  lp.equality_matrix = RatMatrix(0, 2);
  lp.lower = {std::nullopt, Rational(-3)};
  lp.upper = {Rational(5, 2), Rational(7)};
  const auto hi = lp_optimize(lp, Sense::Maximize);
  ASSERT_TRUE(hi.optimal());
  EXPECT_EQ(hi.value, Rational(11, 2));
  EXPECT_EQ(lp_optimize(lp, Sense::Minimize).status, LpStatus::Unbounded);
}
