#include <gtest/gtest.h>

#include "support.hpp"
#include "toricfrob/exactlin.hpp"

using namespace toricfrob;
using namespace testing_support;

namespace {

bool is_diagonal_chain(const IntMatrix& S, std::size_t rank) {
  for (std::size_t i = 0; i < S.rows(); ++i)
    for (std::size_t j = 0; j < S.cols(); ++j)
      if (i != j && S(i, j) != 0) return false;
  for (std::size_t i = 0; i < rank; ++i) {
    if (S(i, i) <= 0) return false;
    if (i + 1 < rank && S(i + 1, i + 1) % S(i, i) != 0) return false;
  }
  for (std::size_t i = rank; i < std::min(S.rows(), S.cols()); ++i)
    if (S(i, i) != 0) return false;
  return true;
}

}  // namespace

TEST(SmithNormalForm, RandomMatricesSatisfyDefiningIdentity) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    const IntMatrix A = random_matrix(rng, rows, cols, 6);
    const auto snf = smith_normal_form(A);
    EXPECT_EQ(snf.U * A * snf.V, snf.S);
    EXPECT_TRUE(abs(cofactor_determinant(snf.U)) == 1);
    EXPECT_TRUE(abs(cofactor_determinant(snf.V)) == 1);
    EXPECT_TRUE(is_diagonal_chain(snf.S, snf.rank));
    EXPECT_EQ(snf.rank, rank(to_rational(A)));
  }
}

TEST(SmithNormalForm, KnownInvariantFactors) {
  const IntMatrix A = IntMatrix::from_rows({ivec({2, 4, 4}), ivec({-6, 6, 12}), ivec({10, -4, -16})});
  const auto f = smith_normal_form(A).invariant_factors();
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], 2);
  EXPECT_EQ(f[1], 6);
  EXPECT_EQ(f[2], 12);
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const IntMatrix A = random_matrix(rng, n, n, 9);
    EXPECT_EQ(determinant(A), cofactor_determinant(A));
  }
}

TEST(KernelLattice, SpansEveryIntegerKernelVector) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + rng() % 3, cols = rows + 1 + rng() % 3;
    const IntMatrix A = random_matrix(rng, rows, cols, 4);
    const IntMatrix K = kernel_lattice(A);
    for (std::size_t j = 0; j < K.cols(); ++j) EXPECT_TRUE(is_zero(A * K.column(j)));
    // Integer points of the rational kernel must be integer combinations of K.
    for (const auto& v : rational_kernel(to_rational(A))) {
      const IntVector w = clear_denominators(v);
      EXPECT_TRUE(solve_integer(K, w).has_value());
    }
  }
}

TEST(SolveInteger, DetectsLatticeMembership) {
  const IntMatrix A = IntMatrix::from_rows({ivec({2, 0}), ivec({0, 3})});
  EXPECT_TRUE(solve_integer(A, ivec({4, 9})).has_value());
  EXPECT_FALSE(solve_integer(A, ivec({1, 0})).has_value());
  const auto x = solve_integer(A, ivec({-2, 6}));
  ASSERT_TRUE(x);
  EXPECT_EQ(A * *x, ivec({-2, 6}));
}

TEST(RationalAlgebra, InverseTimesMatrixIsIdentity) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const IntMatrix A = random_matrix(rng, n, n, 5);
    if (determinant(A) == 0) {
      EXPECT_THROW(inverse(to_rational(A)), Error);
      continue;
    }
    EXPECT_EQ(inverse(to_rational(A)) * to_rational(A), RatMatrix::identity(n));
  }
}

TEST(Vectors, PrimitiveAndDenominators) {
  EXPECT_EQ(primitive(ivec({4, -6, 8})), ivec({2, -3, 4}));
  EXPECT_EQ(primitive(ivec({0, 0})), ivec({0, 0}));
  EXPECT_EQ(content(ivec({0, -9, 6})), 3);
  const RatVector r{Rational(1, 2), Rational(-1, 3)};
  EXPECT_EQ(clear_denominators(r), ivec({3, -2}));
  EXPECT_TRUE(lex_less(ivec({0, 5}), ivec({1, -5})));
}
