#pragma once

#include <random>
#include <vector>

#include "toricfrob/exactlin.hpp"

namespace testing_support {

using toricfrob::Integer;
using toricfrob::IntMatrix;
using toricfrob::IntVector;
using toricfrob::Rational;
using toricfrob::RatVector;

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline IntVector ivec(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline RatVector rvec(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// Cofactor expansion; exponential but independent of the library.
inline Integer cofactor_determinant(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = a(i, k);
    const Integer term = a(0, j) * cofactor_determinant(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

/// Calls visit on every vector in {0..q-1}^n.
template <class F>
void for_each_box_point(std::size_t n, long q, F&& visit) {
  std::vector<long> c(n, 0);
  for (;;) {
    visit(c);
    std::size_t j = 0;
    while (j < n && ++c[j] == q) c[j++] = 0;
    if (j == n) return;
  }
}

}  // namespace testing_support
