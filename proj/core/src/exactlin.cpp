#include "toricfrob/exactlin.hpp"

#include <algorithm>
#include <utility>

namespace toricfrob {

// ---- vectors ---------------------------------------------------------------

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::InvalidArgument, "dot product length mismatch");
  }
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::InvalidArgument, "dot product length mismatch");
  }
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

IntVector primitive(const IntVector& v) {
  const Integer g = content(v);
  if (g == 0 || g == 1) return v;
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntVector clear_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (l / v[i].get_den());
  }
  return primitive(out);
}

RatVector to_rational(const IntVector& v) {
  return RatVector(v.begin(), v.end());
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const RatVector& a, const RatVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---- Smith normal form -----------------------------------------------------

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(S(i, i));
  return out;
}

namespace {

// Moves the smallest nonzero |entry| of S[t.., t..] to (t, t).
bool bring_smallest_to_pivot(IntMatrix& S, IntMatrix& U, IntMatrix& V,
                             std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = t; i < S.rows(); ++i)
    for (std::size_t j = t; j < S.cols(); ++j) {
      if (S(i, j) == 0) continue;
      if (!best || abs(S(i, j)) < abs(S(best->first, best->second))) {
        best = {i, j};
      }
    }
  if (!best) return false;
  S.swap_rows(t, best->first);
  U.swap_rows(t, best->first);
  S.swap_cols(t, best->second);
  V.swap_cols(t, best->second);
  return true;
}

// Same, restricted to row t and column t.
void bring_smallest_cross_to_pivot(IntMatrix& S, IntMatrix& U, IntMatrix& V,
                                   std::size_t t) {
  std::size_t bi = t, bj = t;
  for (std::size_t i = t + 1; i < S.rows(); ++i) {
    if (S(i, t) != 0 && (S(bi, bj) == 0 || abs(S(i, t)) < abs(S(bi, bj)))) {
      bi = i;
      bj = t;
    }
  }
  for (std::size_t j = t + 1; j < S.cols(); ++j) {
    if (S(t, j) != 0 && (S(bi, bj) == 0 || abs(S(t, j)) < abs(S(bi, bj)))) {
      bi = t;
      bj = j;
    }
  }
  S.swap_rows(t, bi);
  U.swap_rows(t, bi);
  S.swap_cols(t, bj);
  V.swap_cols(t, bj);
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  IntMatrix S = A;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    if (!bring_smallest_to_pivot(S, U, V, t)) break;
    for (;;) {
      bool remainder = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        const Integer q = S(i, t) / S(t, t);
        S.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        remainder = remainder || S(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        const Integer q = S(t, j) / S(t, t);
        S.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
        remainder = remainder || S(t, j) != 0;
      }
      if (remainder) {
        bring_smallest_cross_to_pivot(S, U, V, t);
        continue;
      }
      // divisibility chain
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j) {
          if (S(i, j) % S(t, t) != 0) {
            S.add_row_multiple(t, i, Integer(1));
            U.add_row_multiple(t, i, Integer(1));
            fixed = true;
          }
        }
      if (!fixed) break;
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      U.negate_row(t);
    }
  }
  return SmithDecomposition{std::move(U), std::move(S), std::move(V), t};
}

IntMatrix kernel_lattice(const IntMatrix& A) {
  const auto snf = smith_normal_form(A);
  const std::size_t n = A.cols();
  IntMatrix K(n, n - snf.rank);
  for (std::size_t j = snf.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) K(i, j - snf.rank) = snf.V(i, j);
  return K;
}

std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& b) {
  if (b.size() != A.rows()) {
    throw Error(ErrorCode::InvalidArgument, "right-hand side length mismatch");
  }
  const auto snf = smith_normal_form(A);
  const IntVector c = snf.U * b;
  IntVector y(A.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < snf.rank) {
      if (c[i] % snf.S(i, i) != 0) return std::nullopt;
      y[i] = c[i] / snf.S(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V * y;
}

Integer determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) {
    throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  }
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix M = A;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      M.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
      }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

// ---- rational linear algebra -----------------------------------------------

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& M) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < M.cols() && row < M.rows(); ++col) {
    std::size_t p = row;
    while (p < M.rows() && M(p, col) == 0) ++p;
    if (p == M.rows()) continue;
    M.swap_rows(row, p);
    const Rational inv = 1 / M(row, col);
    for (std::size_t j = col; j < M.cols(); ++j) M(row, j) *= inv;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == row || M(i, col) == 0) continue;
      const Rational f = M(i, col);
      for (std::size_t j = col; j < M.cols(); ++j) M(i, j) -= f * M(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& A) {
  RatMatrix M = A;
  return rref(M).size();
}

std::optional<RatVector> solve_rational(const RatMatrix& A, const RatVector& b) {
  if (b.size() != A.rows()) {
    throw Error(ErrorCode::InvalidArgument, "right-hand side length mismatch");
  }
  RatMatrix M(A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) M(i, j) = A(i, j);
    M(i, A.cols()) = b[i];
  }
  const auto pivots = rref(M);
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
  RatVector x(A.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = M(r, A.cols());
  return x;
}

RatMatrix inverse(const RatMatrix& A) {
  const std::size_t n = A.rows();
  if (A.cols() != n) {
    throw Error(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  }
  RatMatrix M(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) M(i, j) = A(i, j);
    M(i, n + i) = 1;
  }
  const auto pivots = rref(M);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw Error(ErrorCode::InvalidArgument, "matrix is singular");
  }
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = M(i, n + j);
  return inv;
}

std::vector<RatVector> rational_kernel(const RatMatrix& A) {
  RatMatrix M = A;
  const auto pivots = rref(M);
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < A.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(A.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -M(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace toricfrob
