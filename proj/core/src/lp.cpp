// Exact two-phase simplex. Bounded and free variables are reduced to the
// standard form  min c.z  s.t.  A z = b, z >= 0  before the tableau is built.

#include <algorithm>
#include <optional>

#include "toricfrob/exactlin.hpp"

namespace toricfrob {

LinearProgram LinearProgram::nonnegative(std::size_t n) {
  LinearProgram lp;
  lp.objective.assign(n, Rational(0));
  lp.equality_matrix = RatMatrix(0, n);
  lp.lower.assign(n, Rational(0));
  lp.upper.assign(n, std::nullopt);
  return lp;
}

namespace {

// x_j = offset + sum_k coeff_k * z_{col_k}
struct Substitution {
  Rational offset;
  std::vector<std::pair<std::size_t, int>> terms;
};

struct StandardForm {
  std::size_t num_z = 0;
  std::vector<RatVector> rows;  // each of length num_z (filled at the end)
  RatVector rhs;
  std::vector<Substitution> subst;
};

StandardForm to_standard_form(const LinearProgram& lp) {
  const std::size_t n = lp.num_variables();
  StandardForm sf;
  sf.subst.resize(n);
  std::vector<std::pair<std::size_t, Rational>> upper_rows;  // z_col <= value
  for (std::size_t j = 0; j < n; ++j) {
    const auto& lo = lp.lower[j];
    const auto& hi = lp.upper[j];
    if (lo && hi && *hi < *lo) {
      // Empty box: encode as the infeasible row 0 = 1.
      upper_rows.push_back({static_cast<std::size_t>(-1), Rational(0)});
    }
    if (lo) {
      sf.subst[j].offset = *lo;
      sf.subst[j].terms.push_back({sf.num_z, +1});
      if (hi) upper_rows.push_back({sf.num_z, *hi - *lo});
      ++sf.num_z;
    } else if (hi) {
      sf.subst[j].offset = *hi;
      sf.subst[j].terms.push_back({sf.num_z++, -1});
    } else {
      sf.subst[j].terms.push_back({sf.num_z++, +1});
      sf.subst[j].terms.push_back({sf.num_z++, -1});
    }
  }
  const std::size_t num_slacks =
      std::count_if(upper_rows.begin(), upper_rows.end(),
                    [](const auto& u) { return u.first != static_cast<std::size_t>(-1); });
  const std::size_t total = sf.num_z + num_slacks;

  for (std::size_t i = 0; i < lp.equality_matrix.rows(); ++i) {
    RatVector row(total);
    Rational rhs = lp.equality_rhs[i];
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a = lp.equality_matrix(i, j);
      if (a == 0) continue;
      rhs -= a * sf.subst[j].offset;
      for (const auto& [col, sign] : sf.subst[j].terms) row[col] += sign * a;
    }
    sf.rows.push_back(std::move(row));
    sf.rhs.push_back(rhs);
  }
  std::size_t slack = sf.num_z;
  for (const auto& [col, value] : upper_rows) {
    RatVector row(total);
    if (col == static_cast<std::size_t>(-1)) {
      sf.rows.push_back(std::move(row));
      sf.rhs.push_back(Rational(1));
      continue;
    }
    row[col] = 1;
    row[slack++] = 1;
    sf.rows.push_back(std::move(row));
    sf.rhs.push_back(value);
  }
  sf.num_z = total;
  return sf;
}

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_((rows + 1) * (cols + 1)), basis_(rows) {}

  Rational& at(std::size_t i, std::size_t j) { return a_[i * (cols_ + 1) + j]; }
  Rational& rhs(std::size_t i) { return at(i, cols_); }
  Rational& cost(std::size_t j) { return at(rows_, j); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / at(r, c);
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (at(r, j) != 0) at(r, j) *= inv;
    }
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      const Rational f = at(i, c);
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (at(r, j) != 0) at(i, j) -= f * at(r, j);
      }
    }
    basis_[r] = c;
  }

  /// Bland's rule; only columns < allowed may enter.
  LpStatus run(std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (cost(j) < 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return LpStatus::Optimal;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (at(i, *enter) <= 0) continue;
        const Rational ratio = rhs(i) / at(i, *enter);
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return LpStatus::Unbounded;
      pivot(*leave, *enter);
    }
  }

  void drop_row(std::size_t r) {
    std::vector<Rational> next;
    next.reserve(rows_ * (cols_ + 1));
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0; j <= cols_; ++j) next.push_back(at(i, j));
    }
    a_ = std::move(next);
    basis_.erase(basis_.begin() + r);
    --rows_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult lp_optimize(const LinearProgram& lp, Sense sense) {
  const std::size_t n = lp.num_variables();
  if (lp.lower.size() != n || lp.upper.size() != n ||
      lp.equality_matrix.cols() != n ||
      lp.equality_matrix.rows() != lp.equality_rhs.size()) {
    throw Error(ErrorCode::InvalidArgument, "linear program dimensions inconsistent");
  }
  const StandardForm sf = to_standard_form(lp);
  const std::size_t m = sf.rows.size();
  const std::size_t nz = sf.num_z;

  // Phase I: artificials m columns after the structural ones.
  Tableau T(m, nz + m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sf.rhs[i] < 0;
    for (std::size_t j = 0; j < nz; ++j) T.at(i, j) = flip ? -sf.rows[i][j] : sf.rows[i][j];
    T.rhs(i) = flip ? -sf.rhs[i] : sf.rhs[i];
    T.at(i, nz + i) = 1;
    T.basis()[i] = nz + i;
  }
  for (std::size_t j = 0; j <= nz + m; ++j) {
    if (j >= nz && j < nz + m) continue;
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += T.at(i, j);
    T.at(m, j) = -s;
  }
  T.run(nz + m);
  if (T.rhs(T.rows()) != 0) return LpResult{LpStatus::Infeasible, Rational(0), {}};

  // Drive artificials out of the basis; rows with no structural support are redundant.
  for (std::size_t i = 0; i < T.rows();) {
    if (T.basis()[i] < nz) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < nz; ++j) {
      if (T.at(i, j) != 0) {
        col = j;
        break;
      }
    }
    if (col) {
      T.pivot(i, *col);
      ++i;
    } else {
      T.drop_row(i);
    }
  }

  // Phase II objective in z-space.
  RatVector cz(nz);
  const Rational dir = sense == Sense::Minimize ? 1 : -1;
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [col, sign] : sf.subst[j].terms) cz[col] += dir * sign * lp.objective[j];
  }
  const std::size_t rows = T.rows();
  for (std::size_t j = 0; j <= nz + m; ++j) T.at(rows, j) = 0;
  for (std::size_t j = 0; j < nz; ++j) T.at(rows, j) = cz[j];
  for (std::size_t i = 0; i < rows; ++i) {
    const Rational cb = cz[T.basis()[i]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j <= nz + m; ++j) {
      if (T.at(i, j) != 0) T.at(rows, j) -= cb * T.at(i, j);
    }
  }
  if (T.run(nz) == LpStatus::Unbounded) return LpResult{LpStatus::Unbounded, Rational(0), {}};

  RatVector z(nz);
  for (std::size_t i = 0; i < rows; ++i) z[T.basis()[i]] = T.rhs(i);
  RatVector x(n);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = sf.subst[j].offset;
    for (const auto& [col, sign] : sf.subst[j].terms) x[j] += sign * z[col];
  }
  return LpResult{LpStatus::Optimal, dot(lp.objective, x), std::move(x)};
}

std::optional<RatVector> lp_feasible_point(const LinearProgram& lp) {
  LinearProgram zero = lp;
  zero.objective.assign(lp.num_variables(), Rational(0));
  auto res = lp_optimize(zero, Sense::Minimize);
  if (!res.optimal()) return std::nullopt;
  return std::move(res.witness);
}

}  // namespace toricfrob
