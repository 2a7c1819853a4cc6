#include "toricfrob/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toricfrob {

// ---- HPolytope -------------------------------------------------------------

void HPolytope::add_inequality(RatVector normal, Rational offset) {
  if (normal.size() != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "inequality length differs from polytope dimension");
  }
  inequalities_.push_back({std::move(normal), std::move(offset)});
}

void HPolytope::add_equality(RatVector normal, Rational offset) {
  if (normal.size() != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "equality length differs from polytope dimension");
  }
  equalities_.push_back({std::move(normal), std::move(offset)});
}

void HPolytope::add_inequality(const IntVector& normal, const Integer& offset) {
  add_inequality(to_rational(normal), Rational(offset));
}

void HPolytope::add_equality(const IntVector& normal, const Integer& offset) {
  add_equality(to_rational(normal), Rational(offset));
}

bool HPolytope::contains(const RatVector& x) const {
  for (const auto& h : inequalities_) {
    if (dot(h.normal, x) < h.offset) return false;
  }
  for (const auto& h : equalities_) {
    if (dot(h.normal, x) != h.offset) return false;
  }
  return true;
}

// ---- double description ----------------------------------------------------

namespace {

struct DoubleDescription {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};

// Adjacent iff the minimal face containing both rays has dimension
// dim(lineality) + 2, read off from the rank of the common tight constraints.
bool adjacent(const IntVector& a, const IntVector& b,
              const std::vector<IntVector>& processed, std::size_t n,
              std::size_t lineality_dim) {
  std::vector<RatVector> tight;
  for (const auto& c : processed) {
    if (dot(c, a) == 0 && dot(c, b) == 0) tight.push_back(to_rational(c));
  }
  const std::size_t target = n - lineality_dim - 2;
  if (tight.size() < target) return false;
  return rank(RatMatrix::from_rows(tight, n)) == target;
}

DoubleDescription double_description(std::size_t n, const std::vector<IntVector>& constraints) {
  DoubleDescription dd;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    dd.lineality.push_back(std::move(e));
  }
  std::vector<IntVector> processed;
  for (const auto& a : constraints) {
    if (a.size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "constraint length differs from cone dimension");
    }
    if (is_zero(a)) continue;

    auto pivot = std::find_if(dd.lineality.begin(), dd.lineality.end(),
                              [&](const IntVector& l) { return dot(a, l) != 0; });
    if (pivot != dd.lineality.end()) {
      IntVector l0 = *pivot;
      dd.lineality.erase(pivot);
      Integer al0 = dot(a, l0);
      if (al0 < 0) {
        for (auto& x : l0) x = -x;
        al0 = -al0;
      }
      auto project = [&](const IntVector& v) {
        const Integer av = dot(a, v);
        IntVector out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = al0 * v[i] - av * l0[i];
        return primitive(out);
      };
      for (auto& l : dd.lineality) l = project(l);
      for (auto& r : dd.rays) r = project(r);
      dd.rays.push_back(primitive(l0));
      processed.push_back(a);
      continue;
    }

    std::vector<IntVector> pos, neg, next;
    for (auto& r : dd.rays) {
      const Integer ar = dot(a, r);
      if (ar > 0) {
        pos.push_back(r);
        next.push_back(r);
      } else if (ar == 0) {
        next.push_back(r);
      } else {
        neg.push_back(r);
      }
    }
    for (const auto& p : pos) {
      const Integer ap = dot(a, p);
      for (const auto& q : neg) {
        if (!adjacent(p, q, processed, n, dd.lineality.size())) continue;
        const Integer aq = dot(a, q);
        IntVector combo(n);
        for (std::size_t i = 0; i < n; ++i) combo[i] = ap * q[i] - aq * p[i];
        next.push_back(primitive(combo));
      }
    }
    dd.rays = std::move(next);
    processed.push_back(a);
  }
  std::sort(dd.rays.begin(), dd.rays.end(), [](const auto& x, const auto& y) { return lex_less(x, y); });
  dd.rays.erase(std::unique(dd.rays.begin(), dd.rays.end()), dd.rays.end());
  return dd;
}

IntVector negated(const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

}  // namespace

Cone cone_from_inequalities(std::size_t dim, const std::vector<IntVector>& normals) {
  auto dd = double_description(dim, normals);
  Cone c{dim, std::move(dd.rays)};
  for (const auto& l : dd.lineality) {
    c.generators.push_back(l);
    c.generators.push_back(negated(l));
  }
  return c;
}

Cone dual_cone(const Cone& cone) {
  return cone_from_inequalities(cone.dim, cone.generators);
}

std::vector<IntVector> extreme_rays(const Cone& cone) {
  auto dual = double_description(cone.dim, cone.generators);
  std::vector<IntVector> normals = dual.rays;
  for (const auto& l : dual.lineality) {
    normals.push_back(l);
    normals.push_back(negated(l));
  }
  auto back = double_description(cone.dim, normals);
  if (!back.lineality.empty()) {
    throw Error(ErrorCode::NotStronglyConvex, "cone contains a line");
  }
  return back.rays;
}

bool same_cone(const Cone& a, const Cone& b) {
  if (a.dim != b.dim) return false;
  for (const auto& g : a.generators) {
    if (!membership(b, g)) return false;
  }
  for (const auto& g : b.generators) {
    if (!membership(a, g)) return false;
  }
  return true;
}

// ---- strictness protocol ---------------------------------------------------

std::optional<RatVector> strict_feasible_point(const LinearProgram& lp,
                                               const std::vector<std::size_t>& strict_lower,
                                               const std::vector<std::size_t>& strict_upper) {
  auto first = lp_feasible_point(lp);
  if (!first) return std::nullopt;
  std::vector<RatVector> witnesses{*first};
  const std::size_t n = lp.num_variables();

  auto already_strict = [&](std::size_t i, bool lower) {
    for (const auto& w : witnesses) {
      if (lower ? w[i] > *lp.lower[i] : w[i] < *lp.upper[i]) return true;
    }
    return false;
  };

  for (std::size_t i : strict_lower) {
    if (!lp.lower[i] || already_strict(i, true)) continue;
    LinearProgram probe = lp;
    probe.objective.assign(n, Rational(0));
    probe.objective[i] = 1;
    const Rational cap = *lp.lower[i] + 1;
    if (!probe.upper[i] || *probe.upper[i] > cap) probe.upper[i] = cap;
    auto res = lp_optimize(probe, Sense::Maximize);
    if (!res.optimal() || res.value <= *lp.lower[i]) return std::nullopt;
    witnesses.push_back(std::move(res.witness));
  }
  for (std::size_t i : strict_upper) {
    if (!lp.upper[i] || already_strict(i, false)) continue;
    LinearProgram probe = lp;
    probe.objective.assign(n, Rational(0));
    probe.objective[i] = 1;
    const Rational floor_value = *lp.upper[i] - 1;
    if (!probe.lower[i] || *probe.lower[i] < floor_value) probe.lower[i] = floor_value;
    auto res = lp_optimize(probe, Sense::Minimize);
    if (!res.optimal() || res.value >= *lp.upper[i]) return std::nullopt;
    witnesses.push_back(std::move(res.witness));
  }

  RatVector avg(n);
  for (const auto& w : witnesses)
    for (std::size_t i = 0; i < n; ++i) avg[i] += w[i];
  const Rational k(static_cast<long>(witnesses.size()));
  for (auto& x : avg) x /= k;
  return avg;
}

namespace {

LinearProgram combination_lp(const std::vector<IntVector>& generators, const RatVector& point) {
  const std::size_t m = generators.size();
  LinearProgram lp = LinearProgram::nonnegative(m);
  const std::size_t n = point.size();
  lp.equality_matrix = RatMatrix(n, m);
  for (std::size_t j = 0; j < m; ++j) {
    if (generators[j].size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "generator length differs from point");
    }
    for (std::size_t i = 0; i < n; ++i) lp.equality_matrix(i, j) = generators[j][i];
  }
  lp.equality_rhs = point;
  return lp;
}

std::vector<std::size_t> all_indices(std::size_t m) {
  std::vector<std::size_t> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = i;
  return out;
}

}  // namespace

std::optional<RatVector> half_open_combination(const std::vector<IntVector>& generators,
                                               const RatVector& point) {
  LinearProgram lp = combination_lp(generators, point);
  lp.upper.assign(generators.size(), Rational(1));
  return strict_feasible_point(lp, {}, all_indices(generators.size()));
}

std::optional<RatVector> positive_combination(const std::vector<IntVector>& generators,
                                              const RatVector& point) {
  LinearProgram lp = combination_lp(generators, point);
  return strict_feasible_point(lp, all_indices(generators.size()), {});
}

bool membership(const Cone& cone, const RatVector& v, bool strict) {
  if (v.size() != cone.dim) {
    throw Error(ErrorCode::DimensionMismatch, "point length differs from cone dimension");
  }
  if (cone.generators.empty()) return is_zero(v);
  LinearProgram lp = combination_lp(cone.generators, v);
  if (!strict) return lp_feasible_point(lp).has_value();
  return strict_feasible_point(lp, all_indices(cone.generators.size()), {}).has_value();
}

bool membership(const Cone& cone, const IntVector& v, bool strict) {
  return membership(cone, to_rational(v), strict);
}

// ---- vertices and volume ---------------------------------------------------

namespace {

// Integer row proportional (positively) to the rational row.
IntVector integer_row(const RatVector& normal, const Rational& offset_term) {
  RatVector row = normal;
  row.push_back(offset_term);
  return clear_denominators(row);
}

}  // namespace

VPolytope vertex_enumeration(const HPolytope& P) {
  const std::size_t n = P.dim();
  std::vector<IntVector> rows;
  for (const auto& h : P.inequalities()) rows.push_back(integer_row(h.normal, -h.offset));
  for (const auto& h : P.equalities()) {
    IntVector r = integer_row(h.normal, -h.offset);
    rows.push_back(r);
    rows.push_back(negated(r));
  }
  IntVector t(n + 1);
  t[n] = 1;
  rows.push_back(t);

  auto dd = double_description(n + 1, rows);
  VPolytope out;
  bool has_vertex = false, has_recession = false;
  for (const auto& r : dd.rays) {
    if (r[n] > 0) {
      has_vertex = true;
      RatVector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = Rational(r[i], r[n]);
      for (auto& x : v) x.canonicalize();
      out.vertices.push_back(std::move(v));
    } else {
      has_recession = true;
    }
  }
  if (!has_vertex) return VPolytope{};
  if (has_recession || !dd.lineality.empty()) {
    throw Error(ErrorCode::Unbounded, "polytope has a recession direction");
  }
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const auto& a, const auto& b) { return lex_less(a, b); });
  return out;
}

int affine_dimension(const std::vector<RatVector>& points) {
  if (points.empty()) return -1;
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVector d(points[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(rank(RatMatrix::from_rows(diffs, points[0].size())));
}

namespace {

class PullingTriangulation {
 public:
  PullingTriangulation(const std::vector<RatVector>& points,
                       std::vector<std::set<std::size_t>> facets)
      : points_(points), facets_(std::move(facets)) {}

  std::vector<std::vector<std::size_t>> run(const std::set<std::size_t>& face, int dim) {
    if (dim == 0) return {{*face.begin()}};
    const std::size_t apex = *face.begin();
    std::vector<std::vector<std::size_t>> out;
    for (const auto& sub : subfacets(face, dim)) {
      if (sub.count(apex)) continue;
      for (auto simplex : run(sub, dim - 1)) {
        simplex.push_back(apex);
        out.push_back(std::move(simplex));
      }
    }
    return out;
  }

 private:
  std::vector<std::set<std::size_t>> subfacets(const std::set<std::size_t>& face, int dim) {
    std::set<std::set<std::size_t>> found;
    for (const auto& f : facets_) {
      std::set<std::size_t> meet;
      std::set_intersection(face.begin(), face.end(), f.begin(), f.end(),
                            std::inserter(meet, meet.begin()));
      if (meet.empty() || meet == face || found.count(meet)) continue;
      if (face_dimension(meet) == dim - 1) found.insert(meet);
    }
    return {found.begin(), found.end()};
  }

  int face_dimension(const std::set<std::size_t>& ids) {
    auto it = dims_.find(ids);
    if (it != dims_.end()) return it->second;
    std::vector<RatVector> pts;
    for (auto i : ids) pts.push_back(points_[i]);
    return dims_[ids] = affine_dimension(pts);
  }

  const std::vector<RatVector>& points_;
  std::vector<std::set<std::size_t>> facets_;
  std::map<std::set<std::size_t>, int> dims_;
};

Rational factorial(std::size_t k) {
  Rational f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<long>(i);
  return f;
}

}  // namespace

Rational hull_volume(const std::vector<RatVector>& points) {
  if (points.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "volume of an empty set");
  }
  const std::size_t k = points[0].size();
  if (affine_dimension(points) != static_cast<int>(k)) {
    throw Error(ErrorCode::DimensionMismatch, "points are not full-dimensional");
  }
  if (k == 0) return 1;

  // Facets from the cone over the points lifted to height 1.
  std::vector<IntVector> lifted;
  for (const auto& p : points) {
    RatVector row = p;
    row.push_back(Rational(1));
    lifted.push_back(clear_denominators(row));
  }
  const auto normals = extreme_rays(dual_cone(Cone{k + 1, lifted}));
  std::vector<std::set<std::size_t>> facets;
  for (const auto& a : normals) {
    std::set<std::size_t> f;
    for (std::size_t i = 0; i < points.size(); ++i) {
      Rational s = Rational(a[k]);
      for (std::size_t j = 0; j < k; ++j) s += a[j] * points[i][j];
      if (s == 0) f.insert(i);
    }
    facets.push_back(std::move(f));
  }

  std::set<std::size_t> all;
  for (std::size_t i = 0; i < points.size(); ++i) all.insert(i);
  PullingTriangulation tri(points, std::move(facets));
  Rational total = 0;
  for (const auto& simplex : tri.run(all, static_cast<int>(k))) {
    RatMatrix M(k, k);
    for (std::size_t r = 1; r <= k; ++r)
      for (std::size_t c = 0; c < k; ++c) M(r - 1, c) = points[simplex[r]][c] - points[simplex[0]][c];
    // Rational determinant via elimination.
    Rational det = 1;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (p < k && M(p, c) == 0) ++p;
      if (p == k) {
        det = 0;
        break;
      }
      if (p != c) {
        M.swap_rows(p, c);
        det = -det;
      }
      det *= M(c, c);
      for (std::size_t i = c + 1; i < k; ++i) {
        if (M(i, c) == 0) continue;
        const Rational f = M(i, c) / M(c, c);
        for (std::size_t j = c; j < k; ++j) M(i, j) -= f * M(c, j);
      }
    }
    total += abs(det);
  }
  return total / factorial(k);
}

Rational lattice_volume(const HPolytope& P, const IntMatrix& lattice_basis) {
  if (lattice_basis.rows() != P.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "lattice basis lives in a different space");
  }
  const auto V = vertex_enumeration(P);
  if (V.vertices.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "polytope is empty");
  }
  const RatMatrix basis = to_rational(lattice_basis);
  std::vector<RatVector> coords;
  for (const auto& v : V.vertices) {
    RatVector d(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) d[i] = v[i] - V.vertices[0][i];
    auto y = solve_rational(basis, d);
    if (!y) {
      throw Error(ErrorCode::DimensionMismatch, "polytope leaves the lattice span");
    }
    coords.push_back(std::move(*y));
  }
  if (affine_dimension(coords) != static_cast<int>(lattice_basis.cols())) {
    throw Error(ErrorCode::DimensionMismatch, "polytope is not full-dimensional in the lattice span");
  }
  return hull_volume(coords);
}

// ---- lattice points --------------------------------------------------------

namespace {

struct IntegerRows {
  std::vector<IntVector> ineq;  // a.x >= b with b stored last
  std::vector<IntVector> eq;
};

IntegerRows integer_rows(const HPolytope& P) {
  IntegerRows rows;
  auto scale = [](const RatVector& normal, const Rational& offset) {
    Integer l = offset.get_den();
    for (const auto& x : normal) l = lcm(l, Integer(x.get_den()));
    IntVector row;
    for (const auto& x : normal) row.push_back(x.get_num() * (l / x.get_den()));
    row.push_back(offset.get_num() * (l / offset.get_den()));
    return row;
  };
  for (const auto& h : P.inequalities()) rows.ineq.push_back(scale(h.normal, h.offset));
  for (const auto& h : P.equalities()) rows.eq.push_back(scale(h.normal, h.offset));
  return rows;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Integer bounding box from 2 * dim LP solves; nullopt when P is empty.
std::optional<std::vector<std::pair<Integer, Integer>>> bounding_box(const HPolytope& P) {
  const std::size_t n = P.dim();
  const std::size_t m = P.inequalities().size();
  LinearProgram lp;
  lp.objective.assign(n + m, Rational(0));
  lp.lower.assign(n, std::nullopt);
  lp.lower.resize(n + m, Rational(0));
  lp.upper.assign(n + m, std::nullopt);
  lp.equality_matrix = RatMatrix(m + P.equalities().size(), n + m);
  std::size_t row = 0;
  for (const auto& h : P.inequalities()) {
    for (std::size_t j = 0; j < n; ++j) lp.equality_matrix(row, j) = h.normal[j];
    lp.equality_matrix(row, n + row) = -1;
    lp.equality_rhs.push_back(h.offset);
    ++row;
  }
  for (const auto& h : P.equalities()) {
    for (std::size_t j = 0; j < n; ++j) lp.equality_matrix(row, j) = h.normal[j];
    lp.equality_rhs.push_back(h.offset);
    ++row;
  }
  std::vector<std::pair<Integer, Integer>> box;
  for (std::size_t j = 0; j < n; ++j) {
    lp.objective.assign(n + m, Rational(0));
    lp.objective[j] = 1;
    const auto lo = lp_optimize(lp, Sense::Minimize);
    if (lo.status == LpStatus::Infeasible) return std::nullopt;
    if (lo.status == LpStatus::Unbounded) throw Error(ErrorCode::Unbounded, "polytope is unbounded");
    const auto hi = lp_optimize(lp, Sense::Maximize);
    if (hi.status == LpStatus::Unbounded) throw Error(ErrorCode::Unbounded, "polytope is unbounded");
    box.emplace_back(ceil_div(lo.value.get_num(), lo.value.get_den()),
                     floor_div(hi.value.get_num(), hi.value.get_den()));
  }
  return box;
}

// Walks the first n-1 coordinates over the box and solves the last one as an
// interval; `emit` receives the prefix and the closed interval.
void sweep(const HPolytope& P,
           const std::function<void(IntVector&, const Integer&, const Integer&)>& emit) {
  const std::size_t n = P.dim();
  const auto rows = integer_rows(P);
  if (n == 0) {
    IntVector empty;
    for (const auto& r : rows.ineq)
      if (r[0] > 0) return;
    for (const auto& r : rows.eq)
      if (r[0] != 0) return;
    emit(empty, Integer(0), Integer(0));
    return;
  }
  const auto box = bounding_box(P);
  if (!box) return;
  for (const auto& [lo, hi] : *box)
    if (lo > hi) return;

  IntVector x(n);
  const std::size_t last = n - 1;
  std::function<void(std::size_t)> recurse = [&](std::size_t j) {
    if (j == last) {
      Integer lo = (*box)[last].first, hi = (*box)[last].second;
      auto residual = [&](const IntVector& r) {
        Integer s = r[n];
        for (std::size_t i = 0; i < last; ++i) s -= r[i] * x[i];
        return s;
      };
      for (const auto& r : rows.ineq) {
        const Integer rhs = residual(r);
        const Integer& a = r[last];
        if (a > 0) {
          lo = std::max(lo, ceil_div(rhs, a));
        } else if (a < 0) {
          hi = std::min(hi, floor_div(rhs, a));
        } else if (rhs > 0) {
          return;
        }
        if (lo > hi) return;
      }
      for (const auto& r : rows.eq) {
        const Integer rhs = residual(r);
        const Integer& a = r[last];
        if (a == 0) {
          if (rhs != 0) return;
          continue;
        }
        if (rhs % a != 0) return;
        const Integer v = rhs / a;
        lo = std::max(lo, v);
        hi = std::min(hi, v);
        if (lo > hi) return;
      }
      emit(x, lo, hi);
      return;
    }
    for (x[j] = (*box)[j].first; x[j] <= (*box)[j].second; ++x[j]) recurse(j + 1);
  };
  recurse(0);
}

}  // namespace

void for_each_lattice_point(const HPolytope& P,
                            const std::function<void(const IntVector&)>& visit) {
  sweep(P, [&](IntVector& x, const Integer& lo, const Integer& hi) {
    if (x.empty()) {
      visit(x);
      return;
    }
    IntVector point = x;
    for (point.back() = lo; point.back() <= hi; ++point.back()) visit(point);
  });
}

std::vector<IntVector> lattice_points(const HPolytope& P) {
  std::vector<IntVector> out;
  for_each_lattice_point(P, [&](const IntVector& p) { out.push_back(p); });
  return out;
}

Integer count_lattice_points(const HPolytope& P) {
  Integer total = 0;
  sweep(P, [&](IntVector& x, const Integer& lo, const Integer& hi) {
    total += x.empty() ? Integer(1) : Integer(hi - lo + 1);
  });
  return total;
}

// ---- half-open points ------------------------------------------------------

IntVector half_open_point_from_relation(const std::vector<IntVector>& vectors,
                                        const IntVector& relation) {
  if (vectors.size() != relation.size() || vectors.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "relation length differs from vector count");
  }
  const std::size_t n = vectors[0].size();
  IntVector sum(n);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) sum[j] += relation[i] * vectors[i][j];
  if (!is_zero(sum)) {
    throw Error(ErrorCode::NotARelation, "coefficients do not annihilate the vectors");
  }
  const bool has_pos = std::any_of(relation.begin(), relation.end(), [](const Integer& c) { return c > 0; });
  const bool has_neg = std::any_of(relation.begin(), relation.end(), [](const Integer& c) { return c < 0; });
  if (!has_pos || !has_neg) {
    throw Error(ErrorCode::DegenerateRelation, "relation has no mixed signs");
  }
  std::size_t lead = 0;
  for (std::size_t i = 1; i < relation.size(); ++i) {
    if (abs(relation[i]) > abs(relation[lead])) lead = i;
  }
  const int sign = sgn(relation[lead]);
  IntVector point(n);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (sgn(relation[i]) != sign) continue;
    for (std::size_t j = 0; j < n; ++j) point[j] += vectors[i][j];
  }
  // Subtracting relation / (2 max|c|) puts every coefficient in (0,1).
  if (is_zero(point) || !half_open_combination(vectors, to_rational(point))) {
    throw Error(ErrorCode::DegenerateRelation, "vectors do not generate a strongly convex cone");
  }
  return point;
}

}  // namespace toricfrob
