#include "toricfrob/fan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace toricfrob {

namespace {

std::string format_vector(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

bool is_subset(const IndexSet& small, const IndexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

IndexSet without(const IndexSet& s, std::size_t i) {
  IndexSet out;
  for (auto x : s)
    if (x != i) out.push_back(x);
  return out;
}

IntMatrix cone_matrix(const Fan& fan, const IndexSet& cone) {
  IntMatrix M(cone.size(), fan.dim);
  for (std::size_t i = 0; i < cone.size(); ++i)
    for (std::size_t j = 0; j < fan.dim; ++j) M(i, j) = fan.rays[cone[i]][j];
  return M;
}

// Coordinates of v in the generators of a maximal cone containing it.
std::optional<std::pair<std::size_t, RatVector>> cone_coordinates(const Fan& fan,
                                                                  const IntVector& v) {
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& cone = fan.max_cones[c];
    if (cone.size() != fan.dim) continue;
    const RatMatrix A = to_rational(cone_matrix(fan, cone)).transpose();
    auto lambda = solve_rational(A, to_rational(v));
    if (!lambda) continue;
    if (rank(A) != fan.dim) continue;
    if (std::all_of(lambda->begin(), lambda->end(), [](const Rational& x) { return x >= 0; })) {
      return std::make_pair(c, std::move(*lambda));
    }
  }
  return std::nullopt;
}

}  // namespace

Fan make_fan(std::size_t dim, std::vector<IntVector> rays, std::vector<IndexSet> max_cones,
             std::string name, std::vector<std::string>* warnings) {
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const Integer g = content(rays[i]);
    if (g > 1) {
      if (warnings) {
        warnings->push_back("ray " + std::to_string(i) + " " + format_vector(rays[i]) +
                            " divided by " + g.get_str() + " to make it primitive");
      }
      rays[i] = primitive(rays[i]);
    }
  }
  for (auto& c : max_cones) std::sort(c.begin(), c.end());
  return Fan{dim, std::move(rays), std::move(max_cones), std::move(name)};
}

IntMatrix ray_matrix(const Fan& fan) {
  IntMatrix B(fan.rays.size(), fan.dim);
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    for (std::size_t j = 0; j < fan.dim; ++j) B(i, j) = fan.rays[i][j];
  return B;
}

FanDiagnostics validate(const Fan& fan) {
  FanDiagnostics diag;
  auto fail = [&](std::string msg) { diag.errors.push_back(std::move(msg)); };
  const std::size_t d = fan.dim, r = fan.rays.size();
  if (d == 0) fail("dimension must be positive");

  bool rays_ok = true;
  std::set<IntVector> seen;
  for (std::size_t i = 0; i < r; ++i) {
    const auto& u = fan.rays[i];
    if (u.size() != d) {
      fail("ray " + std::to_string(i) + " has length " + std::to_string(u.size()));
      rays_ok = false;
      continue;
    }
    if (is_zero(u)) {
      fail("ray " + std::to_string(i) + " is zero");
      rays_ok = false;
    } else if (content(u) != 1) {
      fail("ray " + std::to_string(i) + " " + format_vector(u) + " is not primitive");
    }
    if (!seen.insert(u).second) fail("ray " + std::to_string(i) + " is a duplicate");
  }

  diag.simplicial = rays_ok && d > 0 && !fan.max_cones.empty();
  diag.smooth = diag.simplicial;
  std::vector<bool> used(r, false);
  std::set<IndexSet> distinct;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& cone = fan.max_cones[c];
    const std::string tag = "cone " + std::to_string(c);
    if (!std::is_sorted(cone.begin(), cone.end()) ||
        std::adjacent_find(cone.begin(), cone.end()) != cone.end()) {
      fail(tag + " repeats or misorders ray indices");
      diag.simplicial = diag.smooth = false;
      continue;
    }
    if (!cone.empty() && cone.back() >= r) {
      fail(tag + " references a missing ray");
      diag.simplicial = diag.smooth = false;
      continue;
    }
    for (auto i : cone) used[i] = true;
    if (!distinct.insert(cone).second) fail(tag + " is listed twice");
    if (!rays_ok) continue;
    if (cone.size() != d) {
      fail(tag + " has " + std::to_string(cone.size()) + " rays, expected " + std::to_string(d));
      diag.simplicial = diag.smooth = false;
      continue;
    }
    const Integer det = determinant(cone_matrix(fan, cone));
    if (det == 0) {
      fail(tag + " has linearly dependent rays");
      diag.simplicial = diag.smooth = false;
    } else if (abs(det) != 1) {
      diag.smooth = false;
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (!used[i]) fail("ray " + std::to_string(i) + " lies in no maximal cone");
  }
  if (!diag.simplicial) {
    diag.smooth = false;
    return diag;
  }

  // Wall pairing with opposite sides, then connectivity of the dual graph.
  std::map<IndexSet, std::vector<std::pair<std::size_t, std::size_t>>> faces;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c)
    for (auto i : fan.max_cones[c]) faces[without(fan.max_cones[c], i)].push_back({c, i});

  bool complete = true;
  std::vector<std::vector<std::size_t>> adj(fan.max_cones.size());
  for (const auto& [face, owners] : faces) {
    if (owners.size() != 2) {
      fail("face " + format_vector(IntVector(face.begin(), face.end())) + " lies in " +
           std::to_string(owners.size()) + " maximal cone(s)");
      complete = false;
      continue;
    }
    const auto normal = rational_kernel(to_rational(cone_matrix(fan, face)));
    const RatVector& n = normal.front();
    const Rational sa = dot(n, to_rational(fan.rays[owners[0].second]));
    const Rational sb = dot(n, to_rational(fan.rays[owners[1].second]));
    if (sgn(sa) * sgn(sb) >= 0) {
      fail("cones " + std::to_string(owners[0].first) + " and " + std::to_string(owners[1].first) +
           " lie on the same side of their common face");
      complete = false;
    }
    adj[owners[0].first].push_back(owners[1].first);
    adj[owners[1].first].push_back(owners[0].first);
  }
  std::vector<bool> reached(fan.max_cones.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    const auto c = stack.back();
    stack.pop_back();
    for (auto n : adj[c]) {
      if (!reached[n]) {
        reached[n] = true;
        stack.push_back(n);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
    fail("maximal cones do not form a connected complex");
    complete = false;
  }
  diag.complete = complete;
  return diag;
}

void require_valid(const Fan& fan) {
  const auto diag = validate(fan);
  if (diag.valid()) return;
  std::string msg = "fan";
  if (!fan.name.empty()) msg += " '" + fan.name + "'";
  msg += " is not complete simplicial";
  for (const auto& e : diag.errors) msg += "; " + e;
  throw Error(ErrorCode::ValidationError, msg);
}

std::vector<Wall> walls(const Fan& fan) {
  std::map<IndexSet, std::vector<std::pair<std::size_t, std::size_t>>> faces;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    if (fan.max_cones[c].size() != fan.dim) throw Error(ErrorCode::MalformedFan, "fan is not simplicial");
    for (auto i : fan.max_cones[c]) faces[without(fan.max_cones[c], i)].push_back({c, i});
  }
  std::vector<Wall> out;
  for (const auto& [face, owners] : faces) {
    if (owners.size() != 2) {
      throw Error(ErrorCode::MalformedFan, "a wall is not shared by exactly two cones");
    }
    Wall w;
    w.cone_a = owners[0].first;
    w.cone_b = owners[1].first;
    w.face = face;
    w.ray_a = owners[0].second;
    w.ray_b = owners[1].second;
    IndexSet support{w.ray_a, w.ray_b};
    support.insert(support.end(), face.begin(), face.end());
    const RatMatrix A = to_rational(cone_matrix(fan, support)).transpose();
    const auto kernel = rational_kernel(A);
    if (kernel.size() != 1) throw Error(ErrorCode::MalformedFan, "degenerate wall");
    RatVector k = kernel.front();
    if (k[0] < 0)
      for (auto& x : k) x = -x;
    const IntVector coeffs = clear_denominators(k);
    w.relation.assign(fan.rays.size(), Integer(0));
    for (std::size_t i = 0; i < support.size(); ++i) w.relation[support[i]] = coeffs[i];
    out.push_back(std::move(w));
  }
  return out;
}

bool spans_cone(const Fan& fan, const IndexSet& rays) {
  return std::any_of(fan.max_cones.begin(), fan.max_cones.end(),
                     [&](const IndexSet& cone) { return is_subset(rays, cone); });
}

std::optional<IndexSet> minimal_cone_containing(const Fan& fan, const IntVector& v) {
  auto coords = cone_coordinates(fan, v);
  if (!coords) return std::nullopt;
  IndexSet support;
  const auto& cone = fan.max_cones[coords->first];
  for (std::size_t i = 0; i < cone.size(); ++i)
    if (coords->second[i] > 0) support.push_back(cone[i]);
  return support;
}

std::vector<PrimitiveCollection> primitive_collections(const Fan& fan) {
  const std::size_t r = fan.rays.size();
  std::vector<PrimitiveCollection> out;
  std::set<IndexSet> non_faces;  // memo of subsets known not to span
  IndexSet subset;
  auto examine = [&]() {
    if (spans_cone(fan, subset)) return;
    non_faces.insert(subset);
    for (auto i : subset) {
      if (!spans_cone(fan, without(subset, i))) return;
    }
    IntVector sum(fan.dim);
    for (auto i : subset)
      for (std::size_t j = 0; j < fan.dim; ++j) sum[j] += fan.rays[i][j];
    auto focus = minimal_cone_containing(fan, sum);
    if (!focus) throw Error(ErrorCode::MalformedFan, "sum of a primitive collection escapes the fan");
    out.push_back({subset, *focus});
  };
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t left) {
    if (left == 0) {
      examine();
      return;
    }
    for (std::size_t i = start; i + left <= r; ++i) {
      subset.push_back(i);
      choose(i + 1, left - 1);
      subset.pop_back();
    }
  };
  for (std::size_t size = 2; size <= fan.dim + 1 && size <= r; ++size) choose(0, size);
  return out;
}

PrimitiveRelation primitive_relation(const Fan& fan, const PrimitiveCollection& collection) {
  const std::size_t r = fan.rays.size();
  IntVector sum(fan.dim);
  for (auto i : collection.rays)
    for (std::size_t j = 0; j < fan.dim; ++j) sum[j] += fan.rays[i][j];
  auto coords = cone_coordinates(fan, sum);
  if (!coords) throw Error(ErrorCode::MalformedFan, "sum of a primitive collection escapes the fan");

  RatVector b(r);
  for (auto i : collection.rays) b[i] += 1;
  const auto& cone = fan.max_cones[coords->first];
  for (std::size_t i = 0; i < cone.size(); ++i) b[cone[i]] -= coords->second[i];

  PrimitiveRelation rel;
  rel.coefficients = clear_denominators(b);
  rel.degree = 0;
  for (std::size_t i = 0; i < r; ++i) {
    rel.degree += rel.coefficients[i];
    if (rel.coefficients[i] > 0) rel.positive.push_back(i);
    if (rel.coefficients[i] < 0) rel.negative.push_back(i);
  }
  rel.collection = collection;
  return rel;
}

std::vector<PrimitiveRelation> primitive_relations(const Fan& fan) {
  std::vector<PrimitiveRelation> out;
  for (const auto& pc : primitive_collections(fan)) out.push_back(primitive_relation(fan, pc));
  return out;
}

Fan star_subdivision(const Fan& fan, const IntVector& v) {
  if (v.size() != fan.dim) throw Error(ErrorCode::DimensionMismatch, "subdivision point has wrong length");
  if (is_zero(v)) throw Error(ErrorCode::InvalidArgument, "cannot subdivide at the origin");
  const IntVector u = primitive(v);
  if (std::find(fan.rays.begin(), fan.rays.end(), u) != fan.rays.end()) {
    throw Error(ErrorCode::RayExists, "ray " + format_vector(u) + " is already in the fan");
  }
  const auto tau = minimal_cone_containing(fan, u);
  if (!tau) throw Error(ErrorCode::OutsideSupport, format_vector(u) + " lies outside the fan");

  Fan out{fan.dim, fan.rays, {}, fan.name.empty() ? std::string{} : "star(" + fan.name + ")"};
  const std::size_t fresh = fan.rays.size();
  out.rays.push_back(u);
  for (const auto& cone : fan.max_cones) {
    if (!is_subset(*tau, cone)) {
      out.max_cones.push_back(cone);
      continue;
    }
    for (auto i : *tau) {
      IndexSet c = without(cone, i);
      c.push_back(fresh);
      out.max_cones.push_back(std::move(c));
    }
  }
  require_valid(out);
  return out;
}

Fan blowdown(const Fan& fan, std::size_t ray, const PrimitiveRelation& relation) {
  if (relation.coefficients.size() != fan.rays.size()) {
    throw Error(ErrorCode::DimensionMismatch, "relation length differs from ray count");
  }
  if (relation.negative != IndexSet{ray} || relation.positive.empty()) {
    throw Error(ErrorCode::NotDivisorial, "relation does not contract ray " + std::to_string(ray));
  }
  std::set<IndexSet> cones;
  for (const auto& cone : fan.max_cones) {
    if (!std::binary_search(cone.begin(), cone.end(), ray)) {
      cones.insert(cone);
      continue;
    }
    std::set<std::size_t> merged;
    for (auto i : cone)
      if (i != ray) merged.insert(i);
    merged.insert(relation.positive.begin(), relation.positive.end());
    if (merged.size() != fan.dim) {
      throw Error(ErrorCode::InvalidContraction, "merged cone has the wrong number of rays");
    }
    cones.insert(IndexSet(merged.begin(), merged.end()));
  }
  Fan out{fan.dim, {}, {}, fan.name.empty() ? std::string{} : "down(" + fan.name + ")"};
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    if (i != ray) out.rays.push_back(fan.rays[i]);
  for (auto cone : cones) {
    for (auto& i : cone)
      if (i > ray) --i;
    out.max_cones.push_back(std::move(cone));
  }
  const auto diag = validate(out);
  if (!diag.valid()) {
    std::string msg = "blown-down fan is invalid";
    for (const auto& e : diag.errors) msg += "; " + e;
    throw Error(ErrorCode::InvalidContraction, msg);
  }
  return out;
}

Fan product(const Fan& a, const Fan& b) {
  Fan out{a.dim + b.dim, {}, {}, a.name + " x " + b.name};
  for (const auto& u : a.rays) {
    IntVector v = u;
    v.resize(out.dim, Integer(0));
    out.rays.push_back(std::move(v));
  }
  for (const auto& u : b.rays) {
    IntVector v(a.dim);
    v.insert(v.end(), u.begin(), u.end());
    out.rays.push_back(std::move(v));
  }
  for (const auto& s : a.max_cones)
    for (const auto& t : b.max_cones) {
      IndexSet c = s;
      for (auto i : t) c.push_back(i + a.rays.size());
      out.max_cones.push_back(std::move(c));
    }
  return out;
}

}  // namespace toricfrob
