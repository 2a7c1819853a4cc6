#include "toricfrob/classes.hpp"

#include <functional>

namespace toricfrob {

namespace {

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw Error(ErrorCode::InvalidArgument, "matrix is not integral");
      out(i, j) = m(i, j).get_num();
    }
  return out;
}

IntMatrix select_columns(const IntMatrix& m, const std::vector<std::size_t>& cols) {
  IntMatrix out(m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(i, cols[j]);
  return out;
}

// Lexicographically first set of `k` column indices whose columns form a
// unimodular matrix.
std::optional<std::vector<std::size_t>> unimodular_columns(const IntMatrix& m, std::size_t k) {
  std::vector<std::size_t> pick;
  std::optional<std::vector<std::size_t>> found;
  std::function<void(std::size_t)> search = [&](std::size_t start) {
    if (found) return;
    if (pick.size() == k) {
      if (abs(determinant(select_columns(m, pick))) == 1) found = pick;
      return;
    }
    for (std::size_t i = start; i + (k - pick.size()) <= m.cols() && !found; ++i) {
      pick.push_back(i);
      search(i + 1);
      pick.pop_back();
    }
  };
  search(0);
  return found;
}

Integer mod_positive(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

ClassGroup::ClassGroup(const Fan& fan) : num_rays_(fan.rays.size()) {
  require_valid(fan);
  const std::size_t r = fan.rays.size(), d = fan.dim;
  principal_ = ray_matrix(fan);
  const auto snf = smith_normal_form(principal_);
  if (snf.rank != d) throw Error(ErrorCode::MalformedFan, "rays do not span the lattice rationally");
  rank_ = r - d;
  snf_left_ = snf.U;
  snf_left_inverse_ = to_integer(inverse(to_rational(snf.U)));
  for (std::size_t i = 0; i < d; ++i) {
    if (snf.S(i, i) > 1) {
      torsion_.push_back(snf.S(i, i));
      torsion_rows_.push_back(i);
    }
  }

  IntMatrix raw(rank_, r);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < r; ++j) raw(i, j) = snf.U(d + i, j);

  if (auto cols = unimodular_columns(raw, rank_)) {
    basis_change_ = select_columns(raw, *cols);
    free_projection_ = to_integer(inverse(to_rational(basis_change_))) * raw;
  } else {
    basis_change_ = IntMatrix::identity(rank_);
    for (std::size_t i = 0; i < rank_; ++i) {
      std::size_t j = 0;
      while (j < r && raw(i, j) == 0) ++j;
      if (j < r && raw(i, j) < 0) {
        raw.negate_row(i);
        basis_change_(i, i) = -1;
      }
    }
    free_projection_ = raw;
  }

  IntMatrix tail(r, rank_);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < rank_; ++j) tail(i, j) = snf_left_inverse_(i, d + j);
  section_ = tail * basis_change_;
  numerical_kernel_ = kernel_lattice(free_projection_);
  for (std::size_t j = 0; j < r; ++j) ray_classes_.push_back(free_projection_.column(j));
}

ClassGroup class_group(const Fan& fan) { return ClassGroup(fan); }

NumClass ClassGroup::numerical(const IntVector& divisor) const {
  if (divisor.size() != num_rays_) throw Error(ErrorCode::DimensionMismatch, "divisor length differs from ray count");
  return NumClass{free_projection_ * divisor};
}

ClassElement ClassGroup::element(const IntVector& divisor) const {
  ClassElement e{numerical(divisor), {}};
  if (torsion_.empty()) return e;
  const IntVector y = snf_left_ * divisor;
  for (std::size_t t = 0; t < torsion_.size(); ++t) {
    e.torsion.push_back(mod_positive(y[torsion_rows_[t]], torsion_[t]));
  }
  return e;
}

IntVector ClassGroup::representative(const ClassElement& e) const {
  if (e.free.coords.size() != rank_ || e.torsion.size() != torsion_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "class has the wrong shape");
  }
  IntVector y(num_rays_);
  for (std::size_t t = 0; t < torsion_.size(); ++t) y[torsion_rows_[t]] = e.torsion[t];
  const IntVector raw = basis_change_ * e.free.coords;
  const std::size_t d = dim();
  for (std::size_t j = 0; j < rank_; ++j) y[d + j] = raw[j];
  return snf_left_inverse_ * y;
}

IntVector ClassGroup::representative(const NumClass& c) const {
  return representative(lift(c));
}

ClassElement ClassGroup::lift(const NumClass& c) const {
  return ClassElement{c, IntVector(torsion_.size())};
}

bool ClassGroup::is_relation(const IntVector& relation) const {
  if (relation.size() != num_rays_) return false;
  return is_zero(principal_.transpose() * relation);
}

IntVector ClassGroup::relation_coordinates(const IntVector& relation) const {
  if (!is_relation(relation)) throw Error(ErrorCode::NotARelation, "coefficients do not annihilate the rays");
  return section_.transpose() * relation;
}

NumClass operator+(const NumClass& a, const NumClass& b) {
  NumClass out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

NumClass operator-(const NumClass& a, const NumClass& b) {
  NumClass out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
  return out;
}

NumClass operator*(const Integer& k, const NumClass& a) {
  NumClass out = a;
  for (auto& x : out.coords) x *= k;
  return out;
}

Cone eff_cone(const ClassGroup& cg) { return Cone{cg.rank(), cg.ray_classes()}; }

bool big_test(const ClassGroup& cg, const NumClass& v) {
  return positive_combination(cg.ray_classes(), to_rational(v.coords)).has_value();
}

namespace {

Cone intersect_generated(std::size_t dim, const std::vector<std::vector<IntVector>>& cones) {
  std::vector<IntVector> normals;
  for (const auto& gens : cones) {
    const auto dual = dual_cone(Cone{dim, gens});
    normals.insert(normals.end(), dual.generators.begin(), dual.generators.end());
  }
  const Cone cut = cone_from_inequalities(dim, normals);
  return Cone{dim, extreme_rays(cut)};
}

}  // namespace

Cone nef_cone(const Fan& fan, const ClassGroup& cg) {
  std::vector<std::vector<IntVector>> pieces;
  for (const auto& cone : fan.max_cones) {
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < cg.num_rays(); ++i) {
      if (!std::binary_search(cone.begin(), cone.end(), i)) gens.push_back(cg.ray_classes()[i]);
    }
    pieces.push_back(std::move(gens));
  }
  return intersect_generated(cg.rank(), pieces);
}

Cone moving_cone(const ClassGroup& cg) {
  std::vector<std::vector<IntVector>> pieces;
  for (std::size_t skip = 0; skip < cg.num_rays(); ++skip) {
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < cg.num_rays(); ++i)
      if (i != skip) gens.push_back(cg.ray_classes()[i]);
    pieces.push_back(std::move(gens));
  }
  return intersect_generated(cg.rank(), pieces);
}

Rational intersection_number(const ClassGroup& cg, const ClassElement& e, const IntVector& relation) {
  if (!cg.is_relation(relation)) throw Error(ErrorCode::NotARelation, "coefficients do not annihilate the rays");
  return Rational(dot(cg.representative(e), relation));
}

ClassElement anticanonical(const ClassGroup& cg) {
  return cg.element(IntVector(cg.num_rays(), Integer(1)));
}

HPolytope divisor_polytope(const Fan& fan, const IntVector& divisor) {
  if (divisor.size() != fan.rays.size()) throw Error(ErrorCode::DimensionMismatch, "divisor length differs from ray count");
  HPolytope P(fan.dim);
  for (std::size_t i = 0; i < fan.rays.size(); ++i) P.add_inequality(fan.rays[i], Integer(-divisor[i]));
  return P;
}

Integer h0(const Fan& fan, const IntVector& divisor) {
  return count_lattice_points(divisor_polytope(fan, divisor));
}

}  // namespace toricfrob
