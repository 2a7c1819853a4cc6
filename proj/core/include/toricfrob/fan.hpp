#pragma once

// Complete simplicial fans: validation, walls, primitive collections and
// relations, star subdivision and its inverse.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toricfrob/exactlin.hpp"

namespace toricfrob {

using IndexSet = std::vector<std::size_t>;  // sorted, 0-based ray indices

struct Fan {
  std::size_t dim = 0;
  std::vector<IntVector> rays;
  std::vector<IndexSet> max_cones;
  std::string name;

  std::size_t num_rays() const { return rays.size(); }
  friend bool operator==(const Fan&, const Fan&) = default;
};

/// Primitivizes rays (one warning per rescaled ray) and sorts cone indices.
Fan make_fan(std::size_t dim, std::vector<IntVector> rays, std::vector<IndexSet> max_cones,
             std::string name = {}, std::vector<std::string>* warnings = nullptr);

struct FanDiagnostics {
  bool simplicial = false;
  bool complete = false;
  bool smooth = false;
  std::vector<std::string> errors;

  bool valid() const { return simplicial && complete && errors.empty(); }
};

FanDiagnostics validate(const Fan& fan);

/// Throws ValidationError carrying the diagnostics when the fan is unusable.
void require_valid(const Fan& fan);

/// r x d matrix whose rows are the ray generators.
IntMatrix ray_matrix(const Fan& fan);

/// A (d-1)-face shared by two maximal cones.
struct Wall {
  std::size_t cone_a = 0, cone_b = 0;
  IndexSet face;
  std::size_t ray_a = 0, ray_b = 0;  // the rays opposite the face
  IntVector relation;                 // u_a + u_b + sum_face mu_j u_j = 0, scaled to Z
};

std::vector<Wall> walls(const Fan& fan);

/// Whether the index set lies in some maximal cone.
bool spans_cone(const Fan& fan, const IndexSet& rays);

/// Support of the smallest cone containing v, if v lies in the support.
std::optional<IndexSet> minimal_cone_containing(const Fan& fan, const IntVector& v);

struct PrimitiveCollection {
  IndexSet rays;
  IndexSet focus;
};

std::vector<PrimitiveCollection> primitive_collections(const Fan& fan);

struct PrimitiveRelation {
  IntVector coefficients;  // length r, coprime, sum b_i u_i = 0
  IndexSet positive;
  IndexSet negative;
  Integer degree;  // sum of coefficients, i.e. -K . R
  PrimitiveCollection collection;

  std::size_t k() const { return positive.size(); }
  std::size_t l() const { return positive.size() + negative.size(); }
};

PrimitiveRelation primitive_relation(const Fan& fan, const PrimitiveCollection& collection);
std::vector<PrimitiveRelation> primitive_relations(const Fan& fan);

/// Throws RayExists or OutsideSupport.
Fan star_subdivision(const Fan& fan, const IntVector& v);

/// Inverse star subdivision. Throws NotDivisorial or InvalidContraction.
Fan blowdown(const Fan& fan, std::size_t ray, const PrimitiveRelation& relation);

/// Product fan; rays of `a` first.
Fan product(const Fan& a, const Fan& b);

}  // namespace toricfrob
