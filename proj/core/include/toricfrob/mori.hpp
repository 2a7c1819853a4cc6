#pragma once

// Mori cone, extremal contractions and the Fano-type verdicts built on them.

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "toricfrob/classes.hpp"
#include "toricfrob/fan.hpp"
#include "toricfrob/polyhedra.hpp"

namespace toricfrob {

enum class ContractionKind { Fibration, Divisorial, Small };

std::string_view to_string(ContractionKind kind);

struct ContractionInfo {
  PrimitiveRelation relation;
  IntVector ray;  // extreme ray of the Mori cone, in N_1 coordinates
  ContractionKind kind = ContractionKind::Fibration;
  std::size_t fiber_dim = 0;  // k - 1
  std::size_t exc_codim = 0;  // l - k
  bool inert = false;
  bool smooth_blowup = false;
  std::optional<Integer> length;  // smooth fans only
  Integer degree;
  std::size_t matches = 1;  // primitive relations spanning this ray
  bool conflicting = false;  // matches disagree on the classification
};

/// Generated by the primitive relations, in N_1 coordinates.
Cone mori_cone(const Fan& fan, const ClassGroup& cg);

ContractionInfo classify(const Fan& fan, const PrimitiveRelation& relation);

/// One entry per extreme ray of the Mori cone. Throws UnmatchedRay.
std::vector<ContractionInfo> extremal_contractions(const Fan& fan, const ClassGroup& cg);

bool is_fano(const Fan& fan, const ClassGroup& cg);
bool is_weak_fano(const Fan& fan, const ClassGroup& cg);
/// Throws RequiresSmooth.
bool is_projective_space(const Fan& fan);
/// Throws RequiresSmooth.
bool is_extremal_fano(const Fan& fan, const ClassGroup& cg);
bool is_birationally_inert_fano(const Fan& fan, const ClassGroup& cg);

/// Same extreme rays after primitivization.
bool eff_equals_nef(const Fan& fan, const ClassGroup& cg);

struct BlowdownStep {
  Fan fan;  // the fan after this contraction
  ContractionInfo contraction;
  std::size_t removed_ray = 0;  // index in the fan before this step
};

/// Contracts inert divisorial rays (lowest exceptional index first) until
/// none remain. Throws ChainStuck when a step fails or the terminal fan has
/// eff != nef.
std::vector<BlowdownStep> blowdown_chain(const Fan& fan);

}  // namespace toricfrob
