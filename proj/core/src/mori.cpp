#include "toricfrob/mori.hpp"

#include <algorithm>

namespace toricfrob {

std::string_view to_string(ContractionKind kind) {
  switch (kind) {
    case ContractionKind::Fibration: return "fibration";
    case ContractionKind::Divisorial: return "divisorial";
    case ContractionKind::Small: return "small";
  }
  return "unknown";
}

Cone mori_cone(const Fan& fan, const ClassGroup& cg) {
  Cone c{cg.rank(), {}};
  for (const auto& rel : primitive_relations(fan)) c.generators.push_back(cg.relation_coordinates(rel.coefficients));
  return c;
}

ContractionInfo classify(const Fan& fan, const PrimitiveRelation& relation) {
  ContractionInfo info;
  info.relation = relation;
  const std::size_t k = relation.k(), l = relation.l();
  info.fiber_dim = k - 1;
  info.exc_codim = l - k;
  info.kind = info.exc_codim == 0   ? ContractionKind::Fibration
              : info.exc_codim == 1 ? ContractionKind::Divisorial
                                    : ContractionKind::Small;
  info.inert = info.kind == ContractionKind::Divisorial &&
               relation.coefficients[relation.negative.front()] == -1;
  const bool smooth = validate(fan).smooth;
  info.smooth_blowup = smooth && info.inert;
  info.degree = relation.degree;
  if (smooth) info.length = relation.degree;
  return info;
}

std::vector<ContractionInfo> extremal_contractions(const Fan& fan, const ClassGroup& cg) {
  const auto relations = primitive_relations(fan);
  std::vector<IntVector> coords;
  for (const auto& rel : relations) coords.push_back(primitive(cg.relation_coordinates(rel.coefficients)));
  const auto rays = extreme_rays(Cone{cg.rank(), coords});

  std::vector<ContractionInfo> out;
  for (const auto& ray : rays) {
    std::optional<ContractionInfo> first;
    std::size_t matches = 0;
    bool conflicting = false;
    for (std::size_t i = 0; i < relations.size(); ++i) {
      if (coords[i] != ray) continue;
      ++matches;
      auto info = classify(fan, relations[i]);
      if (!first) {
        first = std::move(info);
      } else if (info.kind != first->kind || info.inert != first->inert) {
        conflicting = true;
      }
    }
    if (!first) throw Error(ErrorCode::UnmatchedRay, "an extreme ray of the Mori cone has no primitive relation");
    first->ray = ray;
    first->matches = matches;
    first->conflicting = conflicting;
    out.push_back(std::move(*first));
  }
  return out;
}

namespace {

bool full_dimensional(const Cone& c) {
  std::vector<RatVector> rows;
  for (const auto& g : c.generators) rows.push_back(to_rational(g));
  return rank(RatMatrix::from_rows(rows, c.dim)) == c.dim;
}

void require_smooth(const Fan& fan) {
  if (!validate(fan).smooth) throw Error(ErrorCode::RequiresSmooth, "operation needs a smooth fan");
}

}  // namespace

bool is_fano(const Fan& fan, const ClassGroup& cg) {
  const Cone nef = nef_cone(fan, cg);
  if (!full_dimensional(nef)) return false;
  return membership(nef, anticanonical(cg).free.coords, true);
}

bool is_weak_fano(const Fan& fan, const ClassGroup& cg) {
  return membership(nef_cone(fan, cg), anticanonical(cg).free.coords);
}

bool is_projective_space(const Fan& fan) {
  require_smooth(fan);
  for (const auto& rel : primitive_relations(fan)) {
    if (rel.negative.empty() && rel.positive.size() == fan.dim + 1) return true;
  }
  return false;
}

bool is_extremal_fano(const Fan& fan, const ClassGroup& cg) {
  require_smooth(fan);
  if (!is_fano(fan, cg)) return false;
  for (const auto& c : extremal_contractions(fan, cg)) {
    if (c.kind == ContractionKind::Small) return false;
    if (c.kind == ContractionKind::Divisorial && !c.inert) return false;
  }
  return true;
}

bool is_birationally_inert_fano(const Fan& fan, const ClassGroup& cg) {
  if (!is_fano(fan, cg)) return false;
  for (const auto& c : extremal_contractions(fan, cg)) {
    if (c.kind == ContractionKind::Fibration) continue;
    if (c.kind != ContractionKind::Divisorial || !c.inert) return false;
  }
  return true;
}

bool eff_equals_nef(const Fan& fan, const ClassGroup& cg) {
  return extreme_rays(eff_cone(cg)) == nef_cone(fan, cg).generators;
}

std::vector<BlowdownStep> blowdown_chain(const Fan& fan) {
  std::vector<BlowdownStep> chain;
  Fan current = fan;
  try {
    for (;;) {
      const ClassGroup cg(current);
      std::optional<ContractionInfo> pick;
      for (auto& c : extremal_contractions(current, cg)) {
        if (c.kind != ContractionKind::Divisorial || !c.inert) continue;
        if (!pick || c.relation.negative.front() < pick->relation.negative.front()) pick = std::move(c);
      }
      if (!pick) break;
      const std::size_t removed = pick->relation.negative.front();
      Fan next = blowdown(current, removed, pick->relation);
      if (next.name.empty() && !current.name.empty()) next.name = current.name;
      chain.push_back({next, std::move(*pick), removed});
      current = std::move(next);
    }
    const ClassGroup terminal(current);
    if (!eff_equals_nef(current, terminal)) {
      throw Error(ErrorCode::ChainStuck, "no inert divisorial ray left but eff != nef");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ChainStuck) throw;
    throw Error(ErrorCode::ChainStuck, std::string("blowdown chain stopped: ") + e.what());
  }
  return chain;
}

}  // namespace toricfrob
