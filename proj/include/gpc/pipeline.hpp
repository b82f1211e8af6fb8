#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpc/coefficients.hpp"
#include "gpc/plethysm.hpp"
#include "gpc/polytope.hpp"

namespace gpc {

// Coordinates are (lambda_1..lambda_r) for rank 1 and
// (lambda_1..lambda_r, mu_1..mu_rank) otherwise.
struct MomentSystem {
  Partition nu;
  int r = 0;
  int rank = 1;

  int N() const { return nu.size(); }
  int dim() const { return rank > 1 ? r + rank : r; }
  // Weyl chamber, lambda_r >= 0, mu_rank >= 0.
  std::vector<HalfSpace> ambient() const;
  // Trace equations.
  std::vector<Hyperplane> traces() const;
  OccupationInequality to_inequality(const RVec& normal, const Rational& offset) const;
  HalfSpace to_halfspace(const OccupationInequality& ineq) const;
};

struct MatchedFacet {
  HalfSpace facet;                  // as found on the polytope
  OccupationInequality inequality;  // canonical representative that produced c != 0
  Triple triple;
  Integer c;
  bool from_equation = false;
};

struct FacetMatch {
  std::vector<MatchedFacet> matched;
  std::vector<HalfSpace> unmatched;
  std::size_t ambient = 0;  // facets that coincide with an ambient constraint
};

struct MatchOptions {
  int max_candidates = 2000;
};

// Tries every facet of `inner` (and both directions of its equations) against
// the coefficient criterion, adding small integer combinations of the affine
// hull equations to reach a representative the criterion recognizes.
FacetMatch facet_match(const RationalPolytope& inner, const MomentSystem& system, const MatchOptions& options = {});

struct PipelineStep {
  int M = 0;
  std::size_t points = 0;
  int inner_dim = -1;
  std::size_t inner_facets = 0;
  std::size_t inner_vertices = 0;
  FacetMatch match;
  bool converged = false;
  double seconds = 0;
};

struct PipelineOptions {
  int M_max = 4;
  PlethysmLimits limits;
  MatchOptions match;
};

struct PipelineReport {
  MomentSystem system;
  std::vector<PipelineStep> steps;
  std::optional<int> converged_at;
  std::string status;  // "converged", "not converged" or the resource-cap message
  RationalPolytope inner;
  RationalPolytope outer;
  // Canonical non-ambient facets of the final inner polytope.
  std::vector<OccupationInequality> inequalities;
};

PipelineReport pipeline(const MomentSystem& system, const PipelineOptions& options);

// Outer polytope cut out by the ambient system and the given inequalities.
RationalPolytope outer_polytope(const MomentSystem& system, const std::vector<OccupationInequality>& inequalities);

}  // namespace gpc
