#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "gpc/combinatorics.hpp"
#include "gpc/polytope.hpp"

namespace gpc {

// Character of a polynomial GL_r module, kept as the multiplicities of its
// dominant weights. Every other weight has the multiplicity of its sorted
// rearrangement.
struct SymmetricCharacter {
  int r = 0;
  std::map<Partition, Integer> dominant;

  bool empty() const { return dominant.empty(); }
  int degree() const { return dominant.empty() ? 0 : dominant.begin()->first.size(); }
  Integer multiplicity(const std::vector<int>& weight) const;
  // Sum of all multiplicities.
  Integer dimension() const;
  // Every weight with a non-zero multiplicity, padded to length r.
  std::map<std::vector<int>, Integer> full_support() const;
  bool operator==(const SymmetricCharacter&) const = default;
};

SymmetricCharacter character(const Partition& nu, int r);
SymmetricCharacter constant_character(int r, const Integer& c = 1);

SymmetricCharacter operator+(const SymmetricCharacter& a, const SymmetricCharacter& b);
SymmetricCharacter operator-(const SymmetricCharacter& a, const SymmetricCharacter& b);
SymmetricCharacter operator*(const SymmetricCharacter& a, const SymmetricCharacter& b);
SymmetricCharacter scale(const SymmetricCharacter& a, const Integer& c);

// z_i -> z_i^k
SymmetricCharacter power_substitute(const SymmetricCharacter& f, int k);

// h_0[f], ..., h_m[f] by m h_m = sum_k p_k[f] h_{m-k}.
std::vector<SymmetricCharacter> plethysm_h_levels(int m, const SymmetricCharacter& f);
SymmetricCharacter plethysm_h(int m, const SymmetricCharacter& f);
// det(h_{mu_i - i + j}[f]); `levels` may hold precomputed h_k[f].
SymmetricCharacter plethysm_schur(const Partition& mu, const SymmetricCharacter& f);
SymmetricCharacter plethysm_schur(const Partition& mu, const std::vector<SymmetricCharacter>& levels, int r);

// Irreducible multiplicities by peeling the lexicographically largest dominant
// weight. Throws InputError when a multiplicity turns negative.
std::vector<std::pair<Partition, Integer>> schur_decompose(const SymmetricCharacter& f);

struct PlethysmComponent {
  Partition lambda;
  Partition mu;
  Integer multiplicity;
};

struct InnerPoint {
  RVec lambda;  // lambda / |mu|, length r
  RVec mu;      // mu / |mu|, length rank_bound
  bool operator<(const InnerPoint& o) const { return std::tie(lambda, mu) < std::tie(o.lambda, o.mu); }
  bool operator==(const InnerPoint&) const = default;
};

struct PlethysmLimits {
  int max_r = 8;
  int max_degree = 24;  // |nu| * M
};

struct InnerPointSet {
  std::vector<PlethysmComponent> components;
  std::vector<InnerPoint> points;  // sorted, without repetitions
};

// All (lambda/|mu|, mu/|mu|) with a non-zero multiplicity of H^lambda in the
// mu-th Schur functor of H^nu, for |mu| <= M and at most rank_bound rows.
// Exceeding the limits raises ResourceLimitError.
InnerPointSet inner_points(const Partition& nu, int r, int rank_bound, int M, const PlethysmLimits& limits = {});

}  // namespace gpc
