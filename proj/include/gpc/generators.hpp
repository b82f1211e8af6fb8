#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpc/coefficients.hpp"
#include "gpc/combinatorics.hpp"
#include "gpc/states.hpp"

namespace gpc {

// A spectrum violating an excluded inequality, with a state realizing it.
struct Certificate {
  std::vector<Rational> spectrum;
  std::string source;
  WedgeState witness;
};

struct FamilyItem {
  std::optional<Partition> diagram;
  std::vector<int> indices;
  Integer c_gamma;
  OccupationInequality inequality;
};

struct Exclusion {
  Partition diagram;
  std::vector<int> indices;
  Integer c_gamma;
  std::string reason;
  OccupationInequality inequality;
  std::optional<Certificate> certificate;
};

enum class FamilyKind { Majorization, GrassmannFirst, GrassmannSecond, Series };

std::string to_string(FamilyKind kind);

struct InequalityFamily {
  FamilyKind kind = FamilyKind::Majorization;
  int N = 0;
  int r = 0;  // length of the coefficient vectors
  int p = 0;
  std::vector<FamilyItem> items;
  std::vector<Exclusion> exclusions;
  std::string note;
};

// Partial-sum bounds sum_{i<=k} lambda_i <= sum_{i<=k} nu_i that define facets
// of the majorization polytope of nu inside the ordered simplex.
InequalityFamily majorization_constraints(const Partition& nu, int r);

// lambda_{i_1} + ... + lambda_{i_{N-1}} <= N-2 for diagrams of size r-N+1.
// For N < 3 the family is empty and carries a note.
InequalityFamily grassmann_kind1(int N, int r);
// lambda_{i_1} + ... + lambda_{i_p} <= N-1 for diagrams of size binom(p, N).
// Levels above max_p raise ResourceLimitError.
InequalityFamily grassmann_kind2(int N, int p, int max_p = 7);

// Coefficient of S_gamma in prod_{N<=j<=r}(x_1+...+x_{N-1}+x_j) via the
// cell-removal recurrence.
Integer cgamma_kind1(const Partition& gamma, int N, int r);
// sum_k (-1)^k t(gamma/[k])
Integer cgamma_kind1_alternating(const Partition& gamma);
// sum_{i>0} t(gamma/[2i,1]), valid for diagrams that are neither rows nor columns
Integer cgamma_kind1_positive(const Partition& gamma);

// Coefficient of S_gamma in prod_{i<=N+1}(e_1 - x_i), |gamma| = N+1.
Integer cgamma_kind2(const Partition& gamma, int N);
// sum_{i>0} t(gamma/[2,1^{2i-1}]), for non-column diagrams
Integer cgamma_kind2_positive(const Partition& gamma);
// prod over N-subsets K of [p] of x_K
SparsePoly kind2_product(int N, int p);

// i_k = k + binom(k-1, N-1), bound N-1.
OccupationInequality series_inequality(int N, int p);

// Particle-hole duality lambda*_i = s - lambda_{r+1-i}.
std::vector<Rational> hole_dual(const std::vector<Rational>& lambda, const Rational& s);
OccupationInequality hole_dual(const OccupationInequality& ineq, const Integer& s);

// Σ c_i lambda_i <= bound with the indices listed, coefficient vector of length r.
OccupationInequality index_inequality(const std::vector<int>& indices, int bound, int r);

}  // namespace gpc
