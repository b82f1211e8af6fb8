#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpc/combinatorics.hpp"
#include "gpc/permutation.hpp"
#include "gpc/polynomial.hpp"

namespace gpc {

// Weakly decreasing integer vector a of length r.
class TestSpectrum {
 public:
  TestSpectrum() = default;
  explicit TestSpectrum(std::vector<long> values);
  // Clears denominators: scales by the lcm of the denominators.
  static TestSpectrum from_rationals(const std::vector<Rational>& values);

  int size() const { return static_cast<int>(values_.size()); }
  long operator[](int i) const { return values_[i]; }
  const std::vector<long>& values() const { return values_; }
  std::vector<std::pair<int, int>> blocks() const { return blocks_of_equal(values_); }
  bool operator==(const TestSpectrum&) const = default;

 private:
  std::vector<long> values_;
};

struct InducedEntry {
  long value;
  SemistandardTableau tableau;
};

// a^nu: the values a_T over SSYT T of shape nu with entries <= r, sorted
// non-increasingly; ties keep the canonical tableau order.
class InducedSpectrum {
 public:
  InducedSpectrum(const TestSpectrum& a, const Partition& nu);

  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<InducedEntry>& entries() const { return entries_; }
  std::vector<long> values() const;
  std::vector<std::pair<int, int>> blocks() const { return blocks_of_equal(values()); }

 private:
  std::vector<InducedEntry> entries_;
};

// S_w(x_{T_1}, x_{T_2}, ...) with x_T the sum of x_i over the entries of T.
// Variables outside `keep` (if non-empty) are set to zero.
SparsePoly specialized_schubert(const InducedSpectrum& induced, int r, const Permutation& w,
                                const std::vector<bool>& keep = {});

// c^v_w(a) for the GL_r representation of highest weight nu. Throws InputError
// when v or w is not a minimal coset representative.
Integer coefficient(const TestSpectrum& a, const Partition& nu, int r, const Permutation& v,
                    const Permutation& w);

// Linear constraint sum_i c_i lambda_i + sum_j d_j mu_j <= bound. An empty
// mu_coeffs means a pure state (mu = (1,0,...)).
struct OccupationInequality {
  std::vector<Integer> lambda_coeffs;
  std::vector<Integer> mu_coeffs;
  Integer bound;

  bool is_pure() const { return mu_coeffs.empty(); }
  // Integer-scaled and trace-shifted representative, see canonical().
  std::string to_string() const;
  bool operator==(const OccupationInequality&) const = default;
};

// Removes the trace freedom and scaling: mu coefficients are shifted so that
// d_1 = 0; lambda coefficients are shifted by one of their most frequent
// values and divided by the gcd, keeping the candidate with the smallest L1
// norm, then the smallest |bound|, then the lexicographically largest
// coefficients. The result depends only on the inequality modulo the traces.
// `N` is the lambda trace.
OccupationInequality canonical(const OccupationInequality& ineq, int N);
// Same for a rational normal/offset pair.
OccupationInequality canonical(const std::vector<Rational>& lambda_coeffs, const std::vector<Rational>& mu_coeffs,
                               const Rational& bound, int N);

struct Triple {
  TestSpectrum a;
  Permutation v;
  Permutation w;
};

struct TripleSearch {
  std::optional<Triple> triple;
  std::string failure;
};

// Reconstructs (a, v, w) with sum a_i lambda_{v(i)} <= sum a^nu_k mu_{w(k)}
// equal to the inequality modulo trace and positive scaling.
TripleSearch inequality_to_triple(const OccupationInequality& ineq, const Partition& nu);

// The inequality encoded by (a, v, w), with `rank` mu coordinates (0 for pure).
OccupationInequality replay_inequality(const Triple& t, const Partition& nu, int rank);

struct GoldenRow {
  std::vector<Integer> lambda_coeffs;
  Integer bound;
  Permutation v;
  Permutation w;
  Integer c;
};

struct GoldenTable {
  std::string name;
  Partition nu;
  int r = 0;
  std::vector<GoldenRow> rows;
};

struct RowCheck {
  int index = 0;
  Integer expected;
  Integer computed;
  bool v_consistent = false;
  bool bound_consistent = false;
  bool derived_matches = false;  // inequality_to_triple reproduces the listed v, w
  bool ok() const { return v_consistent && bound_consistent && computed == expected; }
};

struct TableReport {
  std::string name;
  std::vector<RowCheck> rows;
  bool all_ok() const;
};

TableReport verify_table(const GoldenTable& table);

}  // namespace gpc
