#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "gpc/coefficients.hpp"
#include "gpc/io.hpp"
#include "gpc/states.hpp"
#include "oracle.hpp"

using namespace gpc;
using cplx = std::complex<double>;

namespace {

WedgeState wedge(int N, int r, const std::vector<std::pair<std::vector<int>, Rational>>& terms) {
  WedgeState s;
  s.N = N;
  s.r = r;
  for (const auto& [subset, radicand] : terms) s.amplitudes[subset] = RootCoefficient{1, radicand};
  return s;
}

std::vector<Rational> rationals(const std::vector<int>& v, int num, int den) {
  std::vector<Rational> out;
  for (int x : v) out.push_back(ratio(x * num, den));
  return out;
}

}  // namespace

TEST_CASE("slater determinants") {
  const auto s = wedge(3, 6, {{{1, 2, 3}, 1}});
  const auto rdm = one_particle_rdm(s);
  CHECK(rdm.structurally_diagonal);
  CHECK(rdm.exact_diagonal == std::vector<Rational>{1, 1, 1, 0, 0, 0});
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(std::abs(rdm(i, j) - cplx(i == j && i < 3 ? 1.0 : 0.0)) < 1e-15);
  const auto split = occupation_numbers(wedge(4, 8, {{{1, 2, 3, 4}, 1}, {{5, 6, 7, 8}, 1}}));
  REQUIRE(split.exact);
  CHECK(*split.exact == std::vector<Rational>(8, ratio(1, 2)));
}

TEST_CASE("occupation numbers of table states") {
  const auto two = occupation_numbers(wedge(3, 6, {{{1, 2, 3}, 1}, {{1, 4, 5}, 1}}));
  CHECK(*two.exact == rationals({2, 1, 1, 1, 1, 0}, 1, 2));

  const auto special = wedge(3, 8,
                             {{{1, 2, 3}, 4},
                              {{1, 4, 5}, 10},
                              {{3, 4, 7}, 5},
                              {{3, 5, 6}, 2},
                              {{2, 5, 8}, 2},
                              {{3, 6, 8}, 4},
                              {{1, 7, 8}, 1}});
  const auto occ = occupation_numbers(special);
  const std::vector<double> expected{15, 15, 15, 15, 6, 6, 6, 6};
  for (int i = 0; i < 8; ++i) CHECK(occ.values[i] == doctest::Approx(expected[i] / 28).epsilon(1e-12));
  CHECK(verify_vertex(special, rationals({5, 5, 5, 5, 2, 2, 2, 2}, 1, 1)).ok);

  const auto last = wedge(3, 8, {{{1, 2, 3}, 3}, {{1, 4, 5}, 2}, {{2, 4, 6}, 1}, {{2, 5, 7}, 1}});
  CHECK(verify_vertex(last, rationals({5, 5, 3, 3, 3, 1, 1, 0}, 1, 1)).ok);
}

TEST_CASE("vertex tables") {
  for (const auto& [name, rows] : std::vector<std::pair<std::string, std::size_t>>{{"wedge4_h8", 22}, {"wedge3_h8", 38}}) {
    const VertexTable table = vertex_table_from_json(read_json_file(default_data_dir() + "/states/" + name + ".json"));
    CHECK(table.rows.size() == rows);
    for (const auto& row : table.rows) {
      const auto check = verify_vertex(row.state, row.vertex);
      CHECK(check.ok);
      CHECK(check.max_deviation < 1e-9);
    }
    // perturbing one amplitude moves the spectrum away from the vertex
    for (const auto& row : table.rows) {
      if (row.state.amplitudes.size() < 2) continue;
      WedgeState bent = row.state;
      bent.amplitudes.begin()->second.radicand *= 3;
      CHECK_FALSE(verify_vertex(bent, row.vertex).ok);
    }
  }
}

TEST_CASE("rdm agrees with the antisymmetrized tensor") {
  std::mt19937_64 rng(41);
  const std::vector<std::pair<int, int>> systems{{1, 5}, {2, 5}, {2, 6}, {2, 8}, {3, 6}, {3, 7}, {4, 7}, {5, 7}};
  for (auto [N, r] : systems) {
    for (int n = 0; n < 200; ++n) {
      const DenseState s = DenseState::random(N, r, rng, n % 4 == 0);
      const auto fast = one_particle_rdm(s);
      const auto slow = oracle::tensor_rdm(s);
      double worst = 0;
      for (int i = 0; i < r * r; ++i) worst = std::max(worst, std::abs(fast.matrix[i] - slow[i]));
      CAPTURE(N);
      CAPTURE(r);
      CHECK(worst < 1e-12);
      const auto occ = occupation_numbers(s);
      CHECK(std::accumulate(occ.values.begin(), occ.values.end(), 0.0) == doctest::Approx(N).epsilon(1e-12));
      for (double x : occ.values) {
        CHECK(x >= -1e-12);
        CHECK(x <= 1 + 1e-12);
      }
      CHECK(std::is_sorted(occ.values.rbegin(), occ.values.rend()));
    }
  }
}

TEST_CASE("rdm sign convention on a real two-term state") {
  // [12] + [13]: off-diagonal entry between orbitals 2 and 3
  const auto s = wedge(2, 3, {{{1, 2}, 1}, {{1, 3}, 1}});
  const auto fast = one_particle_rdm(s);
  const auto slow = oracle::tensor_rdm(DenseState::from(s));
  for (int i = 0; i < 9; ++i) CHECK(std::abs(fast.matrix[i] - slow[i]) < 1e-14);
  CHECK_FALSE(fast.structurally_diagonal);
  CHECK(std::abs(fast(1, 2) - cplx(0.5)) < 1e-14);
}

TEST_CASE("Borland-Dennis equalities on random states") {
  std::mt19937_64 rng(43);
  for (int n = 0; n < 200; ++n) {
    const auto l = occupation_numbers(DenseState::random(3, 6, rng)).values;
    CHECK(l[0] + l[5] == doctest::Approx(1).epsilon(1e-9));
    CHECK(l[1] + l[4] == doctest::Approx(1).epsilon(1e-9));
    CHECK(l[2] + l[3] == doctest::Approx(1).epsilon(1e-9));
    CHECK(l[3] <= l[4] + l[5] + 1e-9);
  }
}

TEST_CASE("table states satisfy the table inequalities") {
  const VertexTable states = vertex_table_from_json(read_json_file(default_data_dir() + "/states/wedge4_h8.json"));
  const GoldenTable table = golden_table_from_json(read_json_file(default_data_dir() + "/tables/wedge4_h8.json"));
  for (const auto& row : states.rows) {
    const auto occ = occupation_numbers(row.state);
    for (const auto& q : table.rows) {
      double lhs = 0;
      for (int i = 0; i < 8; ++i) lhs += q.lambda_coeffs[i].get_d() * occ.values[i];
      CHECK(lhs <= q.bound.get_d() + 1e-9);
    }
  }
}

TEST_CASE("invalid states") {
  WedgeState zero;
  zero.N = 2;
  zero.r = 3;
  CHECK_THROWS_AS(zero.validate(), InputError);
  CHECK_THROWS_AS(occupation_numbers(zero), InputError);
  CHECK_THROWS_AS(wedge(2, 3, {{{1, 4}, 1}}).validate(), InputError);
  CHECK_THROWS_AS(wedge(2, 3, {{{2, 1}, 1}}).validate(), InputError);
}

TEST_CASE("weight graph") {
  // weights of [123], [124] and [145] in five orbitals
  const std::vector<int> w123{1, 1, 1, 0, 0}, w124{1, 1, 0, 1, 0}, w145{1, 0, 0, 1, 1};
  CHECK(weight_graph_disconnected({w123}));
  CHECK_FALSE(weight_graph_disconnected({w123, w124}));
  CHECK(weight_graph_disconnected({w123, w145}));
}

TEST_CASE("Dadok-Kac spectra") {
  auto tableau = [](std::vector<std::vector<int>> rows) {
    std::vector<int> parts;
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return SemistandardTableau{Partition(parts), std::move(rows)};
  };

  // two-row diagram [N-1,1]: vertex tau_k
  for (int N = 4; N <= 6; ++N)
    for (int k = 2; k <= 6; ++k) {
      TableauState psi{Partition({N - 1, 1}), k, {}};
      std::vector<int> first{1};
      first.resize(N - 1, k);
      psi.terms.push_back({tableau({first, {k}}), RootCoefficient{1, 1}});
      for (int i = 2; i < k; ++i) {
        std::vector<int> row{i, i};
        row.resize(N - 1, k);
        psi.terms.push_back({tableau({row, {k}}), RootCoefficient{1, ratio(1, 2)}});
      }
      std::vector<Rational> tau(k, ratio(2, k));
      tau[0] = N - 2 + ratio(2, k);
      CAPTURE(N);
      CAPTURE(k);
      CHECK(dadok_kac_spectrum(psi) == tau);
    }

  // [2,1]: vertex eta_k
  for (int k = 3; k <= 7; ++k) {
    TableauState psi{Partition({2, 1}), k, {}};
    psi.terms.push_back({tableau({{1, 1}, {2}}), RootCoefficient{1, k + 1}});
    psi.terms.push_back({tableau({{2, 2}, {3}}), RootCoefficient{1, 2}});
    for (int i = 4; i <= k; ++i) psi.terms.push_back({tableau({{2, i}, {i}}), RootCoefficient{1, 1}});
    std::vector<Rational> eta(k, ratio(1, k));
    eta[0] = eta[1] = 1 + ratio(1, k);
    CHECK(dadok_kac_spectrum(psi) == eta);
  }

  // coherent state
  TableauState coherent{Partition({3, 2, 1}), 4, {{tableau({{1, 1, 1}, {2, 2}, {3}}), RootCoefficient{1, 1}}}};
  CHECK(dadok_kac_spectrum(coherent) == std::vector<Rational>{3, 2, 1, 0});

  TableauState connected{Partition({1, 1}), 3, {}};
  connected.terms.push_back({tableau({{1}, {2}}), RootCoefficient{1, 1}});
  connected.terms.push_back({tableau({{1}, {3}}), RootCoefficient{1, 1}});
  CHECK_THROWS_AS(dadok_kac_spectrum(connected), InputError);

  // wedge case: matches the exact diagonal
  const auto w = wedge(3, 6, {{{1, 2, 3}, 3}, {{1, 4, 5}, 1}});
  TableauState same{Partition({1, 1, 1}), 6, {}};
  same.terms.push_back({tableau({{1}, {2}, {3}}), RootCoefficient{1, 3}});
  same.terms.push_back({tableau({{1}, {4}, {5}}), RootCoefficient{1, 1}});
  CHECK(dadok_kac_spectrum(same) == *occupation_numbers(w).exact);
}
