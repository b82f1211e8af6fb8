#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gpc/generators.hpp"
#include "gpc/schubert.hpp"
#include "oracle.hpp"

using namespace gpc;
using oracle::chern_product;
using oracle::kind1_expansion;
using oracle::shuffle_of;

namespace {

std::set<std::vector<int>> index_sets(const InequalityFamily& f) {
  std::set<std::vector<int>> out;
  for (const auto& item : f.items) out.insert(item.indices);
  return out;
}

double weighted(const OccupationInequality& q, const std::vector<double>& lambda) {
  double s = 0;
  for (std::size_t i = 0; i < q.lambda_coeffs.size() && i < lambda.size(); ++i) s += q.lambda_coeffs[i].get_d() * lambda[i];
  return s;
}

// The witness state reproduces the certificate spectrum and violates the inequality.
void check_certificate(const Exclusion& e) {
  REQUIRE(e.certificate);
  const auto occ = occupation_numbers(e.certificate->witness);
  REQUIRE(occ.exact);
  std::vector<Rational> spectrum = *occ.exact;
  spectrum.resize(std::max(spectrum.size(), e.certificate->spectrum.size()), Rational(0));
  std::vector<Rational> expected = e.certificate->spectrum;
  expected.resize(spectrum.size(), Rational(0));
  CHECK(spectrum == expected);
  Rational lhs = 0;
  for (std::size_t i = 0; i < e.inequality.lambda_coeffs.size() && i < spectrum.size(); ++i)
    lhs += e.inequality.lambda_coeffs[i] * spectrum[i];
  CHECK(lhs > e.inequality.bound);
}

}  // namespace

TEST_CASE("majorization constraints") {
  const auto pauli = majorization_constraints(Partition({1, 1, 1}), 6);
  REQUIRE(pauli.items.size() == 1);
  CHECK(pauli.items[0].inequality == index_inequality({1}, 1, 6));
  CHECK(majorization_constraints(Partition({3}), 4).items.empty());
  const auto closed = majorization_constraints(Partition({2, 2}), 4);
  REQUIRE(closed.items.size() == 1);
  CHECK(closed.items[0].inequality == index_inequality({1}, 2, 4));
  const auto spin = majorization_constraints(Partition({2, 1}), 4);
  // lambda_1 + lambda_2 <= 3 is implied by lambda_3, lambda_4 >= 0
  REQUIRE(spin.items.size() == 1);
  CHECK(spin.items[0].inequality == index_inequality({1}, 2, 4));
}

TEST_CASE("grassmann inequalities of the second kind") {
  const auto bd = grassmann_kind2(3, 4);
  CHECK(index_sets(bd) == std::set<std::vector<int>>{{2, 3, 4, 5}, {1, 3, 4, 6}, {1, 2, 5, 6}, {1, 2, 4, 7}});
  for (const auto& item : bd.items) {
    CHECK(item.inequality.bound == 2);
    CHECK(item.c_gamma > 0);
  }
  REQUIRE(bd.exclusions.size() == 1);
  CHECK(bd.exclusions[0].reason == "false1");
  CHECK(bd.exclusions[0].certificate->source == "slater");
  check_certificate(bd.exclusions[0]);

  const auto odd = grassmann_kind2(2, 4);
  CHECK(index_sets(odd) == std::set<std::vector<int>>{{1, 3, 5, 7}});
  CHECK(odd.items[0].inequality.bound == 1);

  const auto inc = grassmann_kind2(3, 3);
  CHECK(index_sets(inc) == std::set<std::vector<int>>{{1, 2, 4}});

  const auto even = grassmann_kind2(4, 5);
  std::set<std::string> reasons;
  for (const auto& e : even.exclusions) {
    reasons.insert(e.reason);
    check_certificate(e);
  }
  CHECK(reasons == std::set<std::string>{"false1", "false2"});
  for (const auto& e : even.exclusions)
    if (e.reason == "false2") CHECK(e.certificate->source == "flat");

  CHECK_THROWS_AS(grassmann_kind2(4, 3), InputError);
  CHECK_THROWS_AS(grassmann_kind2(3, 8), ResourceLimitError);
}

TEST_CASE("second kind items match the product expansion for p up to 6") {
  for (int N = 2; N <= 4; ++N)
    for (int p = N; p <= 6 && binomial(p, N) <= 15; ++p) {
      const auto fam = grassmann_kind2(N, p);
      const auto expansion = schur_expand(chern_product(N, p), p);
      std::set<std::vector<int>> expected;
      for (const auto& [g, c] : expansion)
        if (c != 0 && !(p == N + 1 && (g.is_row() || (g.is_column() && N % 2 == 0))))
          expected.insert(vertical_sequence({g, p, static_cast<int>(binomial(p, N).get_si())}));
      CHECK(index_sets(fam) == expected);
      for (const auto& item : fam.items) CHECK(item.c_gamma == expansion.at(*item.diagram));
    }
}

TEST_CASE("grassmann inequalities of the first kind") {
  const auto r6 = index_sets(grassmann_kind1(3, 6));
  for (std::vector<int> pair : {std::vector<int>{1, 6}, {2, 5}, {3, 4}}) CHECK(r6.count(pair));

  const auto r7 = grassmann_kind1(3, 7);
  CHECK_FALSE(index_sets(r7).count({1, 7}));
  bool row_excluded = false;
  for (const auto& e : r7.exclusions)
    if (e.reason == "row_inq") {
      row_excluded = true;
      CHECK(e.indices == std::vector<int>{1, 7});
      check_certificate(e);
    }
  CHECK(row_excluded);

  const auto n4 = grassmann_kind1(4, 7);
  std::set<std::vector<int>> triples;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      for (int k = j + 1; k <= 7; ++k)
        if (i + j + k == 10) triples.insert({i, j, k});
  for (const auto& t : triples) CHECK(index_sets(n4).count(t));
  for (const auto& item : n4.items) {
    CHECK(item.inequality.bound == 2);
    CHECK(item.indices.size() == 3);
  }

  const auto small = grassmann_kind1(2, 5);
  CHECK(small.items.empty());
  CHECK_FALSE(small.note.empty());
  CHECK_THROWS_AS(grassmann_kind1(4, 4), InputError);
}

TEST_CASE("first kind coefficients agree three ways") {
  for (int l = 1; l <= 7; ++l) {
    const int N = l + 1, r = 2 * l;
    const auto expansion = kind1_expansion(N, r);
    for (const auto& g : partitions_of(l, N - 1, l)) {
      const Integer rec = cgamma_kind1(g, N, r);
      CHECK(rec == cgamma_kind1_alternating(g));
      const Permutation v = shuffle_of(g, N - 1, r);
      CHECK(rec == (expansion.count(v) ? expansion.at(v) : Integer(0)));
      if (!g.is_row() && !g.is_column()) CHECK(rec == cgamma_kind1_positive(g));
      if (g.is_row()) CHECK(rec == (l % 2 == 0 ? 1 : 0));
    }
  }
  CHECK_THROWS_AS(cgamma_kind1(Partition({2}), 3, 6), InputError);
}

TEST_CASE("two-row first kind coefficients follow the Pascal triangle") {
  // rows l = 0..8 of the printed triangle, entries k = 0..l+1
  const std::vector<std::vector<int>> triangle = {{1, -1},
                                                  {0, 0, 0},
                                                  {1, 0, 0, -1},
                                                  {0, 1, 0, -1, 0},
                                                  {1, 1, 1, -1, -1, -1},
                                                  {0, 2, 2, 0, -2, -2, 0},
                                                  {1, 2, 4, 2, -2, -4, -2, -1},
                                                  {0, 3, 6, 6, 0, -6, -6, -3, 0},
                                                  {1, 3, 9, 12, 6, -6, -12, -9, -3, -1}};
  for (int l = 1; l <= 8; ++l)
    for (int k = 0; 2 * k <= l; ++k) {
      const Partition g({l - k, k});
      CAPTURE(l);
      CAPTURE(k);
      CHECK(cgamma_kind1(g, std::max(3, g.length() + 1), std::max(3, g.length() + 1) + l - 1) == triangle[l][k]);
      CHECK(cgamma_kind1_alternating(g) == triangle[l][k]);
    }
}

TEST_CASE("second kind coefficients agree three ways") {
  for (int N = 1; N <= 6; ++N) {
    const auto expansion = schur_expand(chern_product(N, N + 1), N + 1);
    for (const auto& g : partitions_of(N + 1, N + 1)) {
      const Integer c = cgamma_kind2(g, N);
      CHECK(c == (expansion.count(g) ? expansion.at(g) : Integer(0)));
      if (!g.is_column()) CHECK(c == cgamma_kind2_positive(g));
      if (g.is_row()) CHECK(c == 0);
      if (g.is_column()) CHECK(c == (N % 2 == 0 ? 0 : 1));
    }
  }
  CHECK(cgamma_kind2(Partition({2, 1, 1}), 3) > 0);
  CHECK_THROWS_AS(cgamma_kind2(Partition({2, 1}), 3), InputError);
}

TEST_CASE("series and hole duality") {
  const auto s3 = series_inequality(3, 6);
  CHECK(s3 == index_inequality({1, 2, 4, 7, 11, 16}, 2, 16));
  const auto s2 = series_inequality(2, 4);
  CHECK(s2 == index_inequality({1, 3, 5, 7}, 1, 7));
  CHECK(series_inequality(4, 4) == index_inequality({1, 2, 3, 5}, 3, 5));

  const std::vector<Rational> v{1, 1, 1, 0, 0, 0};
  CHECK(hole_dual(v, 1) == v);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int n = 0; n < 50; ++n) {
    OccupationInequality q;
    for (int i = 0; i < 7; ++i) q.lambda_coeffs.push_back(c(rng));
    q.bound = c(rng);
    CHECK(hole_dual(hole_dual(q, 1), 1) == q);
  }
  // two-particle head degeneracy lambda_1 = lambda_2 maps to the tail of the hole system
  const OccupationInequality head = index_inequality({1}, 0, 6);
  OccupationInequality pair = head;
  pair.lambda_coeffs[1] = -1;
  const auto tail = hole_dual(pair, 1);
  CHECK(tail.lambda_coeffs == std::vector<Integer>{0, 0, 0, 0, 1, -1});
  CHECK(tail.bound == 0);
}

TEST_CASE("generated inequalities hold on random pure states") {
  std::mt19937_64 rng(31);
  for (auto [N, r] : std::vector<std::pair<int, int>>{{3, 6}, {3, 7}, {3, 8}, {4, 8}}) {
    std::vector<OccupationInequality> ineqs;
    for (const auto& item : grassmann_kind1(N, r).items) ineqs.push_back(item.inequality);
    for (int p = N; p <= 6; ++p)
      for (const auto& item : grassmann_kind2(N, p).items)
        if (item.inequality.lambda_coeffs.size() <= static_cast<std::size_t>(r)) ineqs.push_back(item.inequality);
    for (const auto& item : majorization_constraints(Partition::column(N), r).items) ineqs.push_back(item.inequality);
    REQUIRE(!ineqs.empty());
    double worst = -1e9;
    for (int n = 0; n < 1000; ++n) {
      const auto occ = occupation_numbers(DenseState::random(N, r, rng));
      for (const auto& q : ineqs) worst = std::max(worst, weighted(q, occ.values) - q.bound.get_d());
    }
    CAPTURE(N);
    CAPTURE(r);
    CHECK(worst <= 1e-9);
  }
}
