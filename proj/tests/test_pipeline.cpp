#include <doctest.h>

#include <algorithm>
#include <set>

#include "gpc/io.hpp"
#include "gpc/pipeline.hpp"

using namespace gpc;

namespace {

OccupationInequality pure(std::vector<Integer> lambda, long bound) { return {std::move(lambda), {}, bound}; }

std::set<std::string> texts(const std::vector<OccupationInequality>& v, int N) {
  std::set<std::string> out;
  for (const auto& q : v) out.insert(canonical(q, N).to_string());
  return out;
}

RationalPolytope borland_dennis() {
  std::vector<Hyperplane> eqs;
  for (int i = 0; i < 3; ++i) {
    RVec n(6, 0);
    n[i] = n[5 - i] = 1;
    eqs.push_back({n, 1});
  }
  const MomentSystem s{Partition({1, 1, 1}), 6, 1};
  auto ineqs = s.ambient();
  ineqs.push_back({{0, 0, 0, 1, -1, -1}, 0});
  return from_constraints(6, eqs, ineqs);
}

}  // namespace

TEST_CASE("moment system coordinates") {
  const MomentSystem pure_system{Partition({1, 1, 1}), 6, 1};
  CHECK(pure_system.dim() == 6);
  CHECK(pure_system.ambient().size() == 6);
  CHECK(pure_system.traces().size() == 1);
  CHECK(pure_system.traces()[0].offset == 3);

  const MomentSystem spin{Partition({2, 1}), 4, 2};
  CHECK(spin.dim() == 6);
  CHECK(spin.ambient().size() == 6);
  REQUIRE(spin.traces().size() == 2);
  CHECK(spin.traces()[1].normal == RVec{0, 0, 0, 0, 1, 1});
  CHECK(spin.traces()[1].offset == 1);

  const OccupationInequality q{{1, -1, 0, 0}, {0, -1}, 1};
  const HalfSpace h = spin.to_halfspace(q);
  CHECK(h.normal == RVec{1, -1, 0, 0, 0, -1});
  CHECK(spin.to_inequality(h.normal, h.offset) == canonical(q, 3));
  CHECK_THROWS_AS(pure_system.to_halfspace(OccupationInequality{{1, 0, 0, 0, 0, 0, 1}, {}, 1}), InputError);
  CHECK_THROWS_AS(pure_system.to_inequality({1, 0}, 1), InputError);
}

TEST_CASE("borland-dennis system") {
  const MomentSystem s{Partition({1, 1, 1}), 6, 1};
  PipelineOptions opt;
  opt.M_max = 6;
  const auto report = pipeline(s, opt);
  REQUIRE(report.converged_at);
  CHECK(*report.converged_at == 4);
  CHECK(report.status == "converged");
  CHECK(report.steps.size() == 4);
  for (std::size_t i = 0; i + 1 < report.steps.size(); ++i) CHECK_FALSE(report.steps[i].converged);
  CHECK(report.inner.equations.size() == 3);
  CHECK(equal(report.inner, borland_dennis()));
  CHECK(equal(report.outer, borland_dennis()));
  CHECK(texts(report.inequalities, 3) == texts({pure({0, 0, 0, 1, -1, -1}, 0)}, 3));
  CHECK(equal(outer_polytope(s, {pure({0, 0, 0, 1, -1, -1}, 0), pure({1, 0, 0, 0, 0, 1}, 1), pure({-1, 0, 0, 0, 0, -1}, -1),
                                 pure({0, 1, 0, 0, 1, 0}, 1), pure({0, -1, 0, 0, -1, 0}, -1), pure({0, 0, 1, 1, 0, 0}, 1),
                                 pure({0, 0, -1, -1, 0, 0}, -1)}),
              borland_dennis()));
}

TEST_CASE("facet matching reproduces the tabulated triple") {
  const MomentSystem s{Partition({1, 1, 1}), 6, 1};
  const RationalPolytope P = borland_dennis();
  const FacetMatch m = facet_match(P, s);
  CHECK(m.unmatched.empty());
  const GoldenTable table = golden_table_from_json(read_json_file(default_data_dir() + "/tables/wedge3_h6.json"));
  std::size_t facets = 0, equations = 0;
  for (const auto& f : m.matched) {
    CHECK(f.c != 0);
    CHECK(replay_inequality(f.triple, s.nu, 0) == f.inequality);
    if (f.from_equation) {
      ++equations;
      CHECK(tight_set(f.facet, P.vertices).size() == P.vertices.size());
      continue;
    }
    ++facets;
    CHECK(f.c == 1);
    CHECK(f.inequality == canonical(pure({0, 0, 0, 1, -1, -1}, 0), 3));
    const bool tabulated = std::any_of(table.rows.begin(), table.rows.end(),
                                       [&](const GoldenRow& row) { return row.v == f.triple.v && row.w == f.triple.w; });
    CHECK(tabulated);
  }
  CHECK(facets == 1);
  CHECK(equations >= 6);
  CHECK(m.ambient + facets == P.facets.size());
}

TEST_CASE("rank seven system") {
  const MomentSystem s{Partition({1, 1, 1}), 7, 1};
  PipelineOptions opt;
  opt.M_max = 8;
  const auto report = pipeline(s, opt);
  REQUIRE(report.converged_at);
  CHECK(*report.converged_at == 8);
  const std::vector<OccupationInequality> expected = {pure({0, 1, 1, 1, 1, 0, 0}, 2), pure({1, 0, 1, 1, 0, 1, 0}, 2),
                                                      pure({1, 1, 0, 0, 1, 1, 0}, 2), pure({1, 1, 0, 1, 0, 0, 1}, 2)};
  CHECK(texts(report.inequalities, 3) == texts(expected, 3));
  CHECK(equal(report.inner, outer_polytope(s, expected)));

  // inner hulls grow with M
  for (int M = 2; M <= 7; ++M) {
    PipelineOptions small;
    small.M_max = M;
    const auto a = pipeline(s, small);
    small.M_max = M + 1;
    const auto b = pipeline(s, small);
    for (const auto& v : a.inner.vertices) CHECK(b.inner.contains(v));
    CHECK(a.inner.dimension() <= b.inner.dimension());
  }
}

TEST_CASE("resource caps and invalid input") {
  const MomentSystem s{Partition({1, 1, 1}), 7, 1};
  PipelineOptions opt;
  opt.M_max = 8;
  opt.limits.max_degree = 12;
  const auto report = pipeline(s, opt);
  CHECK_FALSE(report.converged_at);
  CHECK(report.status.rfind("resource cap", 0) == 0);
  CHECK(report.steps.size() == 4);

  CHECK_THROWS_AS(pipeline(MomentSystem{Partition({1, 1, 1}), 2, 1}, {}), InputError);
  CHECK_THROWS_AS(pipeline(MomentSystem{Partition({2, 1}), 4, 0}, {}), InputError);
}
