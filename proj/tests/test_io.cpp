#include <doctest.h>

#include <filesystem>

#include "gpc/io.hpp"

using namespace gpc;

TEST_CASE("rationals and integers") {
  for (const Rational& q : {Rational(0), Rational(-2), ratio(3, 4), ratio(-15, 28), ratio(7, 1)})
    CHECK(rational_from_json(to_json(q)) == q);
  CHECK(rational_from_json(Json(5)) == 5);
  CHECK(rational_from_json(Json("6/8")) == ratio(3, 4));
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), InputError);
  CHECK_THROWS(rational_from_json(Json("x/2")));

  const std::vector<Integer> big = {Integer("123456789012345678901234567890"), -3, 0};
  CHECK(integers_from_json(to_json(big)) == big);
  CHECK_THROWS_AS(integers_from_json(Json(3)), InputError);
  CHECK_THROWS_AS(integers_from_json(Json::array({"12a"})), InputError);
}

TEST_CASE("partitions, permutations and inequalities") {
  const Partition p({3, 1, 1});
  CHECK(partition_from_json(to_json(p)) == p);
  CHECK_THROWS_AS(partition_from_json(Json(3)), InputError);

  const auto w = Permutation::parse_cycles("(1 4 3 2)");
  const Json j = to_json(w);
  CHECK(j.at("cycles") == "(1 4 3 2)");
  CHECK(j.at("one_line") == Json::array({4, 1, 2, 3}));

  const OccupationInequality pure{{0, 0, 0, 1, -1, -1}, {}, 0};
  CHECK(inequality_from_json(to_json(pure)) == pure);
  CHECK_FALSE(to_json(pure).contains("mu"));
  const OccupationInequality mixed{{1, -1, 0, 0}, {0, -1}, 1};
  CHECK(inequality_from_json(to_json(mixed)) == mixed);
}

TEST_CASE("states and polytopes") {
  WedgeState s;
  s.N = 3;
  s.r = 7;
  s.amplitudes[{1, 2, 3}] = {1, 4};
  s.amplitudes[{1, 4, 5}] = {-1, 10};
  s.amplitudes[{3, 4, 7}] = {1, ratio(5, 2)};
  const WedgeState back = wedge_state_from_json(to_json(s));
  CHECK(back.N == 3);
  CHECK(back.r == 7);
  CHECK(back.amplitudes == s.amplitudes);

  Json repeated = to_json(s);
  repeated["terms"].push_back(repeated["terms"][0]);
  CHECK_THROWS_AS(wedge_state_from_json(repeated), InputError);
  Json outside = to_json(s);
  outside["terms"][0]["subset"] = Json::array({1, 2, 9});
  CHECK_THROWS_AS(wedge_state_from_json(outside), InputError);

  const RationalPolytope P = hull({{0, 0, 0}, {1, 0, 0}, {0, ratio(1, 2), 0}, {1, ratio(1, 2), 0}});
  const RationalPolytope Q = polytope_from_json(to_json(P));
  CHECK(Q.ambient_dim == 3);
  CHECK(Q.vertices == P.vertices);
  CHECK(Q.facets.size() == P.facets.size());
  CHECK(Q.equations.size() == P.equations.size());
  CHECK(equal(P, Q));
}

TEST_CASE("files and fixtures") {
  const auto dir = std::filesystem::temp_directory_path() / "gpc_test_io";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "x.json").string();
  const Json j = {{"a", 1}, {"b", Json::array({"1/2", 3})}};
  write_json_file(path, j);
  CHECK(read_json_file(path) == j);
  std::filesystem::remove_all(dir);
  CHECK_THROWS(read_json_file((dir / "missing.json").string()));

  const auto table = golden_table_from_json(read_json_file(default_data_dir() + "/tables/wedge3_h6.json"));
  CHECK(table.r == 6);
  CHECK(table.nu == Partition({1, 1, 1}));
  CHECK(table.rows.size() == 4);
  const auto vertices = vertex_table_from_json(read_json_file(default_data_dir() + "/states/wedge3_h8.json"));
  CHECK(vertices.N == 3);
  CHECK(vertices.r == 8);
  CHECK(vertices.rows.size() == 38);
}

TEST_CASE("words and letter polynomials") {
  CHECK(permutation_from_word("1032") == Permutation({2, 1, 4, 3}));
  CHECK(permutation_from_word("0123") == Permutation::identity());
  CHECK_THROWS_AS(permutation_from_word("10a2"), InputError);
  CHECK_THROWS_AS(permutation_from_word("0032"), InputError);

  const SparsePoly x = SparsePoly::variable(1), y = SparsePoly::variable(2), z = SparsePoly::variable(3);
  CHECK(parse_letter_polynomial("x^2+xy+xz", "xyz") == x.pow(2) + x * y + x * z);
  CHECK(parse_letter_polynomial("x^3y^2z", "xyz") == x.pow(3) * y.pow(2) * z);
  CHECK(parse_letter_polynomial("2xy+y", "xyz") == x * y * 2 + y);
  CHECK(parse_letter_polynomial("1", "xyz") == SparsePoly::constant(1));
  CHECK_THROWS_AS(parse_letter_polynomial("x+", "xyz"), InputError);
  CHECK_THROWS_AS(parse_letter_polynomial("xw", "xyz"), InputError);
  CHECK_THROWS_AS(parse_letter_polynomial("x^", "xyz"), InputError);
}
