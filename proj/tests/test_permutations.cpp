#include <doctest.h>

#include <algorithm>
#include <random>

#include "gpc/coefficients.hpp"
#include "gpc/permutation.hpp"
#include "gpc/schubert.hpp"

using namespace gpc;

namespace {

int inversions(const std::vector<int>& a) {
  int n = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) n += a[i] > a[j];
  return n;
}

// Reduced word peeling the smallest right descent each time.
std::vector<int> smallest_descent_word(Permutation w) {
  std::vector<int> word;
  while (w.length() > 0) {
    int i = 1;
    while (w(i) < w(i + 1)) ++i;
    word.insert(word.begin(), i);
    w = w * Permutation::simple(i);
  }
  return word;
}

}  // namespace

TEST_CASE("length") {
  CHECK(Permutation::identity().length() == 0);
  CHECK(Permutation::longest(4).length() == 6);
  CHECK(Permutation::longest(4).one_line(4) == std::vector<int>{4, 3, 2, 1});
  CHECK(Permutation::cycle(2, 6).length() == 4);
  for (const auto& w : all_permutations(5)) CHECK(w.length() == inversions(w.one_line(5)));
}

TEST_CASE("reduced words") {
  CHECK(Permutation::cycle(2, 6).reduced_word() == std::vector<int>{2, 3, 4, 5});
  CHECK(Permutation::identity().reduced_word().empty());
  CHECK(Permutation::simple(1).reduced_word() == std::vector<int>{1});
  for (const auto& w : all_permutations(5)) {
    const auto word = w.reduced_word();
    CHECK(static_cast<int>(word.size()) == w.length());
    CHECK(Permutation::from_word(word) == w);
    CHECK(Permutation::from_word(smallest_descent_word(w)) == w);
  }
}

TEST_CASE("composition and cycles") {
  const Permutation u = Permutation::parse_cycles("(1 2 3)(4 5)");
  CHECK(u.one_line(5) == std::vector<int>{2, 3, 1, 5, 4});
  CHECK(Permutation::parse_cycles(u.cycle_string()) == u);
  CHECK(Permutation::parse_cycles("()") == Permutation::identity());
  CHECK(Permutation::parse_cycles("id") == Permutation::identity());
  CHECK_THROWS_AS(Permutation::parse_cycles("(1 2"), InputError);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), InputError);
  const Permutation w = Permutation::transposition(2, 4);
  for (int i = 1; i <= 5; ++i) CHECK((u * w)(i) == u(w(i)));
  CHECK(u * u.inverse() == Permutation::identity());
  // S_n embeds in S_{n+1}
  CHECK(Permutation({2, 1, 3, 4}) == Permutation({2, 1}));
}

TEST_CASE("minimal coset representatives") {
  CHECK(is_minimal_on_blocks(Permutation::identity(), {{1, 3}, {4, 6}}));
  CHECK_FALSE(is_minimal_on_blocks(Permutation({2, 1, 3}), {{1, 2}, {3, 3}}));
  const InducedSpectrum induced(TestSpectrum({1, 1, 0, 0, 0, 0}), Partition({1, 1, 1}));
  CHECK(is_minimal_on_blocks(Permutation::cycle(1, 5), induced.blocks()));
  CHECK_FALSE(is_minimal_on_blocks(Permutation::simple(1), induced.blocks()));
}

TEST_CASE("grassmann shuffles") {
  CHECK(grassmann_shuffle({1, 2, 3}, {4, 5, 6}) == Permutation::identity());
  CHECK(grassmann_shuffle({2, 3, 4, 5}, {1, 6, 7}).length() == 4);
  CHECK(grassmann_shuffle({1, 2, 4, 7}, {3, 5, 6}).length() == 4);
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q)
      for (int n = 0; n <= p * q; ++n)
        for (const auto& g : partitions_of(n, p, q)) {
          const auto I = vertical_sequence({g, p, q});
          std::vector<int> J;
          for (int k = 1; k <= p + q; ++k)
            if (std::find(I.begin(), I.end(), k) == I.end()) J.push_back(k);
          CHECK(grassmann_shuffle(I, J).length() == n);
        }
}

TEST_CASE("divided differences do not depend on the reduced word") {
  std::mt19937_64 rng(7);
  auto perms = all_permutations(6);
  std::shuffle(perms.begin(), perms.end(), rng);
  int tested = 0;
  for (const auto& w : perms) {
    if (w.length() > 8 || tested >= 60) continue;
    const auto a = w.reduced_word();
    const auto b = smallest_descent_word(w);
    // monomials of degree l(w) in 6 variables, sampled
    std::uniform_int_distribution<int> pick(1, 6);
    for (int t = 0; t < 8; ++t) {
      std::vector<int> e(6, 0);
      for (int k = 0; k < w.length(); ++k) ++e[pick(rng) - 1];
      const SparsePoly f = SparsePoly::monomial(Monomial(e));
      CHECK(divided_difference_word(a, f) == divided_difference_word(b, f));
    }
    ++tested;
  }
  CHECK(tested == 60);
}
