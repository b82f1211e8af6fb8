#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "gpc/common.hpp"

namespace gpc {

// Finitely supported permutation of {1,2,...}. Stored in one-line notation with
// trailing fixed points trimmed, so S_n embeds in S_{n+1} without change.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity() { return {}; }
  static Permutation simple(int i);                 // s_i = (i i+1)
  static Permutation transposition(int i, int j);   // (i j)
  static Permutation cycle(int from, int to);       // (from from+1 ... to)
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles);
  static Permutation from_word(const std::vector<int>& word);  // s_i1 s_i2 ... s_il
  static Permutation longest(int n);
  // Parses "(1 2 3)(4 5)", "()" or "id".
  static Permutation parse_cycles(const std::string& text);

  // Smallest n with this permutation in S_n (0 for the identity).
  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const;
  std::vector<int> one_line(int n) const;  // padded to n
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;  // (u*w)(i) = u(w(i))

  int length() const;
  std::vector<int> code() const;  // Lehmer code c_i = #{j > i : w(j) < w(i)}
  std::vector<int> reduced_word() const;
  std::vector<int> descents() const;  // right descents i with w(i) > w(i+1)
  std::vector<std::vector<int>> cycles() const;  // non-trivial cycles, each starting at its minimum
  int sign() const { return length() % 2 ? -1 : 1; }

  std::string cycle_string() const;
  std::string one_line_string(int n = 0) const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Consecutive index blocks (1-based, inclusive) on which the values are constant.
template <typename T>
std::vector<std::pair<int, int>> blocks_of_equal(const std::vector<T>& values) {
  std::vector<std::pair<int, int>> blocks;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0 && values[i] == values[i - 1])
      blocks.back().second = static_cast<int>(i) + 1;
    else
      blocks.emplace_back(static_cast<int>(i) + 1, static_cast<int>(i) + 1);
  }
  return blocks;
}

// True when w is increasing on every block, i.e. w is the minimal-length
// representative of its coset modulo the block stabilizer.
bool is_minimal_on_blocks(const Permutation& w, const std::vector<std::pair<int, int>>& blocks);

// Shuffle of the increasing sequences I and J: w(k) = I_k for k <= |I|, then J.
Permutation grassmann_shuffle(const std::vector<int>& first, const std::vector<int>& second);

// All permutations of S_n.
std::vector<Permutation> all_permutations(int n);

}  // namespace gpc

template <>
struct std::hash<gpc::Permutation> {
  std::size_t operator()(const gpc::Permutation& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : w.images()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};
