#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gpc/common.hpp"

namespace gpc {

inline constexpr int kMaxVariables = 32;

// Exponent vector; variable x_i (1-based) lives in slot i-1.
class Monomial {
 public:
  Monomial() { e_.fill(0); }
  explicit Monomial(const std::vector<int>& exponents);

  int operator[](int slot) const { return e_[slot]; }
  void set(int slot, int exponent);
  int degree() const;
  int variable_count() const;  // highest variable with a non-zero exponent
  std::vector<int> exponents(int n) const;
  Monomial operator*(const Monomial& other) const;

  const std::array<std::uint8_t, kMaxVariables>& raw() const { return e_; }
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::array<std::uint8_t, kMaxVariables> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Sparse polynomial with integer coefficients in x_1, x_2, ...
class SparsePoly {
 public:
  using Terms = std::unordered_map<Monomial, Integer, MonomialHash>;

  SparsePoly() = default;
  static SparsePoly constant(const Integer& c);
  static SparsePoly variable(int i);
  static SparsePoly monomial(const Monomial& m, const Integer& c = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  // Terms in descending lexicographic order of exponents.
  std::vector<std::pair<Monomial, Integer>> sorted_terms() const;

  int variable_count() const;
  int degree() const;  // -1 for the zero polynomial
  std::optional<int> homogeneous_degree() const;
  Integer coefficient(const Monomial& m) const;
  Integer constant_term() const { return coefficient(Monomial{}); }

  void add_term(const Monomial& m, const Integer& c);

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const Integer& c);
  SparsePoly operator+(const SparsePoly& other) const;
  SparsePoly operator-(const SparsePoly& other) const;
  SparsePoly operator-() const;
  SparsePoly operator*(const SparsePoly& other) const;
  SparsePoly operator*(const Integer& c) const;
  SparsePoly pow(int e) const;
  bool operator==(const SparsePoly& other) const { return terms_ == other.terms_; }

  // s_i f: exchange x_i and x_{i+1}.
  SparsePoly swap_variables(int i) const;
  // Drops every term that involves a variable x_j with keep[j-1] == false.
  SparsePoly restrict_to(const std::vector<bool>& keep) const;

  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace gpc
