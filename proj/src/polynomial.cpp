#include "gpc/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace gpc {

Monomial::Monomial(const std::vector<int>& exponents) {
  e_.fill(0);
  if (exponents.size() > kMaxVariables) {
    for (std::size_t i = kMaxVariables; i < exponents.size(); ++i)
      if (exponents[i] != 0) throw ResourceLimitError("monomial uses more than 32 variables");
  }
  for (std::size_t i = 0; i < exponents.size() && i < kMaxVariables; ++i) set(static_cast<int>(i), exponents[i]);
}

void Monomial::set(int slot, int exponent) {
  if (slot < 0 || slot >= kMaxVariables) throw ResourceLimitError("variable index out of range");
  if (exponent < 0) throw InputError("negative exponent");
  if (exponent > 255) throw ResourceLimitError("exponent exceeds 255");
  e_[slot] = static_cast<std::uint8_t>(exponent);
}

int Monomial::degree() const {
  int d = 0;
  for (auto x : e_) d += x;
  return d;
}

int Monomial::variable_count() const {
  for (int i = kMaxVariables; i > 0; --i)
    if (e_[i - 1]) return i;
  return 0;
}

std::vector<int> Monomial::exponents(int n) const {
  std::vector<int> v(n);
  for (int i = 0; i < n && i < kMaxVariables; ++i) v[i] = e_[i];
  return v;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kMaxVariables; ++i) {
    const int s = e_[i] + other.e_[i];
    if (s > 255) throw ResourceLimitError("exponent exceeds 255");
    m.e_[i] = static_cast<std::uint8_t>(s);
  }
  return m;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : m.raw()) h = (h ^ x) * 1099511628211ull;
  return h;
}

SparsePoly SparsePoly::constant(const Integer& c) { return monomial(Monomial{}, c); }

SparsePoly SparsePoly::variable(int i) {
  if (i < 1 || i > kMaxVariables) throw ResourceLimitError("variable index out of range");
  Monomial m;
  m.set(i - 1, 1);
  return monomial(m);
}

SparsePoly SparsePoly::monomial(const Monomial& m, const Integer& c) {
  SparsePoly p;
  p.add_term(m, c);
  return p;
}

std::vector<std::pair<Monomial, Integer>> SparsePoly::sorted_terms() const {
  std::vector<std::pair<Monomial, Integer>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return v;
}

int SparsePoly::variable_count() const {
  int n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.variable_count());
  return n;
}

int SparsePoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::optional<int> SparsePoly::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    if (d && *d != m.degree()) return std::nullopt;
    d = m.degree();
  }
  return d;
}

Integer SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SparsePoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

SparsePoly SparsePoly::operator+(const SparsePoly& other) const {
  SparsePoly r = *this;
  r += other;
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& other) const {
  SparsePoly r = *this;
  r -= other;
  return r;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& other) const {
  SparsePoly r;
  r.terms_.reserve(terms_.size() * other.terms_.size());
  Integer prod;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : other.terms_) {
      prod = c1 * c2;
      r.add_term(m1 * m2, prod);
    }
  return r;
}

SparsePoly SparsePoly::operator*(const Integer& c) const {
  SparsePoly r = *this;
  r *= c;
  return r;
}

SparsePoly SparsePoly::pow(int e) const {
  if (e < 0) throw InputError("negative power");
  SparsePoly result = constant(1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

SparsePoly SparsePoly::swap_variables(int i) const {
  if (i < 1 || i >= kMaxVariables) throw InputError("swap_variables: index out of range");
  SparsePoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial s = m;
    s.set(i - 1, m[i]);
    s.set(i, m[i - 1]);
    r.terms_.emplace(s, c);
  }
  return r;
}

SparsePoly SparsePoly::restrict_to(const std::vector<bool>& keep) const {
  SparsePoly r;
  for (const auto& [m, c] : terms_) {
    bool ok = true;
    for (int i = 0; i < kMaxVariables && ok; ++i)
      if (m[i] && (i >= static_cast<int>(keep.size()) || !keep[i])) ok = false;
    if (ok) r.terms_.emplace(m, c);
  }
  return r;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    Integer a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const bool unit = m.degree() == 0;
    if (a != 1 || unit) os << a.get_str();
    bool needs_star = a != 1 && !unit;
    for (int i = 0; i < kMaxVariables; ++i) {
      if (!m[i]) continue;
      if (needs_star) os << '*';
      os << 'x' << (i + 1);
      if (m[i] > 1) os << '^' << int(m[i]);
      needs_star = true;
    }
  }
  return os.str();
}

}  // namespace gpc
