#include "gpc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gpc {

namespace {

void trim(std::vector<int>& images) {
  while (!images.empty() && images.back() == static_cast<int>(images.size())) images.pop_back();
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : images_(std::move(one_line)) {
  std::vector<char> seen(images_.size() + 1, 0);
  for (int x : images_) {
    if (x < 1 || x > static_cast<int>(images_.size()) || seen[x])
      throw InputError("not a permutation in one-line notation");
    seen[x] = 1;
  }
  trim(images_);
}

Permutation Permutation::simple(int i) { return transposition(i, i + 1); }

Permutation Permutation::transposition(int i, int j) {
  if (i < 1 || j < 1) throw InputError("transposition indices must be positive");
  if (i == j) return {};
  std::vector<int> w(std::max(i, j));
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[i - 1], w[j - 1]);
  return Permutation(std::move(w));
}

Permutation Permutation::cycle(int from, int to) {
  if (from < 1 || to < from) throw InputError("bad cycle range");
  std::vector<int> c(to - from + 1);
  std::iota(c.begin(), c.end(), from);
  return from_cycles({c});
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles) {
  int n = 0;
  for (const auto& c : cycles)
    for (int x : c) {
      if (x < 1) throw InputError("cycle entries must be positive");
      n = std::max(n, x);
    }
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<char> seen(n + 1, 0);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (seen[c[k]]) throw InputError("cycles are not disjoint");
      seen[c[k]] = 1;
      w[c[k] - 1] = c[(k + 1) % c.size()];
    }
  }
  return Permutation(std::move(w));
}

Permutation Permutation::from_word(const std::vector<int>& word) {
  Permutation w;
  for (int i : word) w = w * simple(i);
  return w;
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse_cycles(const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (text.substr(pos) == "id" || text.substr(pos) == "e") return {};
  while (pos < text.size()) {
    if (text[pos] != '(') throw InputError("cycle notation expected '(' in '" + text + "'");
    ++pos;
    std::vector<int> c;
    for (;;) {
      skip();
      if (pos >= text.size()) throw InputError("unterminated cycle in '" + text + "'");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw InputError("unexpected character in cycle notation '" + text + "'");
      int x = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) x = 10 * x + (text[pos++] - '0');
      c.push_back(x);
    }
    if (c.size() > 1) cycles.push_back(std::move(c));
    skip();
  }
  return from_cycles(cycles);
}

int Permutation::operator()(int i) const {
  if (i < 1) throw InputError("permutation argument must be positive");
  return i <= degree() ? images_[i - 1] : i;
}

std::vector<int> Permutation::one_line(int n) const {
  if (n < degree()) throw InputError("permutation does not lie in S_" + std::to_string(n));
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = (*this)(i);
  return w;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  const int n = std::max(degree(), rhs.degree());
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = (*this)(rhs(i));
  return Permutation(std::move(w));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

std::vector<int> Permutation::code() const {
  std::vector<int> c(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[j] < images_[i]) ++c[i];
  return c;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> w = images_;
  std::vector<int> word;
  for (;;) {
    int i = static_cast<int>(w.size()) - 1;
    while (i >= 1 && w[i - 1] < w[i]) --i;
    if (i < 1) break;
    std::swap(w[i - 1], w[i]);
    word.push_back(i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (std::size_t i = 0; i + 1 < images_.size(); ++i)
    if (images_[i] > images_[i + 1]) d.push_back(static_cast<int>(i) + 1);
  return d;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size() + 1, 0);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start] || images_[start - 1] == start) continue;
    std::vector<int> c;
    for (int x = start; !seen[x]; x = images_[x - 1]) {
      seen[x] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

std::string Permutation::one_line_string(int n) const {
  std::ostringstream os;
  auto w = one_line(std::max(n, degree()));
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ']';
  return os.str();
}

bool is_minimal_on_blocks(const Permutation& w, const std::vector<std::pair<int, int>>& blocks) {
  for (auto [lo, hi] : blocks)
    for (int i = lo; i < hi; ++i)
      if (w(i) > w(i + 1)) return false;
  return true;
}

Permutation grassmann_shuffle(const std::vector<int>& first, const std::vector<int>& second) {
  std::vector<int> w(first);
  w.insert(w.end(), second.begin(), second.end());
  auto increasing = [](const std::vector<int>& s) { return std::is_sorted(s.begin(), s.end()); };
  if (!increasing(first) || !increasing(second)) throw InputError("shuffle blocks must be increasing");
  return Permutation(std::move(w));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace gpc
