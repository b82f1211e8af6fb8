#include "gpc/schubert.hpp"

#include <algorithm>
#include <numeric>

namespace gpc {

SparsePoly divided_difference(int i, const SparsePoly& f) {
  if (i < 1 || i >= kMaxVariables) throw InputError("divided_difference: index out of range");
  const int s = i - 1;  // slot of x_i
  SparsePoly r;
  for (const auto& [m, c] : f.terms()) {
    const int a = m[s], b = m[s + 1];
    if (a == b) continue;
    // x_i^a x_{i+1}^b with a > b gives x_i^b x_{i+1}^b * sum_{j} x_i^{a-b-1-j} x_{i+1}^j;
    // a < b is the negative of the mirrored case.
    const int lo = std::min(a, b), gap = std::abs(a - b);
    const Integer coef = a > b ? Integer(c) : Integer(-c);
    Monomial t = m;
    for (int j = 0; j < gap; ++j) {
      t.set(s, lo + gap - 1 - j);
      t.set(s + 1, lo + j);
      r.add_term(t, coef);
    }
  }
  return r;
}

SparsePoly divided_difference_word(const std::vector<int>& word, const SparsePoly& f) {
  SparsePoly g = f;
  for (auto it = word.rbegin(); it != word.rend() && !g.is_zero(); ++it) g = divided_difference(*it, g);
  return g;
}

SparsePoly divided_difference_word(const Permutation& w, const SparsePoly& f) {
  return divided_difference_word(w.reduced_word(), f);
}

SparsePoly schubert_polynomial(const Permutation& w) {
  const std::vector<int> c = w.code();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (c[i] < c[i + 1]) {
      const int k = static_cast<int>(i) + 1;
      return divided_difference(k, schubert_polynomial(w * Permutation::simple(k)));
    }
  }
  return SparsePoly::monomial(Monomial(c));
}

SparsePoly schubert_polynomial(const Permutation& w, int n) {
  if (w.degree() > n) throw InputError("permutation does not lie in S_" + std::to_string(n));
  std::vector<int> delta(n);
  for (int i = 0; i < n; ++i) delta[i] = n - 1 - i;
  const Permutation u = w.inverse() * Permutation::longest(n);
  return divided_difference_word(u, SparsePoly::monomial(Monomial(delta)));
}

std::map<Permutation, Integer> schubert_expand(const SparsePoly& f, int degree) {
  std::map<Permutation, Integer> out;
  if (f.is_zero()) return out;
  auto hd = f.homogeneous_degree();
  if (!hd) throw InputError("schubert_expand: polynomial is not homogeneous");
  if (*hd != degree) throw InputError("schubert_expand: degree mismatch");
  const int n = f.variable_count() + degree;
  if (n > kMaxVariables) throw ResourceLimitError("schubert_expand: too many variables");
  // Level k holds d_u f for all u of length k reached so far with d_u f != 0.
  std::map<Permutation, SparsePoly> level{{Permutation{}, f}};
  for (int k = 0; k < degree; ++k) {
    std::map<Permutation, SparsePoly> next;
    for (const auto& [u, g] : level) {
      const Permutation uinv = u.inverse();
      for (int i = 1; i < n; ++i) {
        if (uinv(i) > uinv(i + 1)) continue;  // s_i u would be shorter
        Permutation su = Permutation::simple(i) * u;
        if (next.count(su)) continue;
        SparsePoly h = divided_difference(i, g);
        if (!h.is_zero()) next.emplace(std::move(su), std::move(h));
      }
    }
    level = std::move(next);
  }
  for (const auto& [u, g] : level) {
    Integer c = g.constant_term();
    if (c != 0) out.emplace(u, c);
  }
  return out;
}

SparsePoly schur_polynomial(const Partition& shape, int p) {
  if (shape.length() > p) throw InputError("diagram " + shape.to_string() + " has more than " + std::to_string(p) + " rows");
  SparsePoly s;
  for (const auto& t : enumerate_ssyt(shape, p)) s.add_term(Monomial(t.content(p)), 1);
  return s;
}

std::map<Partition, Integer> schur_expand(const SparsePoly& f, int p) {
  std::map<Partition, Integer> out;
  if (f.is_zero()) return out;
  if (f.variable_count() > p) throw InputError("schur_expand: polynomial uses more than p variables");
  for (int i = 1; i < p; ++i)
    if (!(f.swap_variables(i) == f)) throw InputError("schur_expand: polynomial is not symmetric");
  auto hd = f.homogeneous_degree();
  if (!hd) {
    // Split into homogeneous pieces.
    std::map<int, SparsePoly> pieces;
    for (const auto& [m, c] : f.terms()) pieces[m.degree()].add_term(m, c);
    for (const auto& [d, g] : pieces)
      for (const auto& [lam, c] : schur_expand(g, p)) out[lam] += c;
    return out;
  }
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> shifts;  // sigma(delta) with sign
  do {
    std::vector<int> sd(p);
    int inversions = 0;
    for (int i = 0; i < p; ++i) {
      sd[i] = p - 1 - perm[i];
      for (int j = i + 1; j < p; ++j)
        if (perm[i] > perm[j]) ++inversions;
    }
    shifts.emplace_back(std::move(sd), inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (const Partition& lam : partitions_of(*hd, p)) {
    Integer c = 0;
    for (const auto& [sd, sign] : shifts) {
      std::vector<int> e(p);
      bool ok = true;
      for (int i = 0; i < p && ok; ++i) {
        e[i] = lam[i] + (p - 1 - i) - sd[i];
        ok = e[i] >= 0;
      }
      if (!ok) continue;
      const Integer x = f.coefficient(Monomial(e));
      if (sign > 0) c += x;
      else c -= x;
    }
    if (c != 0) out.emplace(lam, c);
  }
  return out;
}

std::map<Permutation, Integer> monk_multiply(const std::vector<Integer>& alpha, const Permutation& v) {
  std::map<Permutation, Integer> out;
  const int m = static_cast<int>(alpha.size());
  const int top = std::max(v.degree(), m) + 1;
  auto a = [&](int i) { return i <= m ? alpha[i - 1] : Integer(0); };
  for (int i = 1; i < top; ++i)
    for (int j = i + 1; j <= top; ++j) {
      const int vi = v(i), vj = v(j);
      if (vi > vj) continue;
      bool covers = true;
      for (int k = i + 1; k < j && covers; ++k) covers = !(v(k) > vi && v(k) < vj);
      if (!covers) continue;
      const Integer c = a(i) - a(j);
      if (c != 0) out[v * Permutation::transposition(i, j)] += c;
    }
  return out;
}

}  // namespace gpc
