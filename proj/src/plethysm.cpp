#include "gpc/plethysm.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace gpc {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

std::vector<int> padded(const Partition& p, int r) {
  std::vector<int> v(r, 0);
  for (int i = 0; i < p.length(); ++i) v[i] = p[i];
  return v;
}

Integer orbit_size(const Partition& p, int r) {
  Integer n;
  mpz_fac_ui(n.get_mpz_t(), r);
  std::map<int, int> counts;
  for (int x : padded(p, r)) ++counts[x];
  for (auto [value, c] : counts) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), c);
    n /= f;
  }
  return n;
}

template <class F>
void for_each_rearrangement(const Partition& p, int r, F&& f) {
  std::vector<int> v = padded(p, r);
  std::sort(v.begin(), v.end());
  do {
    f(v);
  } while (std::next_permutation(v.begin(), v.end()));
}

bool dominated(const Partition& beta, const Partition& lambda) {
  int sb = 0, sl = 0;
  for (int i = 0; i < std::max(beta.length(), lambda.length()); ++i) {
    sb += beta[i];
    sl += lambda[i];
    if (sb > sl) return false;
  }
  return true;
}

void erase_zeros(std::map<Partition, Integer>& m) {
  for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
}

void check_rank(const SymmetricCharacter& a, const SymmetricCharacter& b) {
  if (a.r != b.r) throw InputError("characters of different rank");
}

}  // namespace

Integer SymmetricCharacter::multiplicity(const std::vector<int>& weight) const {
  std::vector<int> w = weight;
  if (static_cast<int>(w.size()) > r) {
    if (std::any_of(w.begin() + r, w.end(), [](int x) { return x != 0; })) return 0;
    w.resize(r);
  }
  if (std::any_of(w.begin(), w.end(), [](int x) { return x < 0; })) return 0;
  std::sort(w.begin(), w.end(), std::greater<>());
  auto it = dominant.find(Partition(w));
  return it == dominant.end() ? Integer(0) : it->second;
}

Integer SymmetricCharacter::dimension() const {
  Integer d = 0;
  for (const auto& [p, c] : dominant) d += c * orbit_size(p, r);
  return d;
}

std::map<std::vector<int>, Integer> SymmetricCharacter::full_support() const {
  std::map<std::vector<int>, Integer> out;
  for (const auto& [p, c] : dominant) for_each_rearrangement(p, r, [&](const std::vector<int>& v) { out[v] = c; });
  return out;
}

SymmetricCharacter character(const Partition& nu, int r) {
  if (r < 1) throw InputError("r must be positive");
  if (nu.length() > r) throw InputError("nu has more than r rows");
  SymmetricCharacter f;
  f.r = r;
  for (const Partition& beta : partitions_of(nu.size(), r)) {
    if (!dominated(beta, nu)) continue;
    Integer k = kostka(nu, beta.parts());
    if (k != 0) f.dominant.emplace(beta, std::move(k));
  }
  return f;
}

SymmetricCharacter constant_character(int r, const Integer& c) {
  SymmetricCharacter f;
  f.r = r;
  if (c != 0) f.dominant.emplace(Partition{}, c);
  return f;
}

SymmetricCharacter operator+(const SymmetricCharacter& a, const SymmetricCharacter& b) {
  check_rank(a, b);
  if (!a.empty() && !b.empty() && a.degree() != b.degree())
    throw InputError("characters of degrees " + std::to_string(a.degree()) + " and " + std::to_string(b.degree()) +
                     " cannot be added");
  SymmetricCharacter s = a;
  for (const auto& [p, c] : b.dominant) s.dominant[p] += c;
  erase_zeros(s.dominant);
  return s;
}

SymmetricCharacter operator-(const SymmetricCharacter& a, const SymmetricCharacter& b) {
  return a + scale(b, -1);
}

SymmetricCharacter scale(const SymmetricCharacter& a, const Integer& c) {
  SymmetricCharacter s;
  s.r = a.r;
  if (c == 0) return s;
  for (const auto& [p, m] : a.dominant) s.dominant.emplace(p, m * c);
  return s;
}

SymmetricCharacter operator*(const SymmetricCharacter& a, const SymmetricCharacter& b) {
  check_rank(a, b);
  SymmetricCharacter out;
  out.r = a.r;
  if (a.empty() || b.empty()) return out;
  const int r = a.r;
  Integer orbit_a = 0, orbit_b = 0;
  for (const auto& [p, c] : a.dominant) orbit_a += orbit_size(p, r);
  for (const auto& [p, c] : b.dominant) orbit_b += orbit_size(p, r);
  const SymmetricCharacter& x = orbit_a <= orbit_b ? a : b;
  const SymmetricCharacter& y = orbit_a <= orbit_b ? b : a;

  std::vector<std::pair<std::vector<int>, Integer>> orbit;
  int top_x = 0;
  for (const auto& [p, c] : x.dominant) {
    top_x = std::max(top_x, p[0]);
    for_each_rearrangement(p, r, [&](const std::vector<int>& v) { orbit.emplace_back(v, c); });
  }
  std::unordered_map<std::vector<int>, Integer, VecHash> lookup;
  int top_y = 0;
  for (const auto& [p, c] : y.dominant) {
    top_y = std::max(top_y, p[0]);
    lookup.emplace(padded(p, r), c);
  }

  const int d = x.degree() + y.degree();
  std::vector<int> rest(r);
  for (const Partition& lambda : partitions_of(d, r, top_x + top_y)) {
    const std::vector<int> l = padded(lambda, r);
    Integer total = 0;
    for (const auto& [alpha, c] : orbit) {
      bool ok = true;
      for (int i = 0; i < r && ok; ++i) {
        rest[i] = l[i] - alpha[i];
        ok = rest[i] >= 0;
      }
      if (!ok) continue;
      std::sort(rest.begin(), rest.end(), std::greater<>());
      auto it = lookup.find(rest);
      if (it != lookup.end()) total += c * it->second;
    }
    if (total != 0) out.dominant.emplace(lambda, std::move(total));
  }
  return out;
}

SymmetricCharacter power_substitute(const SymmetricCharacter& f, int k) {
  if (k < 1) throw InputError("power must be positive");
  SymmetricCharacter g;
  g.r = f.r;
  for (const auto& [p, c] : f.dominant) {
    std::vector<int> parts = p.parts();
    for (int& x : parts) x *= k;
    g.dominant.emplace(Partition(parts), c);
  }
  return g;
}

std::vector<SymmetricCharacter> plethysm_h_levels(int m, const SymmetricCharacter& f) {
  if (m < 0) throw InputError("m must be non-negative");
  std::vector<SymmetricCharacter> h{constant_character(f.r)};
  std::vector<SymmetricCharacter> powers;
  for (int k = 1; k <= m; ++k) powers.push_back(power_substitute(f, k));
  for (int n = 1; n <= m; ++n) {
    SymmetricCharacter sum;
    sum.r = f.r;
    for (int k = 1; k <= n; ++k) sum = sum + powers[k - 1] * h[n - k];
    for (auto& [p, c] : sum.dominant) {
      if (!mpz_divisible_ui_p(c.get_mpz_t(), n))
        throw std::logic_error("Newton recurrence produced a non-integral multiplicity");
      c /= n;
    }
    h.push_back(std::move(sum));
  }
  return h;
}

SymmetricCharacter plethysm_h(int m, const SymmetricCharacter& f) { return plethysm_h_levels(m, f).back(); }

SymmetricCharacter plethysm_schur(const Partition& mu, const std::vector<SymmetricCharacter>& levels, int r) {
  const int l = mu.length();
  if (l == 0) return constant_character(r);
  auto entry = [&](int i, int j) -> const SymmetricCharacter* {
    const int k = mu[i] - i + j;
    if (k < 0) return nullptr;
    if (k >= static_cast<int>(levels.size())) throw InputError("not enough plethysm levels");
    return &levels[k];
  };
  SymmetricCharacter det;
  det.r = r;
  std::vector<int> sigma(l);
  for (int i = 0; i < l; ++i) sigma[i] = i;
  do {
    int inversions = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j) inversions += sigma[i] > sigma[j];
    SymmetricCharacter term = constant_character(r);
    bool zero = false;
    for (int i = 0; i < l && !zero; ++i) {
      const SymmetricCharacter* e = entry(i, sigma[i]);
      if (!e) zero = true;
      else term = term * *e;
    }
    if (zero) continue;
    det = inversions % 2 == 0 ? det + term : det - term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return det;
}

SymmetricCharacter plethysm_schur(const Partition& mu, const SymmetricCharacter& f) {
  return plethysm_schur(mu, plethysm_h_levels(mu.empty() ? 0 : mu[0] + mu.length() - 1, f), f.r);
}

std::vector<std::pair<Partition, Integer>> schur_decompose(const SymmetricCharacter& f) {
  std::vector<std::pair<Partition, Integer>> out;
  std::map<Partition, Integer> work = f.dominant;
  if (work.empty()) return out;
  const std::vector<Partition> weights = partitions_of(f.degree(), f.r);
  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Partition lambda = top->first;
    const Integer c = top->second;
    if (c < 0) throw InputError("negative multiplicity for " + lambda.to_string() + ": not a character");
    out.emplace_back(lambda, c);
    for (const Partition& beta : weights) {
      if (!dominated(beta, lambda)) continue;
      const Integer k = kostka(lambda, beta.parts());
      if (k != 0) work[beta] -= c * k;
    }
    erase_zeros(work);
  }
  return out;
}

InnerPointSet inner_points(const Partition& nu, int r, int rank_bound, int M, const PlethysmLimits& limits) {
  if (M < 1) throw InputError("M must be at least 1");
  if (rank_bound < 1) throw InputError("rank bound must be at least 1");
  if (r > limits.max_r) throw ResourceLimitError("r=" + std::to_string(r) + " exceeds the cap " + std::to_string(limits.max_r));
  if (nu.size() * M > limits.max_degree)
    throw ResourceLimitError("|nu|*M=" + std::to_string(nu.size() * M) + " exceeds the cap " +
                             std::to_string(limits.max_degree));
  const SymmetricCharacter f = character(nu, r);
  const auto levels = plethysm_h_levels(M, f);
  InnerPointSet out;
  std::set<InnerPoint> points;
  for (int m = 1; m <= M; ++m) {
    for (const Partition& mu : partitions_of(m, rank_bound)) {
      const SymmetricCharacter ch = mu.length() == 1 ? levels[m] : plethysm_schur(mu, levels, r);
      for (auto& [lambda, mult] : schur_decompose(ch)) {
        InnerPoint pt{RVec(r, 0), RVec(rank_bound, 0)};
        for (int i = 0; i < lambda.length(); ++i) pt.lambda[i] = ratio(lambda[i], m);
        for (int i = 0; i < mu.length(); ++i) pt.mu[i] = ratio(mu[i], m);
        points.insert(std::move(pt));
        out.components.push_back({lambda, mu, mult});
      }
    }
  }
  out.points.assign(points.begin(), points.end());
  return out;
}

}  // namespace gpc
