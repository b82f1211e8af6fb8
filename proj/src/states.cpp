#include "gpc/states.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace gpc {

double RootCoefficient::value() const { return sign * std::sqrt(radicand.get_d()); }

void WedgeState::validate() const {
  if (N < 1 || r < N) throw InputError("state needs 1 <= N <= r");
  bool nonzero = false;
  for (const auto& [s, c] : amplitudes) {
    if (static_cast<int>(s.size()) != N) throw InputError("subset size differs from N");
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] < 1 || s[k] > r) throw InputError("subset index out of range");
      if (k > 0 && s[k] <= s[k - 1]) throw InputError("subset must be strictly increasing");
    }
    if (c.radicand < 0) throw InputError("negative radicand");
    if (c.sign != 1 && c.sign != -1) throw InputError("sign must be +1 or -1");
    nonzero = nonzero || !c.is_zero();
  }
  if (!nonzero) throw InputError("state has no nonzero amplitude");
}

Rational WedgeState::norm_squared() const {
  Rational n = 0;
  for (const auto& [s, c] : amplitudes) n += c.radicand;
  return n;
}

std::vector<std::vector<int>> subsets_of(int r, int N) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == N) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= r - (N - static_cast<int>(cur.size())) + 1; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

DenseState DenseState::random(int N, int r, std::mt19937_64& rng, bool real) {
  DenseState s;
  s.N = N;
  s.r = r;
  s.basis = subsets_of(r, N);
  std::normal_distribution<double> g(0.0, 1.0);
  double norm = 0;
  for (std::size_t k = 0; k < s.basis.size(); ++k) {
    std::complex<double> z(g(rng), real ? 0.0 : g(rng));
    s.amplitudes.push_back(z);
    norm += std::norm(z);
  }
  for (auto& z : s.amplitudes) z /= std::sqrt(norm);
  return s;
}

DenseState DenseState::from(const WedgeState& state) {
  state.validate();
  DenseState s;
  s.N = state.N;
  s.r = state.r;
  s.basis = subsets_of(state.r, state.N);
  s.amplitudes.assign(s.basis.size(), 0.0);
  for (std::size_t k = 0; k < s.basis.size(); ++k) {
    auto it = state.amplitudes.find(s.basis[k]);
    if (it != state.amplitudes.end()) s.amplitudes[k] = it->second.value();
  }
  return s;
}

namespace {

// a_j^+ a_i |S> = sign |S'>; returns 0 when the result vanishes.
int hop(const std::vector<int>& S, int i, int j, std::vector<int>& out) {
  auto it = std::find(S.begin(), S.end(), i);
  if (it == S.end()) return 0;
  int sign = (it - S.begin()) % 2 ? -1 : 1;
  out = S;
  out.erase(out.begin() + (it - S.begin()));
  if (std::find(out.begin(), out.end(), j) != out.end()) return 0;
  auto pos = std::lower_bound(out.begin(), out.end(), j);
  if ((pos - out.begin()) % 2) sign = -sign;
  out.insert(pos, j);
  return sign;
}

template <typename Amp>
OneParticleRdm rdm_from(int N, int r, const std::vector<std::pair<std::vector<int>, Amp>>& terms,
                        const std::map<std::vector<int>, std::size_t>& index, double norm) {
  (void)N;
  OneParticleRdm rdm;
  rdm.r = r;
  rdm.matrix.assign(r * r, 0.0);
  bool diagonal = true;
  std::vector<int> target;
  for (const auto& [S, c] : terms) {
    if (c == Amp(0)) continue;
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j) {
        const int s = hop(S, i, j, target);
        if (!s) continue;
        auto it = index.find(target);
        if (it == index.end()) continue;
        const Amp& d = terms[it->second].second;
        if (d == Amp(0)) continue;
        if (i != j) diagonal = false;
        rdm.matrix[(i - 1) * r + (j - 1)] += std::conj(std::complex<double>(d)) * std::complex<double>(c) * double(s);
      }
  }
  for (auto& z : rdm.matrix) z /= norm;
  rdm.structurally_diagonal = diagonal;
  return rdm;
}

}  // namespace

OneParticleRdm one_particle_rdm(const WedgeState& state) {
  state.validate();
  std::vector<std::pair<std::vector<int>, double>> terms;
  std::map<std::vector<int>, std::size_t> index;
  for (const auto& [S, c] : state.amplitudes) {
    index.emplace(S, terms.size());
    terms.emplace_back(S, c.value());
  }
  const Rational norm = state.norm_squared();
  OneParticleRdm rdm = rdm_from(state.N, state.r, terms, index, norm.get_d());
  rdm.exact_diagonal.assign(state.r, 0);
  for (const auto& [S, c] : state.amplitudes)
    for (int i : S) rdm.exact_diagonal[i - 1] += c.radicand;
  for (auto& q : rdm.exact_diagonal) q /= norm;
  return rdm;
}

OneParticleRdm one_particle_rdm(const DenseState& state) {
  std::vector<std::pair<std::vector<int>, std::complex<double>>> terms;
  std::map<std::vector<int>, std::size_t> index;
  double norm = 0;
  for (std::size_t k = 0; k < state.basis.size(); ++k) {
    index.emplace(state.basis[k], terms.size());
    terms.emplace_back(state.basis[k], state.amplitudes[k]);
    norm += std::norm(state.amplitudes[k]);
  }
  if (norm == 0) throw InputError("zero state");
  return rdm_from(state.N, state.r, terms, index, norm);
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n, double threshold) {
  auto at = [&](int i, int j) -> double& { return a[i * n + j]; };
  double scale = 0;
  for (double x : a) scale = std::max(scale, std::abs(x));
  if (scale == 0) return std::vector<double>(n, 0.0);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    if (std::sqrt(off) <= threshold * scale) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

std::vector<double> hermitian_eigenvalues(const std::vector<std::complex<double>>& h, int n) {
  bool real = std::all_of(h.begin(), h.end(), [](const auto& z) { return z.imag() == 0; });
  if (real) {
    std::vector<double> a(n * n);
    for (int k = 0; k < n * n; ++k) a[k] = h[k].real();
    return symmetric_eigenvalues(std::move(a), n);
  }
  // [[A, -B], [B, A]] has the spectrum of A + iB with every eigenvalue doubled.
  const int m = 2 * n;
  std::vector<double> a(m * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = h[i * n + j].real(), im = h[i * n + j].imag();
      a[i * m + j] = re;
      a[(i + n) * m + (j + n)] = re;
      a[i * m + (j + n)] = -im;
      a[(i + n) * m + j] = im;
    }
  auto ev2 = symmetric_eigenvalues(std::move(a), m);
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = 0.5 * (ev2[2 * i] + ev2[2 * i + 1]);
  return ev;
}

Occupations occupation_numbers(const WedgeState& state) {
  const OneParticleRdm rdm = one_particle_rdm(state);
  Occupations occ;
  if (rdm.structurally_diagonal) {
    auto exact = rdm.exact_diagonal;
    std::sort(exact.begin(), exact.end(), std::greater<>());
    for (const auto& q : exact) occ.values.push_back(q.get_d());
    occ.exact = std::move(exact);
  } else {
    occ.values = hermitian_eigenvalues(rdm.matrix, rdm.r);
  }
  return occ;
}

Occupations occupation_numbers(const DenseState& state) {
  const OneParticleRdm rdm = one_particle_rdm(state);
  return {hermitian_eigenvalues(rdm.matrix, rdm.r), std::nullopt};
}

bool weight_graph_disconnected(const std::vector<std::vector<int>>& weights) {
  for (std::size_t a = 0; a < weights.size(); ++a)
    for (std::size_t b = a + 1; b < weights.size(); ++b) {
      if (weights[a].size() != weights[b].size()) throw InputError("weights of different length");
      int plus = 0, minus = 0;
      bool root = true;
      for (std::size_t i = 0; i < weights[a].size() && root; ++i) {
        const int d = weights[a][i] - weights[b][i];
        if (d == 1) ++plus;
        else if (d == -1) ++minus;
        else if (d != 0) root = false;
      }
      if (root && plus == 1 && minus == 1) return false;
    }
  return true;
}

std::vector<Rational> dadok_kac_spectrum(const TableauState& state) {
  std::vector<std::vector<int>> contents;
  std::vector<Rational> lambda(state.r, 0);
  Rational norm = 0;
  for (const auto& [t, c] : state.terms) {
    if (!(t.shape == state.shape) || !t.is_valid()) throw InputError("term is not an SSYT of the state shape");
    if (c.is_zero()) continue;
    auto content = t.content(state.r);
    for (int i = 0; i < state.r; ++i) lambda[i] += c.radicand * content[i];
    norm += c.radicand;
    contents.push_back(std::move(content));
  }
  if (norm == 0) throw InputError("state has no nonzero amplitude");
  if (!weight_graph_disconnected(contents)) throw InputError("support is connected: spectrum is not diagonal");
  for (auto& q : lambda) q /= norm;
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return lambda;
}

VertexCheck verify_vertex(const WedgeState& state, const std::vector<Rational>& ratio, double tolerance) {
  if (static_cast<int>(ratio.size()) > state.r) throw InputError("vertex longer than r");
  VertexCheck check;
  const Occupations occ = occupation_numbers(state);
  check.computed = occ.values;
  Rational total = 0;
  for (const auto& q : ratio) total += q;
  if (total <= 0) throw InputError("vertex ratio must have positive sum");
  std::vector<Rational> expected(ratio);
  expected.resize(state.r, 0);
  for (auto& q : expected) q = q * state.N / total;
  std::sort(expected.begin(), expected.end(), std::greater<>());
  for (const auto& q : expected) check.expected.push_back(q.get_d());
  for (int i = 0; i < state.r; ++i)
    check.max_deviation = std::max(check.max_deviation, std::abs(check.computed[i] - check.expected[i]));
  check.ok = check.max_deviation <= tolerance;
  if (occ.exact) check.ok = check.ok && *occ.exact == expected;
  return check;
}

}  // namespace gpc
