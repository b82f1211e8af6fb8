#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "gpc/combinatorics.hpp"
#include "gpc/permutation.hpp"
#include "gpc/polynomial.hpp"
#include "gpc/schubert.hpp"
#include "gpc/states.hpp"

namespace oracle {

// Hook length formula for the number of standard tableaux.
inline gpc::Integer hook_count(const gpc::Partition& shape) {
  const gpc::Partition t = shape.transpose();
  gpc::Integer num = 1, den = 1;
  int n = shape.size();
  for (int k = 2; k <= n; ++k) num *= k;
  for (int i = 0; i < shape.length(); ++i)
    for (int j = 0; j < shape[i]; ++j) den *= (shape[i] - j - 1) + (t[j] - i - 1) + 1;
  return num / den;
}

// prod over cells (r + j - i) / hook
inline gpc::Integer weyl_by_hooks(const gpc::Partition& shape, int r) {
  const gpc::Partition t = shape.transpose();
  gpc::Integer num = 1, den = 1;
  for (int i = 0; i < shape.length(); ++i)
    for (int j = 0; j < shape[i]; ++j) {
      num *= r + j - i;
      den *= (shape[i] - j - 1) + (t[j] - i - 1) + 1;
    }
  return num / den;
}

inline gpc::SparsePoly random_poly(std::mt19937_64& rng, int vars, int max_exp, int terms) {
  std::uniform_int_distribution<int> e(0, max_exp), c(-5, 5);
  gpc::SparsePoly f;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> ex(vars);
    for (int& x : ex) x = e(rng);
    f.add_term(gpc::Monomial(ex), c(rng));
  }
  return f;
}

// Grassmann shuffle of g in the frame p x (total - p).
inline gpc::Permutation shuffle_of(const gpc::Partition& g, int p, int total) {
  const auto I = gpc::vertical_sequence({g, p, total - p});
  std::vector<int> J;
  for (int k = 1, at = 0; k <= total; ++k) {
    if (at < p && I[at] == k)
      ++at;
    else
      J.push_back(k);
  }
  return gpc::grassmann_shuffle(I, J);
}

// Schubert expansion of prod_{N<=j<=r}(x_1+...+x_{N-1}+x_j).
inline std::map<gpc::Permutation, gpc::Integer> kind1_expansion(int N, int r) {
  gpc::SparsePoly P = gpc::SparsePoly::constant(1);
  for (int j = N; j <= r; ++j) {
    gpc::SparsePoly f = gpc::SparsePoly::variable(j);
    for (int i = 1; i < N; ++i) f += gpc::SparsePoly::variable(i);
    P = P * f;
  }
  return gpc::schubert_expand(P, r - N + 1);
}

// prod over N-subsets of [p] of (sum of their variables), built directly.
inline gpc::SparsePoly chern_product(int N, int p) {
  gpc::SparsePoly P = gpc::SparsePoly::constant(1);
  std::vector<bool> pick(p, false);
  std::fill(pick.begin(), pick.begin() + N, true);
  do {
    gpc::SparsePoly f;
    for (int i = 0; i < p; ++i)
      if (pick[i]) f += gpc::SparsePoly::variable(i + 1);
    P = P * f;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return P;
}

// N * partial trace of the antisymmetrized tensor, gamma_ij = N sum Psi(i,rest) conj(Psi(j,rest)).
inline std::vector<std::complex<double>> tensor_rdm(const gpc::DenseState& s) {
  using cplx = std::complex<double>;
  const int N = s.N, r = s.r;
  std::size_t size = 1;
  for (int k = 0; k < N; ++k) size *= r;
  std::vector<cplx> psi(size, 0.0);
  double norm = 0;
  for (const auto& a : s.amplitudes) norm += std::norm(a);
  double fact = 1;
  for (int k = 2; k <= N; ++k) fact *= k;
  const double scale = 1.0 / std::sqrt(fact * norm);
  for (std::size_t b = 0; b < s.basis.size(); ++b) {
    std::vector<int> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inv = 0;
      for (int x = 0; x < N; ++x)
        for (int y = x + 1; y < N; ++y) inv += perm[x] > perm[y];
      std::size_t idx = 0;
      for (int k = 0; k < N; ++k) idx = idx * r + (s.basis[b][perm[k]] - 1);
      psi[idx] += (inv % 2 ? -scale : scale) * s.amplitudes[b];
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  const std::size_t rest = size / r;
  std::vector<cplx> rho(r * r, 0.0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      cplx acc = 0;
      for (std::size_t t = 0; t < rest; ++t) acc += psi[i * rest + t] * std::conj(psi[j * rest + t]);
      rho[i * r + j] = double(N) * acc;
    }
  return rho;
}

}  // namespace oracle
