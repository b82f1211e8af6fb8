#pragma once

#include <complex>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gpc/combinatorics.hpp"

namespace gpc {

// sign * sqrt(radicand), radicand >= 0.
struct RootCoefficient {
  int sign = 1;
  Rational radicand = 0;

  double value() const;
  Rational square() const { return radicand; }
  bool is_zero() const { return radicand == 0; }
  bool operator==(const RootCoefficient&) const = default;
};

// Sparse state in the N-th exterior power of an r-dimensional space; keys are
// increasing subsets of {1..r}.
struct WedgeState {
  int N = 0;
  int r = 0;
  std::map<std::vector<int>, RootCoefficient> amplitudes;

  void validate() const;
  Rational norm_squared() const;
};

// Dense complex state over all N-subsets of {1..r} in lexicographic order.
struct DenseState {
  int N = 0;
  int r = 0;
  std::vector<std::vector<int>> basis;
  std::vector<std::complex<double>> amplitudes;

  static DenseState random(int N, int r, std::mt19937_64& rng, bool real = false);
  static DenseState from(const WedgeState& state);
};

std::vector<std::vector<int>> subsets_of(int r, int N);

struct OneParticleRdm {
  int r = 0;
  // Normalized to trace N.
  std::vector<Rational> exact_diagonal;  // filled for WedgeState input only
  std::vector<std::complex<double>> matrix;  // row-major r x r, rho_ij = <a_j^+ a_i>
  bool structurally_diagonal = false;

  std::complex<double> operator()(int i, int j) const { return matrix[i * r + j]; }
};

OneParticleRdm one_particle_rdm(const WedgeState& state);
OneParticleRdm one_particle_rdm(const DenseState& state);

// Eigenvalues of a real symmetric n x n matrix (row-major) by cyclic Jacobi.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n, double threshold = 1e-14);
// Eigenvalues of a Hermitian matrix through its real 2n x 2n embedding, in
// non-increasing order.
std::vector<double> hermitian_eigenvalues(const std::vector<std::complex<double>>& h, int n);

struct Occupations {
  std::vector<double> values;                 // non-increasing, trace N
  std::optional<std::vector<Rational>> exact; // when the RDM is diagonal
};

Occupations occupation_numbers(const WedgeState& state);
Occupations occupation_numbers(const DenseState& state);

// Two weights are adjacent when their difference is e_i - e_j.
bool weight_graph_disconnected(const std::vector<std::vector<int>>& weights);

struct TableauState {
  Partition shape;
  int r = 0;
  std::vector<std::pair<SemistandardTableau, RootCoefficient>> terms;
};

// Exact spectrum sum_T |c_T|^2 content(T) / ||psi||^2, sorted non-increasingly.
// Throws InputError when the support is connected.
std::vector<Rational> dadok_kac_spectrum(const TableauState& state);

struct VertexCheck {
  bool ok = false;
  double max_deviation = 0;
  std::vector<double> computed;  // non-increasing, trace N
  std::vector<double> expected;  // ratio rescaled to trace N
};

struct VertexRow {
  WedgeState state;
  std::vector<Rational> vertex;  // up to scale
};

struct VertexTable {
  std::string name;
  int N = 0;
  int r = 0;
  std::vector<VertexRow> rows;
};

// Compares the occupation numbers with a vertex given up to scale.
VertexCheck verify_vertex(const WedgeState& state, const std::vector<Rational>& ratio, double tolerance = 1e-9);

}  // namespace gpc
