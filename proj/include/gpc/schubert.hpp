#pragma once

#include <map>
#include <vector>

#include "gpc/combinatorics.hpp"
#include "gpc/permutation.hpp"
#include "gpc/polynomial.hpp"

namespace gpc {

// (f - s_i f) / (x_i - x_{i+1})
SparsePoly divided_difference(int i, const SparsePoly& f);
// d_{i1} d_{i2} ... d_{il} f, so the last letter acts first.
SparsePoly divided_difference_word(const std::vector<int>& word, const SparsePoly& f);
SparsePoly divided_difference_word(const Permutation& w, const SparsePoly& f);

// S_w built by descending from a dominant permutation (where S_w = x^code).
SparsePoly schubert_polynomial(const Permutation& w);
// S_w = d_{w^{-1} w0}(x1^{n-1} x2^{n-2} ... x_{n-1}) for w in S_n.
SparsePoly schubert_polynomial(const Permutation& w, int n);

// Coefficients of f (homogeneous of the given degree) in the Schubert basis.
std::map<Permutation, Integer> schubert_expand(const SparsePoly& f, int degree);

SparsePoly schur_polynomial(const Partition& shape, int p);
// Expansion of a symmetric polynomial in x_1..x_p into Schur polynomials.
std::map<Partition, Integer> schur_expand(const SparsePoly& f, int p);

// (sum_i alpha_i x_i) S_v in the Schubert basis.
std::map<Permutation, Integer> monk_multiply(const std::vector<Integer>& alpha, const Permutation& v);

}  // namespace gpc
