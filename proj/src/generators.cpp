#include "gpc/generators.hpp"

#include <algorithm>
#include <map>

#include "gpc/polytope.hpp"
#include "gpc/schubert.hpp"

namespace gpc {

namespace {

Rational weighted_sum(const std::vector<Integer>& c, const std::vector<Rational>& lambda) {
  Rational s = 0;
  for (std::size_t i = 0; i < c.size() && i < lambda.size(); ++i) s += c[i] * lambda[i];
  return s;
}

std::vector<int> iota_from(int first, int count) {
  std::vector<int> v(count);
  for (int i = 0; i < count; ++i) v[i] = first + i;
  return v;
}

Certificate slater_certificate(int N) {
  Certificate c;
  c.source = "slater";
  c.spectrum.assign(N, Rational(1));
  c.witness.N = N;
  c.witness.r = N;
  c.witness.amplitudes[iota_from(1, N)] = RootCoefficient{1, 1};
  return c;
}

// Flat spectrum N/(N+2) on N+2 orbitals: complements of the pairs {2i-1, 2i}.
Certificate pair_complement_certificate(int N) {
  Certificate c;
  c.source = "flat";
  const int r = N + 2;
  c.spectrum.assign(r, ratio(N, r));
  c.witness.N = N;
  c.witness.r = r;
  for (int i = 1; 2 * i <= r; ++i) {
    std::vector<int> subset;
    for (int j = 1; j <= r; ++j)
      if (j != 2 * i - 1 && j != 2 * i) subset.push_back(j);
    c.witness.amplitudes[subset] = RootCoefficient{1, 1};
  }
  return c;
}

// (1^{N-2}, (1/m)^{2m}): e_1..e_{N-2} wedged with sum_i e_{N-2+2i-1} e_{N-2+2i}.
Certificate merged_certificate(int N, int m) {
  Certificate c;
  c.source = "merged";
  const int r = N - 2 + 2 * m;
  c.spectrum.assign(N - 2, Rational(1));
  c.spectrum.resize(r, ratio(1, m));
  c.witness.N = N;
  c.witness.r = r;
  for (int i = 1; i <= m; ++i) {
    std::vector<int> subset = iota_from(1, N - 2);
    subset.push_back(N - 2 + 2 * i - 1);
    subset.push_back(N - 2 + 2 * i);
    c.witness.amplitudes[subset] = RootCoefficient{1, 1};
  }
  return c;
}

std::optional<Certificate> find_certificate(const OccupationInequality& ineq, int N) {
  std::vector<Certificate> candidates{slater_certificate(N)};
  if (N % 2 == 0) candidates.push_back(pair_complement_certificate(N));
  if (N >= 2) {
    const int length = std::max<int>(static_cast<int>(ineq.lambda_coeffs.size()), N + 2);
    for (int m = 2; N - 2 + 2 * m <= length; ++m) candidates.push_back(merged_certificate(N, m));
  }
  for (auto& c : candidates)
    if (weighted_sum(ineq.lambda_coeffs, c.spectrum) > ineq.bound) return c;
  return std::nullopt;
}

Exclusion make_exclusion(const Partition& gamma, std::vector<int> indices, Integer c, std::string reason,
                         OccupationInequality ineq, int N) {
  Exclusion e{gamma, std::move(indices), std::move(c), std::move(reason), std::move(ineq), std::nullopt};
  e.certificate = find_certificate(e.inequality, N);
  return e;
}

Integer kind1_recurrence(const Partition& gamma) {
  thread_local std::map<Partition, Integer> memo;
  if (gamma.empty()) return 1;
  if (gamma.is_row()) return gamma.size() % 2 == 0 ? 1 : 0;
  if (auto it = memo.find(gamma); it != memo.end()) return it->second;
  Integer total = 0;
  for (const Partition& tau : gamma.removable_corners()) total += kind1_recurrence(tau);
  memo.emplace(gamma, total);
  return total;
}

}  // namespace

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Majorization: return "majorization";
    case FamilyKind::GrassmannFirst: return "grassmann1";
    case FamilyKind::GrassmannSecond: return "grassmann2";
    case FamilyKind::Series: return "series";
  }
  return "unknown";
}

OccupationInequality index_inequality(const std::vector<int>& indices, int bound, int r) {
  OccupationInequality ineq;
  ineq.lambda_coeffs.assign(r, 0);
  for (int i : indices) {
    if (i < 1 || i > r) throw InputError("index outside 1.." + std::to_string(r));
    ineq.lambda_coeffs[i - 1] += 1;
  }
  ineq.bound = bound;
  return ineq;
}

InequalityFamily majorization_constraints(const Partition& nu, int r) {
  if (r < 1) throw InputError("r must be positive");
  if (nu.length() > r) throw InputError("nu has more than r rows");
  const int N = nu.size();
  InequalityFamily fam;
  fam.kind = FamilyKind::Majorization;
  fam.N = N;
  fam.r = r;

  std::vector<HalfSpace> ambient;
  for (int i = 0; i + 1 < r; ++i) {
    RVec n(r, 0);
    n[i] = -1;
    n[i + 1] = 1;
    ambient.push_back({n, 0});
  }
  {
    RVec n(r, 0);
    n[r - 1] = -1;
    ambient.push_back({n, 0});
  }
  std::vector<HalfSpace> partial;
  std::vector<int> prefix(r, 0);
  for (int k = 1; k < r; ++k) {
    prefix[k] = prefix[k - 1] + nu[k - 1];
    RVec n(r, 0);
    for (int i = 0; i < k; ++i) n[i] = 1;
    partial.push_back({n, prefix[k]});
  }
  std::vector<HalfSpace> all = ambient;
  all.insert(all.end(), partial.begin(), partial.end());
  const Hyperplane trace{RVec(r, 1), N};
  const RationalPolytope P = from_constraints(r, {trace}, all);
  const int dim = affine_dimension(P.vertices);

  std::vector<std::vector<std::size_t>> seen;
  for (const auto& h : ambient) seen.push_back(tight_set(h, P.vertices));
  for (std::size_t k = 0; k < partial.size(); ++k) {
    auto tight = tight_set(partial[k], P.vertices);
    if (tight.size() == P.vertices.size()) continue;
    std::vector<RVec> pts;
    for (auto i : tight) pts.push_back(P.vertices[i]);
    if (affine_dimension(pts) != dim - 1) continue;
    if (std::find(seen.begin(), seen.end(), tight) != seen.end()) continue;
    seen.push_back(tight);
    FamilyItem item;
    item.indices = iota_from(1, static_cast<int>(k) + 1);
    item.c_gamma = 1;
    item.inequality = index_inequality(item.indices, prefix[k + 1], r);
    fam.items.push_back(std::move(item));
  }
  return fam;
}

Integer cgamma_kind1(const Partition& gamma, int N, int r) {
  const int l = r - N + 1;
  if (gamma.size() != l) throw InputError("diagram size must be r-N+1");
  if (!gamma.fits(N - 1, l)) throw InputError("diagram does not fit the (N-1) x (r-N+1) frame");
  return kind1_recurrence(gamma);
}

Integer cgamma_kind1_alternating(const Partition& gamma) {
  Integer total = 0;
  for (int k = 0; k <= gamma[0]; ++k) {
    const Integer t = count_skew_standard(gamma, Partition::row(k));
    total += (k % 2 == 0) ? t : Integer(-t);
  }
  return total;
}

Integer cgamma_kind1_positive(const Partition& gamma) {
  Integer total = 0;
  for (int i = 1; 2 * i + 1 <= gamma.size(); ++i) total += count_skew_standard(gamma, Partition({2 * i, 1}));
  return total;
}

Integer cgamma_kind2(const Partition& gamma, int N) {
  if (gamma.size() != N + 1) throw InputError("diagram size must be N+1");
  Integer total = 0;
  for (int k = 0; k <= gamma.length(); ++k) {
    const Integer t = count_skew_standard(gamma, Partition::column(k));
    total += (k % 2 == 0) ? t : Integer(-t);
  }
  return total;
}

Integer cgamma_kind2_positive(const Partition& gamma) {
  Integer total = 0;
  for (int i = 1; 2 * i + 1 <= gamma.size(); ++i) {
    std::vector<int> hook(2 * i, 1);
    hook[0] = 2;
    total += count_skew_standard(gamma, Partition(hook));
  }
  return total;
}

SparsePoly kind2_product(int N, int p) {
  SparsePoly prod = SparsePoly::constant(1);
  for (const auto& K : subsets_of(p, N)) {
    SparsePoly sum;
    for (int k : K) sum += SparsePoly::variable(k);
    prod = prod * sum;
  }
  return prod;
}

InequalityFamily grassmann_kind1(int N, int r) {
  if (N < 1 || r <= N) throw InputError("first-kind inequalities need r > N >= 1");
  InequalityFamily fam;
  fam.kind = FamilyKind::GrassmannFirst;
  fam.N = N;
  fam.r = r;
  if (N < 3) {
    fam.note = "no first-kind family for N < 3: the bound N-2 would involve at most one index";
    return fam;
  }
  const int l = r - N + 1;
  for (const Partition& gamma : partitions_of(l, N - 1)) {
    auto indices = vertical_sequence({gamma, N - 1, l});
    Integer c = cgamma_kind1(gamma, N, r);
    OccupationInequality ineq = index_inequality(indices, N - 2, r);
    if (c != 0) {
      fam.items.push_back({gamma, std::move(indices), std::move(c), std::move(ineq)});
      continue;
    }
    std::string reason = gamma.is_column() && gamma.length() > 1 ? "col2" : gamma.is_row() ? "row_inq" : "zero coefficient";
    fam.exclusions.push_back(make_exclusion(gamma, std::move(indices), std::move(c), reason, std::move(ineq), N));
  }
  return fam;
}

InequalityFamily grassmann_kind2(int N, int p, int max_p) {
  if (N < 1) throw InputError("N must be positive");
  if (p < N) throw InputError("p must be at least N");
  if (p > max_p) throw ResourceLimitError("p=" + std::to_string(p) + " exceeds the cap " + std::to_string(max_p));
  InequalityFamily fam;
  fam.kind = FamilyKind::GrassmannSecond;
  fam.N = N;
  fam.p = p;
  const int l = static_cast<int>(binomial(p, N).get_si());

  std::map<Partition, Integer> expansion;
  if (p != N + 1) expansion = schur_expand(kind2_product(N, p), p);

  for (const Partition& gamma : partitions_of(l, p)) {
    Integer c;
    if (p == N + 1) {
      c = cgamma_kind2(gamma, N);
    } else if (auto it = expansion.find(gamma); it != expansion.end()) {
      c = it->second;
    }
    auto indices = vertical_sequence({gamma, p, l});
    OccupationInequality ineq = index_inequality(indices, N - 1, indices.back());
    if (c != 0) {
      fam.items.push_back({gamma, std::move(indices), std::move(c), std::move(ineq)});
      continue;
    }
    std::string reason = "zero coefficient";
    if (p == N + 1 && gamma.is_row()) reason = "false1";
    else if (p == N + 1 && gamma.is_column()) reason = "false2";
    fam.exclusions.push_back(make_exclusion(gamma, std::move(indices), std::move(c), reason, std::move(ineq), N));
  }
  return fam;
}

OccupationInequality series_inequality(int N, int p) {
  if (N < 1 || p < N) throw InputError("series needs p >= N >= 1");
  std::vector<int> indices;
  for (int k = 1; k <= p; ++k) indices.push_back(k + static_cast<int>(binomial(k - 1, N - 1).get_si()));
  return index_inequality(indices, N - 1, indices.back());
}

std::vector<Rational> hole_dual(const std::vector<Rational>& lambda, const Rational& s) {
  std::vector<Rational> out(lambda.size());
  const std::size_t r = lambda.size();
  for (std::size_t i = 0; i < r; ++i) out[i] = s - lambda[r - 1 - i];
  return out;
}

OccupationInequality hole_dual(const OccupationInequality& ineq, const Integer& s) {
  OccupationInequality out;
  const std::size_t r = ineq.lambda_coeffs.size();
  out.lambda_coeffs.resize(r);
  Integer sum = 0;
  for (std::size_t j = 0; j < r; ++j) {
    out.lambda_coeffs[j] = -ineq.lambda_coeffs[r - 1 - j];
    sum += ineq.lambda_coeffs[j];
  }
  out.mu_coeffs = ineq.mu_coeffs;
  out.bound = ineq.bound - s * sum;
  return out;
}

}  // namespace gpc
