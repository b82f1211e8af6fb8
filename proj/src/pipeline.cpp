#include "gpc/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <tuple>

namespace gpc {

namespace {

using Key = std::tuple<std::vector<Integer>, std::vector<Integer>, Integer>;

Key key_of(const OccupationInequality& q) { return {q.lambda_coeffs, q.mu_coeffs, q.bound}; }

Integer l1(const OccupationInequality& q) {
  Integer s = 0;
  for (const auto& x : q.lambda_coeffs) s += abs(x);
  for (const auto& x : q.mu_coeffs) s += abs(x);
  return s;
}

bool trivial(const OccupationInequality& q) {
  auto constant = [](const std::vector<Integer>& v) {
    return std::all_of(v.begin(), v.end(), [&](const Integer& x) { return x == v[0]; });
  };
  return constant(q.lambda_coeffs) && (q.mu_coeffs.empty() || constant(q.mu_coeffs));
}

struct Attempt {
  Triple triple;
  Integer c;
};

std::optional<Attempt> try_match(const OccupationInequality& q, const MomentSystem& s) {
  if (trivial(q)) return std::nullopt;
  try {
    auto search = inequality_to_triple(q, s.nu);
    if (!search.triple) return std::nullopt;
    Integer c = coefficient(search.triple->a, s.nu, s.r, search.triple->v, search.triple->w);
    if (c == 0) return std::nullopt;
    return Attempt{*search.triple, c};
  } catch (const InputError&) {
    return std::nullopt;
  } catch (const ResourceLimitError&) {
    return std::nullopt;
  }
}

// Integer vectors in [-B, B]^k, B as large as the candidate cap allows (at least 1).
std::vector<std::vector<int>> combinations(int k, int max_candidates) {
  int B = 1;
  for (int b = 3; b > 1; --b) {
    double count = 1;
    for (int i = 0; i < k; ++i) count *= 2 * b + 1;
    if (count <= max_candidates) {
      B = b;
      break;
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> alpha(k, -B);
  while (true) {
    out.push_back(alpha);
    int i = 0;
    while (i < k && alpha[i] == B) alpha[i++] = -B;
    if (i == k) break;
    ++alpha[i];
  }
  return out;
}

std::vector<OccupationInequality> sorted_candidates(const MomentSystem& s, const RVec& normal, const Rational& offset,
                                                    const std::vector<Hyperplane>& eqs,
                                                    const std::vector<std::vector<int>>& alphas) {
  std::set<Key> seen;
  std::vector<OccupationInequality> out;
  for (const auto& alpha : alphas) {
    RVec n = normal;
    Rational o = offset;
    for (std::size_t j = 0; j < eqs.size(); ++j) {
      if (!alpha[j]) continue;
      for (std::size_t i = 0; i < n.size(); ++i) n[i] += alpha[j] * eqs[j].normal[i];
      o += alpha[j] * eqs[j].offset;
    }
    if (std::all_of(n.begin(), n.end(), [](const Rational& x) { return x == 0; })) continue;
    OccupationInequality q = s.to_inequality(n, o);
    if (trivial(q)) continue;
    if (seen.insert(key_of(q)).second) out.push_back(std::move(q));
  }
  std::stable_sort(out.begin(), out.end(), [](const OccupationInequality& a, const OccupationInequality& b) {
    const Integer la = l1(a), lb = l1(b);
    if (la != lb) return la < lb;
    if (abs(a.bound) != abs(b.bound)) return abs(a.bound) < abs(b.bound);
    return key_of(a) < key_of(b);
  });
  return out;
}

}  // namespace

std::vector<HalfSpace> MomentSystem::ambient() const {
  std::vector<HalfSpace> out;
  const int d = dim();
  auto chamber = [&](int first, int count) {
    for (int i = first; i + 1 < first + count; ++i) {
      RVec n(d, 0);
      n[i] = -1;
      n[i + 1] = 1;
      out.push_back({n, 0});
    }
    RVec n(d, 0);
    n[first + count - 1] = -1;
    out.push_back({n, 0});
  };
  chamber(0, r);
  if (rank > 1) chamber(r, rank);
  return out;
}

std::vector<Hyperplane> MomentSystem::traces() const {
  const int d = dim();
  std::vector<Hyperplane> out;
  RVec t(d, 0);
  for (int i = 0; i < r; ++i) t[i] = 1;
  out.push_back({t, N()});
  if (rank > 1) {
    RVec u(d, 0);
    for (int j = 0; j < rank; ++j) u[r + j] = 1;
    out.push_back({u, 1});
  }
  return out;
}

OccupationInequality MomentSystem::to_inequality(const RVec& normal, const Rational& offset) const {
  if (static_cast<int>(normal.size()) != dim()) throw InputError("normal has the wrong dimension");
  RVec lambda(normal.begin(), normal.begin() + r);
  RVec mu;
  if (rank > 1) mu.assign(normal.begin() + r, normal.end());
  return canonical(lambda, mu, offset, N());
}

HalfSpace MomentSystem::to_halfspace(const OccupationInequality& q) const {
  if (static_cast<int>(q.lambda_coeffs.size()) > r) throw InputError("inequality has more than r lambda coefficients");
  if (static_cast<int>(q.mu_coeffs.size()) > (rank > 1 ? rank : 0) &&
      std::any_of(q.mu_coeffs.begin(), q.mu_coeffs.end(), [](const Integer& x) { return x != 0; }))
    throw InputError("inequality has more mu coefficients than the rank bound");
  HalfSpace h{RVec(dim(), 0), Rational(q.bound)};
  for (std::size_t i = 0; i < q.lambda_coeffs.size(); ++i) h.normal[i] = q.lambda_coeffs[i];
  if (rank > 1)
    for (std::size_t j = 0; j < q.mu_coeffs.size() && static_cast<int>(j) < rank; ++j) h.normal[r + j] = q.mu_coeffs[j];
  return h;
}

FacetMatch facet_match(const RationalPolytope& inner, const MomentSystem& system, const MatchOptions& options) {
  FacetMatch out;
  const auto& V = inner.vertices;
  std::vector<std::vector<std::size_t>> ambient_sets;
  for (const auto& h : system.ambient()) ambient_sets.push_back(tight_set(h, V));
  const auto alphas = combinations(static_cast<int>(inner.equations.size()), options.max_candidates);

  for (const auto& f : inner.facets) {
    const auto tight = tight_set(f, V);
    if (std::find(ambient_sets.begin(), ambient_sets.end(), tight) != ambient_sets.end()) {
      ++out.ambient;
      continue;
    }
    bool found = false;
    for (const auto& q : sorted_candidates(system, f.normal, f.offset, inner.equations, alphas)) {
      if (auto m = try_match(q, system)) {
        out.matched.push_back({f, q, m->triple, m->c, false});
        found = true;
        break;
      }
    }
    if (!found) out.unmatched.push_back(f);
  }

  if (!inner.equations.empty()) {
    const RVec zero(system.dim(), 0);
    for (const auto& q : sorted_candidates(system, zero, 0, inner.equations, alphas))
      if (auto m = try_match(q, system)) out.matched.push_back({system.to_halfspace(q), q, m->triple, m->c, true});
  }
  return out;
}

RationalPolytope outer_polytope(const MomentSystem& system, const std::vector<OccupationInequality>& inequalities) {
  std::vector<HalfSpace> h = system.ambient();
  for (const auto& q : inequalities) h.push_back(system.to_halfspace(q));
  return from_constraints(system.dim(), system.traces(), h);
}

PipelineReport pipeline(const MomentSystem& system, const PipelineOptions& options) {
  if (system.nu.length() > system.r) throw InputError("nu has more than r rows");
  if (system.rank < 1) throw InputError("rank bound must be at least 1");
  PipelineReport report;
  report.system = system;
  report.status = "not converged";
  for (int M = 1; M <= options.M_max; ++M) {
    const auto start = std::chrono::steady_clock::now();
    InnerPointSet set;
    try {
      set = inner_points(system.nu, system.r, system.rank, M, options.limits);
    } catch (const ResourceLimitError& e) {
      report.status = std::string("resource cap: ") + e.what();
      break;
    }
    std::vector<RVec> pts;
    for (const auto& p : set.points) {
      RVec x = p.lambda;
      if (system.rank > 1) x.insert(x.end(), p.mu.begin(), p.mu.end());
      pts.push_back(std::move(x));
    }
    PipelineStep step;
    step.M = M;
    step.points = pts.size();
    RationalPolytope inner = hull(std::move(pts));
    step.inner_dim = inner.dimension();
    step.inner_facets = inner.facets.size();
    step.inner_vertices = inner.vertices.size();
    step.match = facet_match(inner, system, options.match);
    std::vector<OccupationInequality> found;
    for (const auto& m : step.match.matched) found.push_back(m.inequality);
    RationalPolytope outer = outer_polytope(system, found);
    step.converged = equal(inner, outer);
    step.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    report.inequalities.clear();
    for (const auto& m : step.match.matched)
      if (!m.from_equation) report.inequalities.push_back(m.inequality);
    for (const auto& f : step.match.unmatched) report.inequalities.push_back(system.to_inequality(f.normal, f.offset));
    report.inner = std::move(inner);
    report.outer = std::move(outer);
    const bool done = step.converged;
    report.steps.push_back(std::move(step));
    if (done) {
      report.converged_at = M;
      report.status = "converged";
      break;
    }
  }
  return report;
}

}  // namespace gpc
