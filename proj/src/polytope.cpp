#include "gpc/polytope.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

namespace gpc {

namespace {

using Bits = std::vector<std::uint64_t>;

struct Ray {
  std::vector<Integer> v;
  Bits zero;
};

bool subset(const Bits& a, const Bits& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] & ~b[k]) return false;
  return true;
}

int popcount(const Bits& a) {
  int c = 0;
  for (auto w : a) c += std::popcount(w);
  return c;
}

void make_primitive(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Row reduction over Q. Returns pivot columns; m is left in RREF.
std::vector<int> rref(std::vector<RVec>& m, int cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (int k = 0; k < static_cast<int>(m[i].size()); ++k) m[i][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

}  // namespace

std::vector<Integer> primitive(const RVec& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(Integer(Rational(q * l).get_num()));
  make_primitive(out);
  return out;
}

RVec to_rational(const std::vector<Integer>& v) { return RVec(v.begin(), v.end()); }

std::string to_string(const RVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
  os << ')';
  return os.str();
}

std::vector<std::vector<Integer>> extreme_rays(std::vector<std::vector<Integer>> rows, int d) {
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != d) throw InputError("extreme_rays: row length mismatch");
    make_primitive(r);
  }
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const auto& r) { return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; }); }),
             rows.end());
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  // Greedy basis in insertion order.
  std::vector<std::size_t> basis;
  {
    std::vector<RVec> picked;
    for (std::size_t i = 0; i < rows.size() && static_cast<int>(basis.size()) < d; ++i) {
      std::vector<RVec> trial = picked;
      trial.push_back(to_rational(rows[i]));
      if (rref(trial, d).size() > picked.size()) {
        picked.push_back(to_rational(rows[i]));
        basis.push_back(i);
      }
    }
  }
  if (static_cast<int>(basis.size()) < d) throw InputError("cone is not pointed");

  // Processing order: basis rows first, then the rest in lexicographic order.
  std::vector<std::size_t> order = basis;
  {
    std::vector<char> in_basis(rows.size(), 0);
    for (auto b : basis) in_basis[b] = 1;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!in_basis[i]) order.push_back(i);
  }
  const std::size_t words = (order.size() + 63) / 64;

  // Initial rays: columns of B^{-1}.
  std::vector<RVec> aug(d, RVec(2 * d, 0));
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) aug[i][k] = rows[basis[i]][k];
    aug[i][d + i] = 1;
  }
  rref(aug, d);
  std::vector<Ray> rays;
  for (int j = 0; j < d; ++j) {
    RVec col(d);
    for (int i = 0; i < d; ++i) col[i] = aug[i][d + j];
    Ray ray{primitive(col), Bits(words, 0)};
    for (int i = 0; i < d; ++i)
      if (i != j) ray.zero[i / 64] |= std::uint64_t(1) << (i % 64);
    rays.push_back(std::move(ray));
  }

  for (std::size_t step = d; step < order.size() && !rays.empty(); ++step) {
    const auto& a = rows[order[step]];
    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> plus, minus, zero;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      s[k] = dot(a, rays[k].v);
      const int sg = sgn(s[k]);
      (sg > 0 ? plus : sg < 0 ? minus : zero).push_back(k);
    }
    const std::uint64_t bit = std::uint64_t(1) << (step % 64);
    for (auto k : zero) rays[k].zero[step / 64] |= bit;
    if (minus.empty()) continue;
    std::vector<Ray> fresh;
    Bits common(words);
    std::vector<int> weight(rays.size());
    for (std::size_t q = 0; q < rays.size(); ++q) weight[q] = popcount(rays[q].zero);
    for (auto p : plus)
      for (auto n : minus) {
        for (std::size_t w = 0; w < words; ++w) common[w] = rays[p].zero[w] & rays[n].zero[w];
        const int c = popcount(common);
        if (c < d - 2) continue;
        bool adjacent = true;
        for (std::size_t q = 0; q < rays.size() && adjacent; ++q)
          if (weight[q] >= c && q != p && q != n && subset(common, rays[q].zero)) adjacent = false;
        if (!adjacent) continue;
        Ray ray{std::vector<Integer>(d), common};
        for (int k = 0; k < d; ++k) ray.v[k] = s[p] * rays[n].v[k] - s[n] * rays[p].v[k];
        make_primitive(ray.v);
        ray.zero[step / 64] |= bit;
        fresh.push_back(std::move(ray));
      }
    std::vector<Ray> next;
    next.reserve(plus.size() + zero.size() + fresh.size());
    for (std::size_t k = 0; k < rays.size(); ++k)
      if (sgn(s[k]) >= 0) next.push_back(std::move(rays[k]));
    for (auto& r : fresh) next.push_back(std::move(r));
    rays = std::move(next);
  }
  std::vector<std::vector<Integer>> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int RationalPolytope::dimension() const {
  if (vertices.empty()) return -1;
  return ambient_dim - static_cast<int>(equations.size());
}

bool RationalPolytope::contains(const RVec& x) const {
  if (static_cast<int>(x.size()) != ambient_dim) throw InputError("point dimension mismatch");
  auto dotq = [&](const RVec& n) {
    Rational s = 0;
    for (int i = 0; i < ambient_dim; ++i) s += n[i] * x[i];
    return s;
  };
  for (const auto& e : equations)
    if (dotq(e.normal) != e.offset) return false;
  for (const auto& f : facets)
    if (dotq(f.normal) > f.offset) return false;
  return true;
}

RationalPolytope hull(std::vector<RVec> points) {
  if (points.empty()) throw InputError("hull of an empty point set");
  const int n = static_cast<int>(points[0].size());
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != n) throw InputError("points of different dimension");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  RationalPolytope P;
  P.ambient_dim = n;
  const RVec& p0 = points[0];
  std::vector<RVec> diff;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RVec d(n);
    for (int k = 0; k < n; ++k) d[k] = points[i][k] - p0[k];
    diff.push_back(std::move(d));
  }
  const std::vector<int> pivots = rref(diff, n);
  const int k = static_cast<int>(pivots.size());

  // Affine hull: nullspace of the difference matrix, then RREF of [E | c].
  {
    std::vector<char> is_pivot(n, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<RVec> eq;
    for (int f = 0; f < n; ++f) {
      if (is_pivot[f]) continue;
      RVec e(n + 1, 0);
      e[f] = 1;
      for (int r = 0; r < k; ++r) e[pivots[r]] = -diff[r][f];
      for (int c = 0; c < n; ++c) e[n] += e[c] * p0[c];
      eq.push_back(std::move(e));
    }
    rref(eq, n);
    for (const auto& e : eq) {
      auto ints = primitive(e);
      Hyperplane h{RVec(ints.begin(), ints.begin() + n), Rational(ints[n])};
      P.equations.push_back(std::move(h));
    }
  }

  if (k == 0) {
    P.vertices = points;
    return P;
  }

  std::vector<std::vector<Integer>> rows;
  for (const auto& p : points) {
    RVec row(k + 1);
    row[0] = 1;
    for (int j = 0; j < k; ++j) row[j + 1] = p[pivots[j]];
    rows.push_back(primitive(row));
  }
  for (const auto& y : extreme_rays(rows, k + 1)) {
    if (std::all_of(y.begin() + 1, y.end(), [](const Integer& x) { return x == 0; })) continue;
    HalfSpace h{RVec(n, 0), Rational(y[0])};
    for (int j = 0; j < k; ++j) h.normal[pivots[j]] = -y[j + 1];
    P.facets.push_back(std::move(h));
  }

  // Extreme points: tight facet normals span the projected space.
  for (const auto& p : points) {
    std::vector<RVec> tight;
    for (const auto& f : P.facets) {
      Rational s = 0;
      for (int j = 0; j < k; ++j) s += f.normal[pivots[j]] * p[pivots[j]];
      if (s == f.offset) {
        RVec v(k);
        for (int j = 0; j < k; ++j) v[j] = f.normal[pivots[j]];
        tight.push_back(std::move(v));
      }
    }
    if (static_cast<int>(tight.size()) < k) continue;
    if (static_cast<int>(rref(tight, k).size()) == k) P.vertices.push_back(p);
  }
  return P;
}

RationalPolytope from_constraints(int dim, std::vector<Hyperplane> eqs, std::vector<HalfSpace> ineqs) {
  std::vector<std::vector<Integer>> rows;
  auto add = [&](const RVec& a, const Rational& b, int sign) {
    if (static_cast<int>(a.size()) != dim) throw InputError("constraint dimension mismatch");
    RVec row(dim + 1);
    row[0] = b * sign;
    for (int i = 0; i < dim; ++i) row[i + 1] = -a[i] * sign;
    rows.push_back(primitive(row));
  };
  for (const auto& e : eqs) {
    add(e.normal, e.offset, 1);
    add(e.normal, e.offset, -1);
  }
  for (const auto& h : ineqs) add(h.normal, h.offset, 1);
  std::vector<Integer> t(dim + 1, 0);
  t[0] = 1;
  rows.push_back(t);
  std::vector<std::vector<Integer>> rays;
  try {
    rays = extreme_rays(rows, dim + 1);
  } catch (const InputError&) {
    throw InputError("polyhedron is unbounded or degenerate");
  }
  RationalPolytope P;
  P.ambient_dim = dim;
  P.equations = std::move(eqs);
  P.facets = std::move(ineqs);
  for (const auto& y : rays) {
    if (y[0] == 0) throw InputError("polyhedron is unbounded");
    RVec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = ratio(y[i + 1], y[0]);
    P.vertices.push_back(std::move(v));
  }
  std::sort(P.vertices.begin(), P.vertices.end());
  return P;
}

bool equal(const RationalPolytope& a, const RationalPolytope& b) {
  if (a.ambient_dim != b.ambient_dim) return false;
  for (const auto& v : a.vertices)
    if (!b.contains(v)) return false;
  for (const auto& v : b.vertices)
    if (!a.contains(v)) return false;
  return true;
}

int affine_dimension(const std::vector<RVec>& points) {
  if (points.empty()) return -1;
  const int n = static_cast<int>(points[0].size());
  std::vector<RVec> diff;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RVec d(n);
    for (int k = 0; k < n; ++k) d[k] = points[i][k] - points[0][k];
    diff.push_back(std::move(d));
  }
  return static_cast<int>(rref(diff, n).size());
}

std::vector<std::size_t> tight_set(const HalfSpace& h, const std::vector<RVec>& points) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Rational s = 0;
    for (std::size_t k = 0; k < h.normal.size(); ++k) s += h.normal[k] * points[i][k];
    if (s == h.offset) out.push_back(i);
  }
  return out;
}

}  // namespace gpc
