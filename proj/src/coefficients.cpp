#include "gpc/coefficients.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "gpc/schubert.hpp"

namespace gpc {

TestSpectrum::TestSpectrum(std::vector<long> values) : values_(std::move(values)) {
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] > values_[i - 1]) throw InputError("test spectrum must be weakly decreasing");
}

TestSpectrum TestSpectrum::from_rationals(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& q : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<long> v;
  for (const auto& q : values) {
    Rational s = q * l;
    if (!s.get_num().fits_slong_p()) throw ResourceLimitError("test spectrum entry too large");
    v.push_back(s.get_num().get_si());
  }
  return TestSpectrum(std::move(v));
}

InducedSpectrum::InducedSpectrum(const TestSpectrum& a, const Partition& nu) {
  const int r = a.size();
  if (nu.length() > r) throw InputError("nu has more rows than r");
  for (auto& t : enumerate_ssyt(nu, r)) {
    long value = 0;
    for (int x : t.reading_word()) value += a[x - 1];
    entries_.push_back({value, std::move(t)});
  }
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const InducedEntry& x, const InducedEntry& y) { return x.value > y.value; });
}

std::vector<long> InducedSpectrum::values() const {
  std::vector<long> v;
  v.reserve(entries_.size());
  for (const auto& e : entries_) v.push_back(e.value);
  return v;
}

SparsePoly specialized_schubert(const InducedSpectrum& induced, int r, const Permutation& w,
                                const std::vector<bool>& keep) {
  if (w.degree() > induced.size()) throw InputError("w does not lie in S_dim");
  const SparsePoly sw = schubert_polynomial(w);
  std::vector<SparsePoly> forms;  // x_{T_k}
  for (int k = 0; k < std::max(1, w.degree()); ++k) {
    SparsePoly f;
    if (k < induced.size()) {
      const auto content = induced.entries()[k].tableau.content(r);
      for (int i = 0; i < r; ++i) {
        if (!content[i] || (!keep.empty() && !keep[i])) continue;
        Monomial m;
        m.set(i, 1);
        f.add_term(m, content[i]);
      }
    }
    forms.push_back(std::move(f));
  }
  std::map<std::pair<int, int>, SparsePoly> powers;
  auto power = [&](int k, int e) -> const SparsePoly& {
    auto key = std::make_pair(k, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, forms[k].pow(e)).first;
    return it->second;
  };
  SparsePoly out;
  for (const auto& [m, c] : sw.terms()) {
    SparsePoly term = SparsePoly::constant(c);
    for (int k = 0; k < kMaxVariables && !term.is_zero(); ++k)
      if (m[k]) term = term * power(k, m[k]);
    out += term;
  }
  return out;
}

namespace {

void check_minimal(const Permutation& p, const std::vector<std::pair<int, int>>& blocks, const char* what) {
  if (!is_minimal_on_blocks(p, blocks))
    throw InputError(std::string(what) + " is not a minimal coset representative for the blocks of the spectrum");
}

// d_word P with P of degree |word|, discarding terms that can no longer reach a constant.
Integer apply_and_extract(const std::vector<int>& word, SparsePoly p, int r) {
  for (std::size_t done = 0; done < word.size() && !p.is_zero(); ++done) {
    const std::size_t pos = word.size() - 1 - done;
    p = divided_difference(word[pos], p);
    std::vector<bool> keep(r, false);
    for (std::size_t j = 0; j < pos; ++j) keep[word[j] - 1] = keep[word[j]] = true;
    p = p.restrict_to(keep);
  }
  return p.constant_term();
}

}  // namespace

Integer coefficient(const TestSpectrum& a, const Partition& nu, int r, const Permutation& v,
                    const Permutation& w) {
  if (a.size() != r) throw InputError("test spectrum length differs from r");
  if (v.degree() > r) throw InputError("v does not lie in S_r");
  check_minimal(v, a.blocks(), "v");
  const InducedSpectrum induced(a, nu);
  if (w.degree() > induced.size()) throw InputError("w does not lie in S_dim");
  check_minimal(w, induced.blocks(), "w");
  if (v.length() != w.length()) return 0;
  const std::vector<int> word = v.reduced_word();
  std::vector<bool> keep(r, false);
  for (int i : word) keep[i - 1] = keep[i] = true;
  return apply_and_extract(word, specialized_schubert(induced, r, w, keep), r);
}

namespace {

// Values of maximal multiplicity among the coefficients.
std::vector<Integer> most_frequent(const std::vector<Integer>& c) {
  std::map<Integer, int> count;
  for (const auto& x : c) ++count[x];
  int best = 0;
  for (const auto& [t, k] : count) best = std::max(best, k);
  std::vector<Integer> out;
  for (const auto& [t, k] : count)
    if (k == best) out.push_back(t);
  return out;
}

void divide_by_gcd(OccupationInequality& q) {
  Integer g = abs(q.bound);
  for (const auto& x : q.lambda_coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(abs(x)).get_mpz_t());
  for (const auto& x : q.mu_coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(abs(x)).get_mpz_t());
  if (g <= 1) return;
  for (auto& x : q.lambda_coeffs) x /= g;
  for (auto& x : q.mu_coeffs) x /= g;
  q.bound /= g;
}

// Order among the shifted candidates: smaller L1 norm of the lambda part,
// then smaller |bound|, then lexicographically larger lambda part.
bool preferred(const OccupationInequality& a, const OccupationInequality& b) {
  Integer la = 0, lb = 0;
  for (const auto& x : a.lambda_coeffs) la += abs(x);
  for (const auto& x : b.lambda_coeffs) lb += abs(x);
  if (la != lb) return la < lb;
  if (abs(a.bound) != abs(b.bound)) return abs(a.bound) < abs(b.bound);
  if (a.lambda_coeffs != b.lambda_coeffs) return a.lambda_coeffs > b.lambda_coeffs;
  return a.bound > b.bound;
}

}  // namespace

OccupationInequality canonical(const OccupationInequality& ineq, int N) {
  OccupationInequality base = ineq;
  if (!base.mu_coeffs.empty()) {
    const Integer s = base.mu_coeffs[0];
    for (auto& d : base.mu_coeffs) d -= s;
    base.bound -= s;
  }
  if (base.lambda_coeffs.empty()) {
    divide_by_gcd(base);
    return base;
  }
  std::optional<OccupationInequality> best;
  for (const Integer& t : most_frequent(base.lambda_coeffs)) {
    OccupationInequality q = base;
    for (auto& c : q.lambda_coeffs) c -= t;
    q.bound -= t * N;
    divide_by_gcd(q);
    if (!best || preferred(q, *best)) best = std::move(q);
  }
  return *best;
}

OccupationInequality canonical(const std::vector<Rational>& lambda_coeffs, const std::vector<Rational>& mu_coeffs,
                               const Rational& bound, int N) {
  Integer l = bound.get_den();
  for (const auto& q : lambda_coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  for (const auto& q : mu_coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  OccupationInequality ineq;
  auto scale = [&](const Rational& q) { return Integer(Rational(q * l).get_num()); };
  for (const auto& q : lambda_coeffs) ineq.lambda_coeffs.push_back(scale(q));
  for (const auto& q : mu_coeffs) ineq.mu_coeffs.push_back(scale(q));
  ineq.bound = scale(bound);
  return canonical(ineq, N);
}

std::string OccupationInequality::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Integer& c, const char* var, std::size_t i) {
    if (c == 0) return;
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    if (abs(c) != 1) os << Integer(abs(c)).get_str();
    os << var << (i + 1);
  };
  for (std::size_t i = 0; i < lambda_coeffs.size(); ++i) emit(lambda_coeffs[i], "l", i);
  for (std::size_t j = 0; j < mu_coeffs.size(); ++j) emit(mu_coeffs[j], "m", j);
  if (first) os << '0';
  os << " <= " << bound.get_str();
  return os.str();
}

TripleSearch inequality_to_triple(const OccupationInequality& ineq, const Partition& nu) {
  const int r = static_cast<int>(ineq.lambda_coeffs.size());
  if (r == 0) throw InputError("inequality has no lambda coefficients");
  const auto& c = ineq.lambda_coeffs;
  if (std::all_of(c.begin(), c.end(), [&](const Integer& x) { return x == c[0]; }))
    throw InputError("inequality does not depend on the spectrum modulo the trace");
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return c[i] > c[j]; });
  std::vector<long> a(r);
  std::vector<int> v(r);
  for (int i = 0; i < r; ++i) {
    if (!c[order[i]].fits_slong_p()) throw ResourceLimitError("coefficient too large");
    a[i] = c[order[i]].get_si();
    v[i] = order[i] + 1;
  }
  Triple t{TestSpectrum(a), Permutation(v), {}};
  // Right-hand side sum_j A_j mu_j after moving the mu terms across.
  std::vector<Integer> rhs;
  if (ineq.is_pure()) rhs.push_back(ineq.bound);
  else
    for (const auto& d : ineq.mu_coeffs) rhs.push_back(ineq.bound - d);
  const InducedSpectrum induced(t.a, nu);
  const auto values = induced.values();
  const int dim = induced.size();
  std::vector<int> w(dim, 0);
  for (std::size_t j = 0; j < rhs.size(); ++j) {
    int k = -1;
    for (int i = 0; i < dim && k < 0; ++i)
      if (!w[i] && Integer(values[i]) == rhs[j]) k = i;
    if (k < 0) return {std::nullopt, "no free entry of the induced spectrum equals " + rhs[j].get_str()};
    w[k] = static_cast<int>(j) + 1;
  }
  int next = static_cast<int>(rhs.size()) + 1;
  for (int& x : w)
    if (!x) x = next++;
  t.w = Permutation(w);
  if (t.v.length() != t.w.length())
    return {std::nullopt, "length mismatch: l(v)=" + std::to_string(t.v.length()) +
                              ", l(w)=" + std::to_string(t.w.length())};
  return {t, {}};
}

OccupationInequality replay_inequality(const Triple& t, const Partition& nu, int rank) {
  const int r = t.a.size();
  OccupationInequality out;
  out.lambda_coeffs.assign(r, 0);
  for (int i = 1; i <= r; ++i) out.lambda_coeffs[t.v(i) - 1] = t.a[i - 1];
  const InducedSpectrum induced(t.a, nu);
  const auto values = induced.values();
  const Permutation winv = t.w.inverse();
  const int R = std::max(rank, 1);
  std::vector<Integer> A(R);
  for (int j = 1; j <= R; ++j) {
    const int k = winv(j);
    if (k > induced.size()) throw InputError("w moves past the induced spectrum");
    A[j - 1] = values[k - 1];
  }
  out.bound = A[0];
  if (rank > 0)
    for (int j = 0; j < R; ++j) out.mu_coeffs.push_back(A[0] - A[j]);
  return out;
}

bool TableReport::all_ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const RowCheck& r) { return r.ok(); });
}

TableReport verify_table(const GoldenTable& table) {
  TableReport report{table.name, {}};
  int index = 0;
  for (const auto& row : table.rows) {
    RowCheck check;
    check.index = ++index;
    check.expected = row.c;
    if (static_cast<int>(row.lambda_coeffs.size()) != table.r) throw InputError("row length differs from r");
    std::vector<Integer> sorted = row.lambda_coeffs;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::vector<long> a;
    for (const auto& x : sorted) a.push_back(x.get_si());
    const TestSpectrum spectrum(a);
    check.v_consistent = row.v.degree() <= table.r;
    for (int i = 1; i <= table.r && check.v_consistent; ++i)
      check.v_consistent = row.lambda_coeffs[row.v(i) - 1] == sorted[i - 1];
    const InducedSpectrum induced(spectrum, table.nu);
    const int k = row.w.inverse()(1);
    check.bound_consistent = k <= induced.size() && Integer(induced.values()[k - 1]) == row.bound;
    if (check.v_consistent) check.computed = coefficient(spectrum, table.nu, table.r, row.v, row.w);
    const auto derived = inequality_to_triple({row.lambda_coeffs, {}, row.bound}, table.nu);
    check.derived_matches = derived.triple && derived.triple->v == row.v && derived.triple->w == row.w;
    report.rows.push_back(std::move(check));
  }
  return report;
}

}  // namespace gpc
