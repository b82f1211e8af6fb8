#include "gpc/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace gpc {

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw InputError("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw InputError("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InputError("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("partition parts must be non-increasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::row(int length) { return Partition(std::vector<int>{length}); }

Partition Partition::column(int height) {
  if (height < 0) throw InputError("negative column height");
  return Partition(std::vector<int>(height, 1));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
  if (parts_.empty()) return {};
  std::vector<int> t(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++t[j];
  return Partition(std::move(t));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

bool Partition::fits(int rows, int cols) const {
  return length() <= rows && (parts_.empty() || parts_[0] <= cols);
}

bool Partition::is_column() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
}

std::vector<Partition> Partition::removable_corners() const {
  std::vector<Partition> out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i + 1 < parts_.size() && parts_[i + 1] == parts_[i]) continue;
    std::vector<int> q = parts_;
    --q[i];
    out.emplace_back(std::move(q));
  }
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ']';
  return os.str();
}

std::vector<Partition> partitions_of(int n, int max_parts, int max_part) {
  if (n < 0) throw InputError("partitions_of: negative size");
  if (max_parts < 0) max_parts = n;
  if (max_part < 0) max_part = n;
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int bound) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(remaining, bound); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

std::vector<int> SemistandardTableau::reading_word() const {
  std::vector<int> w;
  for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
  return w;
}

std::vector<int> SemistandardTableau::content(int max_entry) const {
  std::vector<int> c(max_entry, 0);
  for (const auto& row : rows)
    for (int x : row) {
      if (x < 1 || x > max_entry) throw InputError("tableau entry out of range");
      ++c[x - 1];
    }
  return c;
}

bool SemistandardTableau::is_valid() const {
  if (static_cast<int>(rows.size()) != shape.length()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != shape[i]) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] < 1) return false;
      if (j > 0 && rows[i][j] < rows[i][j - 1]) return false;
      if (i > 0 && rows[i][j] <= rows[i - 1][j]) return false;
    }
  }
  return true;
}

std::string SemistandardTableau::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << '/';
    for (int x : rows[i]) os << x;
  }
  return os.str();
}

std::vector<SemistandardTableau> enumerate_ssyt(const Partition& shape, int max_entry) {
  std::vector<SemistandardTableau> out;
  if (shape.length() > max_entry) return out;
  SemistandardTableau t{shape, {}};
  for (int p : shape.parts()) t.rows.emplace_back(p, 0);
  const int nrows = shape.length();
  std::function<void(int, int)> fill = [&](int i, int j) {
    if (i == nrows) {
      out.push_back(t);
      return;
    }
    if (j == shape[i]) {
      fill(i + 1, 0);
      return;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, t.rows[i][j - 1]);
    if (i > 0) lo = std::max(lo, t.rows[i - 1][j] + 1);
    // entries below still need room: the column below has nrows_in_col - i - 1 cells
    int below = 0;
    for (int k = i + 1; k < nrows && shape[k] > j; ++k) ++below;
    for (int x = lo; x <= max_entry - below; ++x) {
      t.rows[i][j] = x;
      fill(i, j + 1);
    }
  };
  fill(0, 0);
  return out;
}

Integer count_skew_standard(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return 0;
  thread_local std::map<std::pair<Partition, Partition>, Integer> memo;
  if (outer == inner) return 1;
  auto key = std::make_pair(outer, inner);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Integer total = 0;
  for (const Partition& smaller : outer.removable_corners())
    if (smaller.contains(inner)) total += count_skew_standard(smaller, inner);
  memo.emplace(std::move(key), total);
  return total;
}

Integer count_standard(const Partition& shape) { return count_skew_standard(shape, Partition{}); }

namespace {

Integer kostka_sorted(const Partition& shape, const std::vector<int>& content) {
  thread_local std::map<std::pair<Partition, std::vector<int>>, Integer> memo;
  if (content.empty()) return shape.empty() ? 1 : 0;
  if (shape.size() != std::accumulate(content.begin(), content.end(), 0)) return 0;
  if (shape.length() > static_cast<int>(content.size())) return 0;
  auto key = std::make_pair(shape, content);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  // Strip the cells holding the largest entry: a horizontal strip of size content.back().
  const int strip = content.back();
  std::vector<int> prefix(content.begin(), content.end() - 1);
  const auto& lam = shape.parts();
  const int n = shape.length();
  std::vector<int> mu(n);
  Integer total = 0;
  std::function<void(int, int)> rec = [&](int i, int removed) {
    if (i == n) {
      if (removed == strip) total += kostka_sorted(Partition(mu), prefix);
      return;
    }
    const int lower = i + 1 < n ? lam[i + 1] : 0;
    for (int m = lam[i]; m >= lower; --m) {
      const int r = removed + lam[i] - m;
      if (r > strip) break;
      mu[i] = m;
      rec(i + 1, r);
    }
  };
  rec(0, 0);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer kostka(const Partition& shape, const std::vector<int>& content) {
  std::vector<int> c;
  for (int x : content) {
    if (x < 0) throw InputError("kostka: negative content entry");
    if (x > 0) c.push_back(x);
  }
  std::sort(c.begin(), c.end(), std::greater<>());
  return kostka_sorted(shape, c);
}

Integer littlewood_richardson(const Partition& mu, const Partition& pi, const Partition& nu) {
  if (!nu.contains(mu) || mu.size() + pi.size() != nu.size()) return 0;
  const int n = nu.length();
  const int k = pi.length();
  if (k == 0) return 1;
  std::vector<std::vector<int>> fill(n);
  for (int i = 0; i < n; ++i) fill[i].assign(nu[i], 0);
  std::vector<int> used(k + 1, 0);
  Integer count = 0;
  // Cells are visited in reverse reading order: rows top to bottom, right to left.
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i == n) {
      ++count;
      return;
    }
    if (j < mu[i]) {
      rec(i + 1, i + 1 < n ? nu[i + 1] - 1 : 0);
      return;
    }
    int hi = k;
    if (j + 1 < nu[i]) hi = std::min(hi, fill[i][j + 1]);
    int lo = 1;
    if (i > 0 && j >= mu[i - 1] && j < nu[i - 1]) lo = fill[i - 1][j] + 1;
    for (int x = lo; x <= hi; ++x) {
      if (used[x] == pi[x - 1]) continue;
      if (x > 1 && used[x] + 1 > used[x - 1]) continue;
      fill[i][j] = x;
      ++used[x];
      if (j == 0 || j - 1 < mu[i])
        rec(i + 1, i + 1 < n ? nu[i + 1] - 1 : 0);
      else
        rec(i, j - 1);
      --used[x];
    }
  };
  rec(0, nu[0] - 1);
  return count;
}

Integer weyl_dimension(const Partition& shape, int r) {
  if (shape.length() > r) return 0;
  const Partition t = shape.transpose();
  Integer num = 1, den = 1;
  for (int i = 0; i < shape.length(); ++i)
    for (int j = 0; j < shape[i]; ++j) {
      num *= r + j - i;
      den *= (shape[i] - j - 1) + (t[j] - i - 1) + 1;
    }
  return num / den;
}

std::vector<int> vertical_sequence(const FramedDiagram& framed) {
  if (!framed.diagram.fits(framed.rows, framed.cols)) throw InputError("diagram does not fit its frame");
  std::vector<int> idx(framed.rows);
  for (int k = 1; k <= framed.rows; ++k) idx[k - 1] = k + framed.diagram[framed.rows - k];
  return idx;
}

FramedDiagram diagram_from_indices(const std::vector<int>& indices) {
  const int p = static_cast<int>(indices.size());
  std::vector<int> parts(p);
  for (int k = 1; k <= p; ++k) {
    if (indices[k - 1] < 1 || (k > 1 && indices[k - 1] <= indices[k - 2]))
      throw InputError("indices must be strictly increasing positive integers");
    parts[p - k] = indices[k - 1] - k;
  }
  return FramedDiagram{Partition(parts), p, p ? indices.back() - p : 0};
}

Partition complement_diagram(const Partition& nu, int r, int s) {
  if (!nu.fits(r, s)) throw InputError("diagram does not fit the r x s box");
  std::vector<int> parts(r);
  for (int i = 1; i <= r; ++i) parts[i - 1] = s - nu[r - i];
  return Partition(parts);
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace gpc
