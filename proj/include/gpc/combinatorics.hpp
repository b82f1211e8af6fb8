#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "gpc/common.hpp"

namespace gpc {

// Integer partition with parts stored in non-increasing order, zeros stripped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition row(int length);
  static Partition column(int height);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // Part i (0-based); zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition transpose() const;
  bool contains(const Partition& inner) const;
  bool fits(int rows, int cols) const;
  bool is_row() const { return parts_.size() <= 1; }
  bool is_column() const;
  std::vector<Partition> removable_corners() const;  // diagrams with one outer corner removed
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// All partitions of n with at most max_parts parts, each at most max_part,
// in reverse lexicographic order ([n] first).
std::vector<Partition> partitions_of(int n, int max_parts = -1, int max_part = -1);

struct SemistandardTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  std::vector<int> reading_word() const;  // rows top to bottom, left to right
  std::vector<int> content(int max_entry) const;
  bool is_valid() const;
  std::string to_string() const;
  bool operator==(const SemistandardTableau&) const = default;
};

// SSYT of the given shape with entries in 1..max_entry, sorted lexicographically
// by reading word.
std::vector<SemistandardTableau> enumerate_ssyt(const Partition& shape, int max_entry);

// Number of standard fillings of the skew shape outer/inner.
Integer count_skew_standard(const Partition& outer, const Partition& inner);
Integer count_standard(const Partition& shape);

// Kostka number K_{shape,content}; content is any composition.
Integer kostka(const Partition& shape, const std::vector<int>& content);

// c^{nu}_{mu,pi}
Integer littlewood_richardson(const Partition& mu, const Partition& pi, const Partition& nu);

// Dimension of the irreducible GL_r module with highest weight shape.
Integer weyl_dimension(const Partition& shape, int r);

struct FramedDiagram {
  Partition diagram;
  int rows = 0;
  int cols = 0;
};

// Positions of vertical steps along the boundary path of a framed diagram,
// walked from the bottom-left corner: i_k = k + diagram[rows-k].
std::vector<int> vertical_sequence(const FramedDiagram& framed);
// Inverse of vertical_sequence for increasing i_1 < ... < i_p.
FramedDiagram diagram_from_indices(const std::vector<int>& indices);

// nu*_i = s - nu_{r+1-i}
Partition complement_diagram(const Partition& nu, int r, int s);

Integer binomial(int n, int k);

}  // namespace gpc
