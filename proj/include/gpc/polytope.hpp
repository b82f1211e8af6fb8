#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gpc/common.hpp"

namespace gpc {

using RVec = std::vector<Rational>;

// normal . x <= offset
struct HalfSpace {
  RVec normal;
  Rational offset;
};

// normal . x == offset
struct Hyperplane {
  RVec normal;
  Rational offset;
};

class RationalPolytope {
 public:
  int ambient_dim = 0;
  std::vector<Hyperplane> equations;  // affine hull
  std::vector<HalfSpace> facets;
  std::vector<RVec> vertices;

  bool empty() const { return vertices.empty(); }
  int dimension() const;  // -1 when empty
  bool contains(const RVec& x) const;
};

// Extreme rays of the pointed cone {y : rows . y >= 0} by double description
// with lexicographic row insertion. Rays are primitive integer vectors in
// lexicographic order. Throws InputError when the cone is not pointed.
std::vector<std::vector<Integer>> extreme_rays(std::vector<std::vector<Integer>> rows, int d);

// Convex hull: equations of the affine hull in reduced row echelon form,
// facets, and the extreme points of the input.
RationalPolytope hull(std::vector<RVec> points);

// Vertices of {x : eqs, ineqs}; the result keeps the given H-representation.
// Throws InputError when the polyhedron is unbounded.
RationalPolytope from_constraints(int dim, std::vector<Hyperplane> eqs, std::vector<HalfSpace> ineqs);

// Mutual containment of vertex sets.
bool equal(const RationalPolytope& a, const RationalPolytope& b);

// Indices of the points on which the half-space is tight.
std::vector<std::size_t> tight_set(const HalfSpace& h, const std::vector<RVec>& points);

// Integer multiple of v with coprime entries (sign kept).
std::vector<Integer> primitive(const RVec& v);
RVec to_rational(const std::vector<Integer>& v);

// Dimension of the affine span; -1 for no points.
int affine_dimension(const std::vector<RVec>& points);

std::string to_string(const RVec& v);

}  // namespace gpc
