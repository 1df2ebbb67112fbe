#pragma once

#include <cstddef>
#include <vector>

#include "symvar/polytope.hpp"

namespace symvar {

using Simplex = std::vector<std::size_t>;  ///< sorted indices into Triangulation::points

struct Triangulation {
  std::vector<RationalVec> points;  ///< the pushing order as supplied
  std::vector<Simplex> simplices;   ///< full dimensional in Aff(parent), sorted
  PolytopeQ parent;
};

/// Pushes the points in the given order, starting from the trivial subdivision.
/// The points must be distinct, lie in P and include every vertex of P.
Triangulation push_triangulate(const PolytopeQ& p, const std::vector<RationalVec>& vertex_order);

/// Maximal simplices of the induced triangulation of the boundary of the parent
/// (relative to Aff(parent)), sorted.
std::vector<Simplex> boundary_simplices(const Triangulation& t);

/// Affine coordinates on the affine hull of `points`: origin plus an RREF direction basis.
class AffineChart {
 public:
  explicit AffineChart(const std::vector<RationalVec>& points);
  std::size_t dim() const { return pivots_.size(); }
  RationalVec coords(const RationalVec& x) const;  ///< x must lie in the affine hull

 private:
  RationalVec origin_;
  std::vector<std::size_t> pivots_;
};

/// |det| / d! of a d-simplex given by d+1 points in Q^d.
Rational simplex_volume(const std::vector<RationalVec>& vertices);

}  // namespace symvar
