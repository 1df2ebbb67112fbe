#pragma once

#include <cstddef>
#include <vector>

#include "symvar/cone.hpp"
#include "symvar/linalg.hpp"
#include "symvar/rational.hpp"

namespace symvar {

/// Affine function x -> <normal, x> + offset.
struct AffineForm {
  RationalVec normal;
  Rational offset;
  Rational operator()(const RationalVec& x) const { return dot(normal, x) + offset; }
  bool operator==(const AffineForm&) const = default;
};

/// Exact polyhedron, usually bounded. Facets are irredundant (form >= 0),
/// equations cut out the affine hull (form = 0). Vertices sorted lexicographically.
/// An empty polyhedron has no vertices and dim() == -1.
class PolytopeQ {
 public:
  static PolytopeQ convex_hull(const std::vector<RationalVec>& points, std::size_t ambient_dim);
  static PolytopeQ convex_hull(const std::vector<RationalVec>& points);  ///< nonempty list
  static PolytopeQ from_halfspaces(const std::vector<AffineForm>& halfspaces,
                                   const std::vector<AffineForm>& equations, std::size_t ambient_dim);
  static PolytopeQ empty(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  int dim() const;
  bool is_empty() const { return vertices_.empty(); }
  bool is_bounded() const { return recession_.empty(); }
  const std::vector<RationalVec>& vertices() const { return vertices_; }
  /// Primitive generators of the recession cone (with ± lineality); empty when bounded.
  const std::vector<RationalVec>& recession_rays() const { return recession_; }
  const std::vector<AffineForm>& facets() const { return facets_; }
  const std::vector<AffineForm>& equations() const { return equations_; }

  bool contains(const RationalVec& x) const;
  bool contains_in_interior(const RationalVec& x) const;  ///< relative interior
  RationalVec barycenter() const;

  bool operator==(const PolytopeQ&) const = default;

 private:
  PolytopeQ() = default;
  static PolytopeQ from_homogeneous(const ConeQ& c, std::size_t ambient_dim);
  std::size_t ambient_dim_ = 0;
  std::vector<RationalVec> vertices_;
  std::vector<RationalVec> recession_;
  std::vector<AffineForm> facets_;
  std::vector<AffineForm> equations_;
};

PolytopeQ convex_hull(const std::vector<RationalVec>& points);
PolytopeQ intersect(const PolytopeQ& a, const PolytopeQ& b);

/// Volume in units of the lattice whose basis vectors are the rows of `lattice_basis`;
/// 0 if P is not full dimensional. Throws InputError for a singular basis.
Rational polytope_volume(const PolytopeQ& p, const Matrix& lattice_basis);
/// Volume inside Aff(P), in units of the saturated sublattice of L parallel to Aff(P).
/// A point has relative volume 1, the empty set 0.
Rational relative_volume(const PolytopeQ& p, const Matrix& lattice_basis);

/// Points of the lattice spanned by the rows of lattice_basis lying in P, in ambient
/// coordinates, sorted lexicographically. Throws PreconditionError if P is unbounded.
std::vector<RationalVec> lattice_points(const PolytopeQ& p, const Matrix& lattice_basis);

/// {n : <m, n> >= -1 for all m in P}; requires 0 in the interior of P.
PolytopeQ polar_polytope(const PolytopeQ& p);

/// Coordinates of x with respect to the rows of a basis (x = y B).
RationalVec lattice_coordinates(const Matrix& basis_inverse, const RationalVec& x);

}  // namespace symvar
