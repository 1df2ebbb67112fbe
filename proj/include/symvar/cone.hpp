#pragma once

#include <cstddef>
#include <vector>

#include "symvar/rational.hpp"

namespace symvar {

enum class ContainMode { Closed, RelativeInterior };

/// Polyhedral cone in Q^n carried in both representations.
///
/// V-rep: extremal rays of the pointed part C ∩ L^⊥ plus a basis of the lineality space L.
/// H-rep: irredundant facet normals (<f, x> >= 0) plus a basis of the equations of span(C).
/// Rays and facet normals are primitive integer vectors sorted lexicographically, so two
/// cones describing the same set compare equal field by field. Both representations are
/// computed eagerly; instances are immutable.
class ConeQ {
 public:
  static ConeQ from_generators(const std::vector<RationalVec>& generators, std::size_t ambient_dim);
  /// {x : <a, x> >= 0 for a in inequalities, <e, x> = 0 for e in equations}
  static ConeQ from_inequalities(const std::vector<RationalVec>& inequalities,
                                 const std::vector<RationalVec>& equations, std::size_t ambient_dim);
  static ConeQ zero(std::size_t ambient_dim);
  static ConeQ full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return ambient_dim_ - equations_.size(); }
  const std::vector<RationalVec>& rays() const { return rays_; }
  const std::vector<RationalVec>& lineality() const { return lineality_; }
  const std::vector<RationalVec>& facets() const { return facets_; }
  const std::vector<RationalVec>& equations() const { return equations_; }
  /// Rays together with ± lineality generators; cone(generators()) equals the cone.
  std::vector<RationalVec> generators() const;
  bool is_pointed() const { return lineality_.empty(); }
  bool is_full_dimensional() const { return equations_.empty(); }

  bool contains(const RationalVec& v, ContainMode mode = ContainMode::Closed) const;
  bool contains(const ConeQ& other) const;
  /// Sum of all rays; lies in the relative interior.
  RationalVec relative_interior_point() const;

  /// All faces (including the cone itself and its minimal face), pointed cones only.
  std::vector<ConeQ> faces() const;

  bool operator==(const ConeQ& other) const = default;

 private:
  ConeQ() = default;
  std::size_t ambient_dim_ = 0;
  std::vector<RationalVec> rays_;
  std::vector<RationalVec> lineality_;
  std::vector<RationalVec> facets_;
  std::vector<RationalVec> equations_;
};

ConeQ dual_cone(const ConeQ& c);
bool cone_contains(const ConeQ& c, const RationalVec& v, ContainMode mode);
ConeQ intersect_cones(const ConeQ& a, const ConeQ& b);
bool is_simplicial_cone(const ConeQ& c);

/// Pointed part and lineality of {x : A x >= 0, E x = 0} (double description).
struct RayDescription {
  std::vector<RationalVec> rays;
  std::vector<RationalVec> lineality;
};
RayDescription double_description(const std::vector<RationalVec>& inequalities,
                                  const std::vector<RationalVec>& equations, std::size_t ambient_dim);

/// True iff the union of `pieces` (closed cones) contains `target`, decided exactly by
/// cutting `target` along every facet hyperplane of the pieces and testing each full
/// dimensional cell. `target` must be full dimensional in the span it is tested in.
bool union_covers(const std::vector<ConeQ>& pieces, const ConeQ& target);

}  // namespace symvar
