#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "symvar/cone.hpp"
#include "symvar/linalg.hpp"
#include "symvar/rational.hpp"

namespace symvar {

enum class Family { A, B, C, D, E, F, G, BC };

struct CartanLabel {
  Family family;
  int rank;
  bool operator==(const CartanLabel&) const = default;
};

std::string to_string(Family f);
Family parse_family(const std::string& s);
std::string to_string(const CartanLabel& l);
/// Throws InputError for impossible family/rank combinations.
void check_label(const CartanLabel& l);
/// Closed-form |W| of one irreducible factor.
Integer weyl_group_order(const CartanLabel& l);

/// Square integer matrix on weight (or covector) coordinates, row major.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<long> a;
  long operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  RationalVec apply(const RationalVec& x) const;
  IntMatrix operator*(const IntMatrix& o) const;
  auto operator<=>(const IntMatrix&) const = default;
};

/// Weyl group enumerated as matrices. weight[k] acts on ω-coordinates,
/// covector[k] = weight[k]^{-T} acts on α^∨-coordinates; element 0 is the identity.
struct WeylGroup {
  std::vector<IntMatrix> weight;
  std::vector<IntMatrix> covector;
  std::size_t order() const { return weight.size(); }
};

/// Restricted root system, possibly non-reduced (BC factors). Weights are in the basis of
/// fundamental weights ω_i, covectors in the basis of simple coroots α_i^∨, so the pairing
/// is the coordinate dot product and α_j has ω-coordinates row j of the Cartan matrix.
class RestrictedRootSystem {
 public:
  static RestrictedRootSystem build(const std::vector<CartanLabel>& labels);

  std::size_t rank() const { return cartan_.rows(); }
  const std::vector<CartanLabel>& labels() const { return labels_; }
  /// First simple-root index of each label.
  const std::vector<std::size_t>& offsets() const { return offsets_; }
  /// cartan(i, j) = <α_i, α_j^∨>.
  const Matrix& cartan() const { return cartan_; }
  const Matrix& gram() const { return gram_; }
  const std::set<std::size_t>& multipliable() const { return multipliable_; }

  RationalVec simple_root(std::size_t i) const;    ///< ω-coordinates
  RationalVec simple_coroot(std::size_t i) const;  ///< α^∨-coordinates (unit vector)
  RationalVec fundamental_weight(std::size_t i) const;  ///< unit vector
  /// ω_j^∨ with <α_i, ω_j^∨> = δ_ij, in α^∨-coordinates.
  std::vector<RationalVec> fundamental_coweights() const;

  Rational pairing(const RationalVec& m, const RationalVec& v) const;
  bool is_dominant(const RationalVec& m, bool strict = false) const;
  bool is_antidominant(const RationalVec& m, bool strict = false) const;

  RationalVec reflect_weight(std::size_t i, const RationalVec& m) const;
  RationalVec reflect_covector(std::size_t i, const RationalVec& v) const;
  /// Full orbit, sorted lexicographically.
  std::vector<RationalVec> weyl_orbit(const RationalVec& m) const;
  std::vector<RationalVec> weyl_orbit_covector(const RationalVec& v) const;
  /// Memoized; throws PreconditionError when |W| exceeds the enumeration guard.
  const WeylGroup& weyl_group() const;
  Integer expected_weyl_order() const;

  /// All roots in ω-coordinates (including 2α for multipliable α), sorted.
  const std::vector<RationalVec>& roots() const;
  bool is_root(const RationalVec& m) const;

  /// Connected components of the Dynkin diagram, each sorted.
  std::vector<std::vector<std::size_t>> irreducible_factors() const;
  /// C⁻ = {v : <α_i, v> <= 0 for all i} in α^∨-coordinates.
  ConeQ negative_chamber() const;
  /// C⁺ = {m : <m, α_i^∨> >= 0} in ω-coordinates.
  ConeQ dominant_chamber() const;

  bool operator==(const RestrictedRootSystem& o) const {
    return labels_ == o.labels_;
  }

 private:
  struct Cache;
  std::vector<CartanLabel> labels_;
  std::vector<std::size_t> offsets_;
  Matrix cartan_;
  Matrix gram_;
  std::set<std::size_t> multipliable_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace symvar
