#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symvar/cone.hpp"
#include "symvar/symmetric_space.hpp"

namespace symvar {

/// Cone in α^∨-coordinates together with a set of colors.
struct ColoredCone {
  ConeQ cone;
  std::set<ColorId> colors;
  bool operator==(const ColoredCone&) const = default;
};

/// cone(rays ∪ ρ(colors)) with the given colors.
ColoredCone make_colored_cone(const SymmetricSpaceData& space, const std::vector<RationalVec>& rays,
                              const std::set<ColorId>& colors);

/// A G-stable prime divisor: its ray id and primitive generator v_E in χ*(S).
struct FanRay {
  std::string id;
  RationalVec generator;
  bool operator==(const FanRay&) const = default;
};

/// Colored fan given by its listed (usually maximal) colored cones. The fan itself is the
/// set of colored faces of these cones whose relative interior meets C⁻.
class ColoredFan {
 public:
  ColoredFan(SymmetricSpaceData space, std::vector<ColoredCone> cones);

  const SymmetricSpaceData& space() const { return space_; }
  const std::vector<ColoredCone>& cones() const { return cones_; }
  /// G-stable rays, ids r0, r1, ... in lexicographic order of the generator.
  const std::vector<FanRay>& rays() const { return rays_; }
  const FanRay& ray(const std::string& id) const;
  std::optional<std::size_t> ray_index(const RationalVec& direction) const;
  /// Indices into rays() of the G-stable rays of listed cone k.
  std::vector<std::size_t> cone_rays(std::size_t k) const;
  /// Union of the color sets of the listed cones.
  std::set<ColorId> fan_colors() const;

  bool operator==(const ColoredFan& o) const { return space_ == o.space_ && cones_ == o.cones_; }

 private:
  SymmetricSpaceData space_;
  std::vector<ColoredCone> cones_;
  std::vector<FanRay> rays_;
};

/// Primitive vector of the lattice (rows of `basis`) on the ray through v.
RationalVec primitive_in_lattice(const RationalVec& v, const Matrix& basis);

/// Colored faces (C', F ∩ ρ⁻¹(C')) of the listed cones whose relative interior meets C⁻, deduplicated.
std::vector<ColoredCone> fan_faces(const ColoredFan& fan);
/// Whether the relative interior of c meets C⁻.
bool relint_meets_valuation_cone(const ConeQ& c, const ConeQ& valuation);

ValidationReport validate_fan(const ColoredFan& fan);
bool is_complete(const ColoredFan& fan);
bool is_toroidal(const ColoredFan& fan);
bool is_qfactorial(const ColoredFan& fan);
std::vector<FanRay> gstable_rays(const ColoredFan& fan);
ColoredFan decolorate(const ColoredFan& fan);

/// A fan with its predicate flags computed once.
struct SymVariety {
  explicit SymVariety(ColoredFan f);
  ColoredFan fan;
  bool complete;
  bool toroidal;
  bool qfactorial;
};

/// Uncolored fan in χ*(S)_Q, listed by maximal cones (sorted).
struct PlainFan {
  std::vector<ConeQ> cones;
  std::vector<RationalVec> rays() const;  ///< all extremal rays, sorted
};
/// W-translates of the cones of a toroidal complete fan.
PlainFan toric_slice_fan(const ColoredFan& fan);

/// Index of the listed cone of `fan` containing the cone c, if any.
std::optional<std::size_t> containing_cone(const ColoredFan& fan, const ConeQ& c);

}  // namespace symvar
