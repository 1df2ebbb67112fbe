#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "symvar/cone.hpp"
#include "symvar/linalg.hpp"
#include "symvar/root_data.hpp"

namespace symvar {

struct ColorSpec {
  std::size_t root = 0;
  int multiplicity = 1;
  bool exceptional = false;
  bool operator==(const ColorSpec&) const = default;
};

struct FactorSpec {
  CartanLabel label;
  bool extra_color = false;  ///< |D| > rank on this factor
  bool operator==(const FactorSpec&) const = default;
};

enum class ColorSign { None, Plus, Minus };

/// A color: F_i when the fibre over α_i^∨ has one element, F_i^± otherwise.
struct ColorId {
  std::size_t root = 0;
  ColorSign sign = ColorSign::None;
  std::string name() const;  ///< "F0", "F2+", "F2-"
  static ColorId parse(const std::string& name);
  auto operator<=>(const ColorId&) const = default;
};

struct ValidationIssue {
  std::string clause;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  bool mentions(const std::string& clause) const;
  std::string summary() const;
};

/// Combinatorial data of G/H. The lattice rows are a basis of χ(S) in ω-coordinates.
class SymmetricSpaceData {
 public:
  /// Throws InputError on structural problems (unknown labels, wrong matrix shape);
  /// semantic checks live in validate_space.
  static SymmetricSpaceData make(std::vector<FactorSpec> factors, Matrix lattice, std::vector<ColorSpec> colors);

  std::size_t rank() const { return roots_.rank(); }
  const RestrictedRootSystem& roots() const { return roots_; }
  const std::vector<FactorSpec>& factors() const { return factors_; }
  const Matrix& lattice() const { return lattice_; }
  /// Rows: basis of χ*(S) in α^∨-coordinates, dual to lattice().
  Matrix dual_lattice() const;
  const std::vector<ColorSpec>& color_specs() const { return colors_; }
  const ColorSpec& color_spec(std::size_t root) const;
  /// Simple-root index sets of the declared factors.
  std::vector<std::vector<std::size_t>> factor_partition() const;
  std::size_t factor_of(std::size_t root) const;

  /// Every color, expanded by multiplicity, sorted.
  std::vector<ColorId> colors() const;
  bool has_color(const ColorId& c) const;

  /// Set by spherical_closure: the lattice of the closure is not determined.
  bool lattice_unresolved() const { return lattice_unresolved_; }

  bool operator==(const SymmetricSpaceData& o) const {
    return factors_ == o.factors_ && lattice_ == o.lattice_ && colors_ == o.colors_ &&
           lattice_unresolved_ == o.lattice_unresolved_;
  }

 private:
  friend struct ClosureAccess;
  std::vector<FactorSpec> factors_;
  RestrictedRootSystem roots_;
  Matrix lattice_;
  std::vector<ColorSpec> colors_;
  bool lattice_unresolved_ = false;
};

ValidationReport validate_space(const SymmetricSpaceData& data);

/// ρ(F) = α^∨ for the color's root.
RationalVec color_image(const SymmetricSpaceData& data, const ColorId& c);

struct ValuationCone {
  ConeQ cone;     ///< C⁻ in α^∨-coordinates
  Matrix lattice; ///< basis rows of χ*(S)
};
ValuationCone valuation_cone(const SymmetricSpaceData& data);

struct ClosureResult {
  SymmetricSpaceData space;
  std::vector<bool> closed;  ///< per declared factor
};
ClosureResult spherical_closure(const SymmetricSpaceData& data);

bool is_exceptional_space(const SymmetricSpaceData& data);

/// "A1-rank1", "A1xA1", "BC1-exceptional", plus "A2" and "A1xBC1".
SymmetricSpaceData builtin_space(const std::string& name);
std::vector<std::string> builtin_space_names();

}  // namespace symvar
