#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symvar/divisor_theory.hpp"

namespace symvar {

struct QFactorialization {
  ColoredFan fan;
  /// Input ray id → output ray id (same generator), and input color → same color.
  std::map<std::string, std::string> identification;
  BDivisor ample_input;     ///< ample divisor on the input
  BDivisor polytope_divisor;  ///< ample on the symmetrized fan, G-stable up to equivalence, 0 ∈ int P(D)
  std::size_t scale = 1;    ///< the n of n·D⁽⁴⁾
  std::vector<std::string> log;
};

/// Same cones, each color set replaced by ρ⁻¹(ρ(F)).
ColoredFan symmetrize_colors(const ColoredFan& fan);

/// Complete projective input. Without a hint the ample divisor comes from find_ample_divisor.
/// Throws PreconditionError naming the failing step.
QFactorialization qfactorialize(const ColoredFan& fan, const std::optional<BDivisor>& ample_hint = std::nullopt);

}  // namespace symvar
