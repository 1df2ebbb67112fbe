#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symvar/colored_fans.hpp"
#include "symvar/polytope.hpp"

namespace symvar {

/// B-stable Weil ℚ-divisor Σ a_F F + Σ b_E E. Missing keys are zero.
struct BDivisor {
  std::map<ColorId, Rational> colors;
  std::map<std::string, Rational> rays;  ///< keyed by ray id ("r0", ...)

  Rational color(const ColorId& c) const;
  Rational ray(const std::string& id) const;
  bool is_integral() const;
  bool is_gstable() const;  ///< all color coefficients zero
  /// Drops zero entries so that equal divisors compare equal.
  BDivisor normalized() const;
  bool operator==(const BDivisor& o) const;
};

BDivisor operator+(const BDivisor& a, const BDivisor& b);
BDivisor operator-(const BDivisor& a, const BDivisor& b);
BDivisor operator*(const Rational& s, const BDivisor& d);

/// Throws InputError when D names a color or ray that the fan does not have.
void check_divisor(const ColoredFan& fan, const BDivisor& d);

/// Prime B-stable divisors of X: colors (sorted), then G-stable rays r0, r1, ...
std::vector<std::string> prime_divisor_names(const ColoredFan& fan);
/// Coefficient vector of D in the order of prime_divisor_names.
RationalVec divisor_vector(const ColoredFan& fan, const BDivisor& d);
BDivisor divisor_from_vector(const ColoredFan& fan, const RationalVec& x);
/// The prime divisor with the given name, coefficient 1.
BDivisor prime_divisor(const ColoredFan& fan, const std::string& name);

/// div(f_ω). Throws InputError unless ω ∈ χ(S).
BDivisor principal_divisor(const ColoredFan& fan, const RationalVec& omega);
/// Same formula for any ω ∈ χ(S)_ℚ.
BDivisor principal_divisor_q(const ColoredFan& fan, const RationalVec& omega);

struct ClassGroupPresentation {
  std::vector<std::string> generators;  ///< prime_divisor_names
  Matrix relations;                     ///< row k: div(f) for the k-th χ(S) basis vector
  std::vector<std::string> basis;       ///< complement basis: rays, then the F+ colors
  std::size_t rank() const { return basis.size(); }
};
ClassGroupPresentation class_group(const ColoredFan& fan);

/// Coordinates of [D] over class_group(fan).basis.
RationalVec divisor_class(const ColoredFan& fan, const BDivisor& d);
/// The divisor Σ c_i (basis element i) with the given class coordinates.
BDivisor divisor_with_class(const ColoredFan& fan, const RationalVec& cls);

/// Pieces h_C of the support function, one per listed cone (weights in ω-coordinates).
/// Where a cone is not full-dimensional `freedom` spans the directions h_C may move in.
struct PLFunction {
  std::vector<RationalVec> pieces;
  std::vector<std::vector<RationalVec>> freedom;
  bool integral = false;  ///< integer values on χ*(S) ∩ each cone's span
};

/// nullopt when D is not ℚ-Cartier.
std::optional<PLFunction> cartier_data(const ColoredFan& fan, const BDivisor& d);
bool is_q_cartier(const ColoredFan& fan, const BDivisor& d);
/// ℚ-Cartier with integral support function.
bool is_cartier(const ColoredFan& fan, const BDivisor& d);

/// Throw PreconditionError when D is not ℚ-Cartier or a listed cone lies in no full-dimensional one.
bool is_nef(const ColoredFan& fan, const BDivisor& d);
bool is_globally_generated(const ColoredFan& fan, const BDivisor& d);
bool is_ample(const ColoredFan& fan, const BDivisor& d);

/// Some ample ℚ-divisor, found by an exact LP on the strict convexity inequalities.
std::optional<BDivisor> find_ample_divisor(const ColoredFan& fan);

struct ReducedDivisor {
  RationalVec shift;          ///< m = Σ c_α ω_α, so D = D1 + D2 + div(m)
  BDivisor d1;                ///< G-stable
  BDivisor d2;                ///< actual surviving colors, nonnegative when D is effective on colors
  BDivisor d2_plus;           ///< d2 with every survivor renamed to its F+ color
  std::vector<std::size_t> renamed;  ///< roots whose survivor was F-
  std::optional<PLFunction> h1;      ///< h - m, when D is ℚ-Cartier
};
ReducedDivisor reduce_star(const ColoredFan& fan, const BDivisor& d);

/// P(D) in ω-coordinates.
PolytopeQ moment_polytope(const ColoredFan& fan, const BDivisor& d);
/// χ(S) ∩ P(D). Throws InputError for non-integral D.
std::vector<RationalVec> h0_highest_weights(const ColoredFan& fan, const BDivisor& d);
/// conv(W · (−h_C)). Toroidal complete X and G-stable nef D only.
PolytopeQ weight_polytope(const ColoredFan& fan, const BDivisor& d);
/// rank! · vol(Q(D)) in χ(S) units.
Rational toric_volume(const ColoredFan& fan, const BDivisor& d);

/// Class on the toric slice: Cl_ℚ(Z) = ℚ^{rays} modulo characters, reduced to zero on pivot rays.
struct ToricClass {
  std::vector<RationalVec> rays;  ///< rays of toric_slice_fan
  RationalVec coords;
  bool is_zero() const;
  bool operator==(const ToricClass&) const = default;
};
/// Toric divisor Σ x_u D_u as a class.
ToricClass toric_class(const ColoredFan& fan, const RationalVec& ray_coeffs);
/// i*[D]: each E goes to the sum of D_u over the distinct u in W·v_E.
ToricClass slice_restriction_class(const ColoredFan& fan, const BDivisor& d);
/// Differences F+ − F− over the multiplicity-2 roots.
std::vector<BDivisor> restriction_kernel_basis(const ColoredFan& fan);

/// [F_α] for multiplicity 1, [F_α+ + F_α−] for multiplicity 2.
RationalVec color_pair_class(const ColoredFan& fan, std::size_t root);

struct EffectiveCone {
  std::vector<std::string> generators;      ///< prime divisor names
  std::vector<RationalVec> classes;         ///< their classes
  ConeQ cone = ConeQ::zero(0);
  /// For each extremal ray, the generators lying on it.
  std::vector<std::vector<std::size_t>> ray_members;
  /// Multiplicity-2 colors and the E not proportional to any [F+ + F−].
  std::vector<std::size_t> predicted;
  bool matches_prediction = false;
};
/// Complete ℚ-factorial X only.
EffectiveCone effective_cone(const ColoredFan& fan);

/// Irreducible factors R with <ω_α, v_E'> = 0 for every α ∈ R and every other ray E'.
std::vector<std::vector<std::size_t>> proportional_to_color(const ColoredFan& fan, std::size_t ray_index);

bool big_cone_membership(const ColoredFan& fan, const RationalVec& cls);
bool is_big_nef(const ColoredFan& fan, const BDivisor& d);
bool is_big(const ColoredFan& fan, const BDivisor& d);

struct PicardGroup {
  std::vector<RationalVec> basis;  ///< RREF basis of Pic_ℚ in class coordinates
  std::size_t rank() const { return basis.size(); }
};
PicardGroup picard_group(const ColoredFan& fan);

}  // namespace symvar
