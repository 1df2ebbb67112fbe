#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symvar/divisor_theory.hpp"

namespace symvar {

struct OracleReport {
  std::string quantity;
  std::string fast;
  std::string oracle;
  bool agree = false;  ///< fast == oracle
  std::string fingerprint;
};
OracleReport make_report(std::string quantity, std::string fast, std::string oracle, std::string instance);

/// Volume in lattice units from the full barycentric flag subdivision.
Rational brute_volume(const PolytopeQ& p, const Matrix& lattice_basis);
/// Lattice points by scanning the bounding box in lattice coordinates.
std::vector<RationalVec> brute_lattice_point_list(const PolytopeQ& p, const Matrix& lattice_basis);
std::size_t brute_lattice_points(const PolytopeQ& p, const Matrix& lattice_basis);

struct ExtremalRays {
  std::vector<std::size_t> extremal;           ///< every generator index on an extremal ray
  std::vector<std::vector<std::size_t>> rays;  ///< extremal generators grouped by ray
};
/// g is extremal iff g ∉ cone(generators off the ray of g), decided by exact LP.
ExtremalRays brute_extremal_rays(const std::vector<RationalVec>& generators);

/// Whether c = Σ λ_g g with every λ_g > 0, by exact LP.
bool brute_in_interior(const std::vector<RationalVec>& generators, const RationalVec& c);
/// Whether c ∈ cone(generators), by exact LP.
bool brute_in_cone(const std::vector<RationalVec>& generators, const RationalVec& c);

enum class BigVerdict { Big, NotBigUpToM, Undecided };
std::string to_string(BigVerdict v);
/// Looks for m ≤ M with [mD − A] effective. Undecided when A is not ample.
/// A / Σ|coefficients of A|. Still ample; the search over m then does not scale with the size of A.
BDivisor l1_normalized(const BDivisor& a);
BigVerdict brute_big_test(const ColoredFan& fan, const BDivisor& d, const BDivisor& ample, int max_m = 8);

}  // namespace symvar
