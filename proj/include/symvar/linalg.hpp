#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symvar/rational.hpp"

namespace symvar {

/// Row-major dense rational matrix. An empty matrix still remembers its column count.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, zero_vec(cols)) {}
  /// Builds from rows; all rows must have length `cols`.
  static Matrix from_rows(std::vector<RationalVec> rows, std::size_t cols);
  static Matrix from_rows(std::vector<RationalVec> rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const RationalVec& row(std::size_t i) const { return rows_.at(i); }
  RationalVec& row(std::size_t i) { return rows_.at(i); }
  const std::vector<RationalVec>& row_list() const { return rows_; }
  RationalVec column(std::size_t j) const;
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  void append_row(RationalVec r);

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  RationalVec apply(const RationalVec& x) const;        ///< M x
  RationalVec apply_left(const RationalVec& y) const;   ///< y^T M
  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<RationalVec> rows_;
};

struct RowEchelon {
  Matrix reduced;                   ///< reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  ///< pivot column per nonzero row
};

RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::size_t rank(const std::vector<RationalVec>& rows, std::size_t cols);

/// Basis of {x : M x = 0}.
std::vector<RationalVec> kernel_basis(const Matrix& m);
/// Basis of the row space (rows of the RREF).
std::vector<RationalVec> row_space_basis(const std::vector<RationalVec>& rows, std::size_t cols);

/// Exact solution set of A x = b over the rationals.
struct SolutionSet {
  bool feasible = false;
  RationalVec particular;            ///< valid only when feasible; free variables set to 0
  std::vector<RationalVec> kernel;   ///< basis of the homogeneous solutions
};

SolutionSet solve_exact(const Matrix& a, const RationalVec& b);

Rational determinant(const Matrix& m);
/// Throws InputError for singular or non-square input.
Matrix inverse(const Matrix& m);

/// Coordinates c with sum_i c_i basis[i] = v, if v lies in the span (basis rows independent).
std::optional<RationalVec> coordinates_in(const std::vector<RationalVec>& basis, const RationalVec& v);

/// Integer basis of ker(E) ∩ Z^n for an integral matrix E (entries must be integers).
std::vector<RationalVec> integer_kernel_basis(const Matrix& e);
/// Integer basis of span(rows) ∩ Z^n.
std::vector<RationalVec> saturated_lattice_basis(const std::vector<RationalVec>& rows, std::size_t cols);

}  // namespace symvar
