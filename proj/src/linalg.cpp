#include "symvar/linalg.hpp"

#include <utility>

namespace symvar {

Matrix Matrix::from_rows(std::vector<RationalVec> rows, std::size_t cols) {
  Matrix m;
  m.cols_ = cols;
  for (auto& r : rows) {
    if (r.size() != cols) throw InputError("matrix row has wrong length");
    m.rows_.push_back(std::move(r));
  }
  return m;
}

Matrix Matrix::from_rows(std::vector<RationalVec> rows) {
  if (rows.empty()) throw InputError("cannot infer column count of an empty matrix");
  const std::size_t c = rows.front().size();
  return from_rows(std::move(rows), c);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVec Matrix::column(std::size_t j) const {
  RationalVec c(rows());
  for (std::size_t i = 0; i < rows(); ++i) c[i] = rows_[i].at(j);
  return c;
}

void Matrix::append_row(RationalVec r) {
  if (r.size() != cols_) throw InputError("matrix row has wrong length");
  rows_.push_back(std::move(r));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = rows_[i][j];
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows()) throw InputError("matrix product dimension mismatch");
  Matrix p(rows(), other.cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (rows_[i][k] == 0) continue;
      for (std::size_t j = 0; j < other.cols(); ++j) p(i, j) += rows_[i][k] * other(k, j);
    }
  return p;
}

RationalVec Matrix::apply(const RationalVec& x) const {
  if (x.size() != cols_) throw InputError("matrix-vector dimension mismatch");
  RationalVec y(rows());
  for (std::size_t i = 0; i < rows(); ++i) y[i] = dot(rows_[i], x);
  return y;
}

RationalVec Matrix::apply_left(const RationalVec& y) const {
  if (y.size() != rows()) throw InputError("vector-matrix dimension mismatch");
  RationalVec x = zero_vec(cols_);
  for (std::size_t i = 0; i < rows(); ++i)
    if (y[i] != 0) x = axpy(x, y[i], rows_[i]);
  return x;
}

RowEchelon rref(const Matrix& m) {
  std::vector<RationalVec> a = m.row_list();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    const Rational inv = 1 / a[r][c];
    for (auto& q : a[r]) q *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return {Matrix::from_rows(std::move(a), cols), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::size_t rank(const std::vector<RationalVec>& rows, std::size_t cols) {
  return rank(Matrix::from_rows(rows, cols));
}

std::vector<RationalVec> kernel_basis(const Matrix& m) {
  const auto e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVec v = zero_vec(n);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RationalVec> row_space_basis(const std::vector<RationalVec>& rows, std::size_t cols) {
  return rref(Matrix::from_rows(rows, cols)).reduced.row_list();
}

SolutionSet solve_exact(const Matrix& a, const RationalVec& b) {
  if (b.size() != a.rows())
    throw InputError("solve_exact: right-hand side has length " + std::to_string(b.size()) + ", matrix has " +
                     std::to_string(a.rows()) + " rows");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto e = rref(aug);
  SolutionSet out;
  for (auto p : e.pivots)
    if (p == n) return out;  // a row 0 = 1
  out.feasible = true;
  out.particular = zero_vec(n);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) out.particular[e.pivots[i]] = e.reduced(i, n);
  out.kernel = kernel_basis(a);
  return out;
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  std::vector<RationalVec> a = m.row_list();
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InputError("inverse of a non-square matrix");
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw InputError("singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::optional<RationalVec> coordinates_in(const std::vector<RationalVec>& basis, const RationalVec& v) {
  if (basis.empty()) {
    if (is_zero(v)) return RationalVec{};
    return std::nullopt;
  }
  const auto sol = solve_exact(Matrix::from_rows(basis, v.size()).transpose(), v);
  if (!sol.feasible) return std::nullopt;
  return sol.particular;
}

std::vector<RationalVec> integer_kernel_basis(const Matrix& e) {
  const std::size_t n = e.cols();
  const std::size_t m = e.rows();
  std::vector<std::vector<Integer>> a(m, std::vector<Integer>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_integer(e(i, j))) throw InputError("integer_kernel_basis requires an integral matrix");
      a[i][j] = e(i, j).get_num();
    }
  // Unimodular column operations tracked in u: a_current = a_original * u.
  std::vector<std::vector<Integer>> u(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  auto col_combine = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < m; ++i) a[i][dst] -= q * a[i][src];
    for (std::size_t i = 0; i < n; ++i) u[i][dst] -= q * u[i][src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < m; ++i) std::swap(a[i][x], a[i][y]);
    for (std::size_t i = 0; i < n; ++i) std::swap(u[i][x], u[i][y]);
  };
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < m && pivot < n; ++r) {
    while (true) {
      std::size_t best = n;
      for (std::size_t c = pivot; c < n; ++c)
        if (a[r][c] != 0 && (best == n || abs(a[r][c]) < abs(a[r][best]))) best = c;
      if (best == n) break;
      col_swap(pivot, best);
      bool done = true;
      for (std::size_t c = pivot + 1; c < n; ++c) {
        if (a[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][c].get_mpz_t(), a[r][pivot].get_mpz_t());
        col_combine(c, pivot, q);
        if (a[r][c] != 0) done = false;
      }
      if (done) {
        ++pivot;
        break;
      }
    }
  }
  std::vector<RationalVec> basis;
  for (std::size_t c = pivot; c < n; ++c) {
    RationalVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rational(u[i][c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RationalVec> saturated_lattice_basis(const std::vector<RationalVec>& rows, std::size_t cols) {
  const auto span = row_space_basis(rows, cols);
  if (span.empty()) return {};
  // Equations cutting out the span, scaled to integers.
  auto eqs = kernel_basis(Matrix::from_rows(span, cols));
  if (eqs.empty()) {
    std::vector<RationalVec> std_basis;
    for (std::size_t i = 0; i < cols; ++i) std_basis.push_back(unit_vec(cols, i));
    return std_basis;
  }
  for (auto& q : eqs) q = primitive_direction(q);
  return integer_kernel_basis(Matrix::from_rows(eqs, cols));
}

}  // namespace symvar
