#include "symvar/lp.hpp"

#include <utility>

namespace symvar {

void LinearProgram::add_constraint(RationalVec coeffs, Relation rel, Rational rhs) {
  if (coeffs.size() != num_vars()) throw InputError("LP constraint has wrong number of coefficients");
  rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
}

void LinearProgram::set_objective(RationalVec coeffs) {
  if (coeffs.size() != num_vars()) throw InputError("LP objective has wrong number of coefficients");
  objective_ = std::move(coeffs);
}

namespace {

// Dense tableau over standard-form columns; last entry of each row is the rhs.
struct Tableau {
  std::vector<RationalVec> a;
  std::vector<std::size_t> basis;
  std::size_t cols = 0;

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / a[r][c];
    for (auto& q : a[r]) q *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
    }
    basis[r] = c;
  }

  // Minimizes cost . x over the columns flagged usable. Bland's rule; returns false if unbounded.
  bool minimize(const RationalVec& cost, const std::vector<bool>& usable) {
    while (true) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols && enter == cols; ++j) {
        if (!usable[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i][j] != 0) reduced -= cost[basis[i]] * a[i][j];
        if (reduced < 0) enter = j;
      }
      if (enter == cols) return true;
      std::size_t leave = a.size();
      Rational best;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i][enter] <= 0) continue;
        Rational ratio = a[i][cols] / a[i][enter];
        if (leave == a.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == a.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LinearProgram::Result LinearProgram::solve() const {
  const std::size_t n = num_vars();
  // Column layout: per variable one (nonneg) or two (free: plus, minus) columns, then slacks.
  std::vector<std::size_t> col_of(n);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    col_of[j] = cols;
    cols += nonneg_[j] ? 1 : 2;
  }
  const std::size_t var_cols = cols;
  std::size_t slack_count = 0;
  for (const auto& r : rows_)
    if (r.rel != Relation::Equal) ++slack_count;
  const std::size_t m = rows_.size();
  const std::size_t total = var_cols + slack_count + m;  // + artificials

  Tableau t;
  t.cols = total;
  t.a.assign(m, zero_vec(total + 1));
  t.basis.assign(m, 0);
  std::size_t slack = var_cols;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& r = rows_[i];
    auto& row = t.a[i];
    for (std::size_t j = 0; j < n; ++j) {
      row[col_of[j]] = r.coeffs[j];
      if (!nonneg_[j]) row[col_of[j] + 1] = -r.coeffs[j];
    }
    if (r.rel == Relation::LessEq) row[slack++] = 1;
    if (r.rel == Relation::GreaterEq) row[slack++] = -1;
    row[total] = r.rhs;
    if (row[total] < 0)
      for (auto& q : row) q = -q;
    const std::size_t art = var_cols + slack_count + i;
    row[art] = 1;
    t.basis[i] = art;
  }

  // Phase I
  RationalVec cost1 = zero_vec(total);
  for (std::size_t i = 0; i < m; ++i) cost1[var_cols + slack_count + i] = 1;
  std::vector<bool> usable(total, true);
  t.minimize(cost1, usable);
  Rational infeas = 0;
  for (std::size_t i = 0; i < m; ++i) infeas += cost1[t.basis[i]] * t.a[i][total];
  Result res;
  if (infeas != 0) {
    res.status = Status::Infeasible;
    return res;
  }
  // Drive artificials out of the basis; drop redundant rows.
  const std::size_t first_art = var_cols + slack_count;
  for (std::size_t i = 0; i < t.a.size();) {
    if (t.basis[i] < first_art) {
      ++i;
      continue;
    }
    std::size_t c = 0;
    while (c < first_art && t.a[i][c] == 0) ++c;
    if (c < first_art) {
      t.pivot(i, c);
      ++i;
    } else {
      t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  for (std::size_t c = first_art; c < total; ++c) usable[c] = false;

  // Phase II: maximize objective == minimize its negation.
  RationalVec cost2 = zero_vec(total);
  for (std::size_t j = 0; j < n; ++j) {
    cost2[col_of[j]] = -objective_[j];
    if (!nonneg_[j]) cost2[col_of[j] + 1] = objective_[j];
  }
  if (!t.minimize(cost2, usable)) {
    res.status = Status::Unbounded;
    return res;
  }
  RationalVec colval = zero_vec(total);
  for (std::size_t i = 0; i < t.a.size(); ++i) colval[t.basis[i]] = t.a[i][total];
  res.x = zero_vec(n);
  for (std::size_t j = 0; j < n; ++j) {
    res.x[j] = colval[col_of[j]];
    if (!nonneg_[j]) res.x[j] -= colval[col_of[j] + 1];
  }
  res.value = dot(objective_, res.x);
  res.status = Status::Optimal;
  return res;
}

std::optional<RationalVec> LinearProgram::feasible_point() const {
  LinearProgram p = *this;
  p.objective_ = zero_vec(num_vars());
  auto r = p.solve();
  if (r.status != Status::Optimal) return std::nullopt;
  return r.x;
}

}  // namespace symvar
