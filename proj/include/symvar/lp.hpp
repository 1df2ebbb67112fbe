#pragma once

#include <optional>
#include <vector>

#include "symvar/rational.hpp"

namespace symvar {

enum class Relation { LessEq, GreaterEq, Equal };

/// Small exact linear program: variables are free unless marked nonnegative.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars) : nonneg_(num_vars, false), objective_(num_vars, Rational(0)) {}

  std::size_t num_vars() const { return nonneg_.size(); }
  void set_nonnegative(std::size_t var, bool flag = true) { nonneg_.at(var) = flag; }
  void add_constraint(RationalVec coeffs, Relation rel, Rational rhs);
  /// Maximize objective . x (defaults to the zero objective, i.e. pure feasibility).
  void set_objective(RationalVec coeffs);

  enum class Status { Optimal, Infeasible, Unbounded };
  struct Result {
    Status status = Status::Infeasible;
    RationalVec x;
    Rational value = 0;
  };
  Result solve() const;

  /// Convenience: a feasible point, if any.
  std::optional<RationalVec> feasible_point() const;

 private:
  struct Row {
    RationalVec coeffs;
    Relation rel;
    Rational rhs;
  };
  std::vector<bool> nonneg_;
  std::vector<Row> rows_;
  RationalVec objective_;
};

}  // namespace symvar
