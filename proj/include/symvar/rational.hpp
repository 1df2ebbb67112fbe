#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symvar {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense exact vector. Coordinates are always canonicalized rationals.
using RationalVec = std::vector<Rational>;

/// Errors raised for malformed caller input (bad dimensions, unknown ids, parse failures).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Errors raised when a mathematical precondition of an operation fails.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const RationalVec& v);

inline int sign(const Rational& q) { return sgn(q); }
bool is_integer(const Rational& q);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

RationalVec zero_vec(std::size_t dim);
RationalVec unit_vec(std::size_t dim, std::size_t i);
bool is_zero(const RationalVec& v);
Rational dot(const RationalVec& a, const RationalVec& b);
RationalVec add(const RationalVec& a, const RationalVec& b);
RationalVec sub(const RationalVec& a, const RationalVec& b);
RationalVec scale(const RationalVec& a, const Rational& s);
RationalVec negate(const RationalVec& a);
/// a + s*b
RationalVec axpy(const RationalVec& a, const Rational& s, const RationalVec& b);

/// Scales v to the unique primitive integer vector on the same ray (v != 0).
RationalVec primitive_direction(const RationalVec& v);
/// Lexicographic three-way comparison of equal-length vectors.
std::strong_ordering lex_compare(const RationalVec& a, const RationalVec& b);
struct LexLess {
  bool operator()(const RationalVec& a, const RationalVec& b) const { return lex_compare(a, b) < 0; }
};

/// True iff a = t*b for some rational t > 0.
bool positively_proportional(const RationalVec& a, const RationalVec& b);

}  // namespace symvar
