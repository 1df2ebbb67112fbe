#include "symvar/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace symvar {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw InputError("empty rational literal");
  auto valid_int = [](std::string_view t) {
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.find_first_of("+-") != std::string::npos)
    throw InputError("malformed rational literal '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num, 10), d(den, 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const RationalVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  os << ')';
  return os.str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

RationalVec zero_vec(std::size_t dim) { return RationalVec(dim, Rational(0)); }

RationalVec unit_vec(std::size_t dim, std::size_t i) {
  RationalVec v(dim, Rational(0));
  v.at(i) = 1;
  return v;
}

bool is_zero(const RationalVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

namespace {
void check_same(const RationalVec& a, const RationalVec& b) {
  if (a.size() != b.size())
    throw InputError("dimension mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}
}  // namespace

Rational dot(const RationalVec& a, const RationalVec& b) {
  check_same(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVec add(const RationalVec& a, const RationalVec& b) {
  check_same(a, b);
  RationalVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RationalVec sub(const RationalVec& a, const RationalVec& b) {
  check_same(a, b);
  RationalVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RationalVec scale(const RationalVec& a, const Rational& s) {
  RationalVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

RationalVec negate(const RationalVec& a) { return scale(a, Rational(-1)); }

RationalVec axpy(const RationalVec& a, const Rational& s, const RationalVec& b) {
  check_same(a, b);
  RationalVec r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += s * b[i];
  return r;
}

RationalVec primitive_direction(const RationalVec& v) {
  Integer lcm_den = 1;
  for (const auto& q : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> ints(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) throw InputError("primitive_direction of the zero vector");
  RationalVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(ints[i] / g);
  return r;
}

std::strong_ordering lex_compare(const RationalVec& a, const RationalVec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

bool positively_proportional(const RationalVec& a, const RationalVec& b) {
  check_same(a, b);
  if (is_zero(a) || is_zero(b)) return is_zero(a) && is_zero(b);
  Rational t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] == 0) != (b[i] == 0)) return false;
    if (a[i] == 0) continue;
    Rational r = a[i] / b[i];
    if (t == 0) {
      if (r <= 0) return false;
      t = r;
    } else if (r != t) {
      return false;
    }
  }
  return true;
}

}  // namespace symvar
