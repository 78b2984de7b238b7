#pragma once

// Exact integer/rational arithmetic shared by the beta, gap and analytics
// modules, plus certified brackets for real roots.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace betagap {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer polynomial, coefficients in ascending degree. Trailing zeros are
/// trimmed by every operation below, so the zero polynomial is empty.
using IntPoly = std::vector<BigInt>;

void trim(IntPoly& p);
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
/// r^k
IntPoly monomial(std::size_t k, const BigInt& coefficient = 1);
int poly_degree(const IntPoly& p);  // -1 for the zero polynomial

/// Closed real interval with exact rational endpoints.
struct Bracket {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool overlaps(const Bracket& other) const {
    return lo <= other.hi && other.lo <= hi;
  }
  long double mid_value() const;
};

/// Parses `1.5`, `-2`, `1e-12`, `2.5E3` or `3/2` exactly.
Rational parse_rational(std::string_view text);

/// Decimal rendering truncated toward zero after `digits` fractional digits.
std::string to_decimal(const Rational& x, int digits);

/// Exact value of a finite long double.
Rational exact_rational(long double x);

/// Nearest long double, then nudged `ulps` steps down (dir < 0) or up.
long double to_long_double(const Rational& x, int dir = 0, int ulps = 0);

/// Sign of p(u/v) for v > 0, computed exactly by homogeneous Horner.
int sign_at(const IntPoly& p, const BigInt& u, const BigInt& v);

/// Bisection for the unique x in [1, 2] with E(1/x) = 0, where E changes sign
/// exactly once on r in [1/2, 1), is positive near r = 1 and non-positive at
/// r = 1/2. Bisection runs on dyadic points until the width is <= tol; an
/// exact hit collapses the bracket.
Bracket root_in_unit_interval(const IntPoly& equation, const Rational& tol);

/// Outward-rounded bracket of log over a positive bracket.
Bracket log_bracket(const Bracket& x);

}  // namespace betagap
