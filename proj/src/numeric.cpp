#include "betagap/numeric.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "betagap/error.hpp"

namespace betagap {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

IntPoly monomial(std::size_t k, const BigInt& coefficient) {
  IntPoly out(k + 1);
  out[k] = coefficient;
  trim(out);
  return out;
}

int poly_degree(const IntPoly& p) {
  return static_cast<int>(p.size()) - 1;
}

long double Bracket::mid_value() const {
  return to_long_double(mid());
}

Rational parse_rational(std::string_view text) {
  auto fail = [&](std::size_t pos) -> Error {
    return Error(ErrorCode::SyntaxError,
                 "invalid number '" + std::string(text) + "'", pos);
  };
  if (text.empty()) throw fail(0);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw fail(slash + 1);
    return num / den;
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  BigInt mantissa = 0;
  long long scale = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_point) --scale;
      any_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw fail(i);
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw fail(i);
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-'))
      exp_negative = text[i++] == '-';
    if (i >= text.size()) throw fail(i);
    long long exponent = 0;
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw fail(i);
      exponent = exponent * 10 + (text[i] - '0');
      if (exponent > 100000) throw fail(i);
    }
    scale += exp_negative ? -exponent : exponent;
  }
  Rational value(mantissa);
  BigInt ten_power = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::llabs(scale)));
  if (scale >= 0)
    value *= ten_power;
  else
    value /= ten_power;
  return negative ? Rational(-value) : value;
}

std::string to_decimal(const Rational& x, int digits) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  BigInt whole = num / den;
  BigInt rest = num % den;
  std::string out = sign + whole.str();
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rest *= 10;
      out += static_cast<char>('0' + static_cast<int>(rest / den));
      rest %= den;
    }
  }
  return out;
}

Rational exact_rational(long double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  if (x == 0) return 0;
  bool negative = x < 0;
  int exponent = 0;
  long double fraction = std::frexp(std::fabs(x), &exponent);
  // 64 mantissa bits cover x87 extended precision; fraction < 1 so this fits.
  auto mantissa = static_cast<unsigned long long>(std::ldexp(fraction, 64));
  Rational out{BigInt(mantissa)};
  int shift = exponent - 64;
  if (shift >= 0)
    out *= Rational(BigInt(1) << shift);
  else
    out /= Rational(BigInt(1) << (-shift));
  return negative ? Rational(-out) : out;
}

long double to_long_double(const Rational& x, int dir, int ulps) {
  long double value = x.convert_to<long double>();
  for (int i = 0; i < ulps; ++i) {
    value = std::nextafter(value, dir < 0 ? -HUGE_VALL : HUGE_VALL);
  }
  return value;
}

int sign_at(const IntPoly& p, const BigInt& u, const BigInt& v) {
  if (p.empty()) return 0;
  std::size_t degree = p.size() - 1;
  BigInt acc = p[degree];
  BigInt v_power = 1;
  for (std::size_t i = degree; i-- > 0;) {
    v_power *= v;
    acc = acc * u + p[i] * v_power;
  }
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

Bracket root_in_unit_interval(const IntPoly& equation, const Rational& tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  // x = m / 2^k, r = 1/x = 2^k / m.
  int at_two = sign_at(equation, 1, 2);
  if (at_two == 0) return {2, 2};
  if (at_two > 0) throw std::domain_error("root lies above 2");
  BigInt lo_num = 1, hi_num = 2;
  unsigned k = 0;
  while (Rational(hi_num - lo_num, BigInt(1) << k) > tol) {
    lo_num <<= 1;
    hi_num <<= 1;
    ++k;
    BigInt mid = (lo_num + hi_num) / 2;
    int s = sign_at(equation, BigInt(1) << k, mid);
    if (s == 0) {
      Rational x(mid, BigInt(1) << k);
      return {x, x};
    }
    if (s > 0)
      lo_num = mid;  // E(1/x) > 0 means x is below the root
    else
      hi_num = mid;
  }
  return {Rational(lo_num, BigInt(1) << k), Rational(hi_num, BigInt(1) << k)};
}

Bracket log_bracket(const Bracket& x) {
  if (x.lo <= 0) throw std::domain_error("log of non-positive bracket");
  long double lo = std::log(to_long_double(x.lo, -1, 1));
  long double hi = std::log(to_long_double(x.hi, +1, 1));
  lo = std::nextafter(std::nextafter(lo, -HUGE_VALL), -HUGE_VALL);
  hi = std::nextafter(std::nextafter(hi, HUGE_VALL), HUGE_VALL);
  if (x.lo == 1) lo = 0;
  return {exact_rational(lo), exact_rational(hi)};
}

}  // namespace betagap
