#include "betagap/beta.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "betagap/error.hpp"

namespace betagap {

std::string_view parry_kind_name(ParryKind kind) {
  switch (kind) {
    case ParryKind::Finite: return "Finite";
    case ParryKind::EventuallyPeriodic: return "EventuallyPeriodic";
    case ParryKind::Truncated: return "Truncated";
  }
  return "?";
}

std::string_view beta_class_name(BetaClass c) {
  switch (c) {
    case BetaClass::SFT: return "SFT";
    case BetaClass::StrictlySofic: return "StrictlySofic";
    case BetaClass::NonSoficSynchronizedUnknown: return "NonSoficSynchronizedUnknown";
  }
  return "?";
}

namespace {

void check_binary_digits(const FiniteWord& digits) {
  for (Letter d : digits) {
    if (d > 1) throw Error(ErrorCode::BetaOutOfRange, "digits must be 0 or 1 for beta in (1, 2]");
  }
}

void check_leading_one(Letter first) {
  if (first != 1) throw Error(ErrorCode::BetaOutOfRange, "a_1 must be 1 for beta in (1, 2]");
}

}  // namespace

ParrySeq ParrySeq::finite(FiniteWord digits) {
  if (digits.empty()) throw Error(ErrorCode::BetaOutOfRange, "empty expansion");
  check_binary_digits(digits);
  check_leading_one(digits.front());
  if (digits.back() != 1)
    throw Error(ErrorCode::BetaOutOfRange, "a finite expansion must end in 1");
  if (digits.size() == 1) throw Error(ErrorCode::BetaOutOfRange, "expansion `1` is beta = 1");
  return ParrySeq(ParryKind::Finite, EPWord::filled(std::move(digits), 0), 0);
}

ParrySeq ParrySeq::eventually_periodic(FiniteWord pre, FiniteWord per) {
  check_binary_digits(pre);
  check_binary_digits(per);
  return from_word(EPWord::periodic(std::move(pre), std::move(per)));
}

ParrySeq ParrySeq::from_word(const EPWord& word) {
  if (!word.is_infinite()) return finite(word.preperiod());
  check_binary_digits(word.preperiod());
  check_binary_digits(word.period());
  if (word.period() == FiniteWord{0}) return finite(word.preperiod());
  check_leading_one(word.at(0));
  return ParrySeq(ParryKind::EventuallyPeriodic, word, 0);
}

ParrySeq ParrySeq::truncated(FiniteWord prefix, std::size_t horizon) {
  if (horizon == 0) throw Error(ErrorCode::HorizonTooSmall, "horizon must be positive");
  if (prefix.size() > horizon)
    throw Error(ErrorCode::HorizonTooSmall, "more digits listed than the horizon covers");
  if (prefix.empty()) throw Error(ErrorCode::BetaOutOfRange, "empty expansion");
  check_binary_digits(prefix);
  check_leading_one(prefix.front());
  prefix.resize(horizon, 0);
  return ParrySeq(ParryKind::Truncated, EPWord::finite(std::move(prefix)), horizon);
}

ParrySeq ParrySeq::parse(std::string_view text) {
  constexpr std::string_view kTrunc = "trunc:";
  if (text.substr(0, kTrunc.size()) == kTrunc) {
    std::string_view body = text.substr(kTrunc.size());
    auto at = body.rfind('@');
    if (at == std::string_view::npos)
      throw Error(ErrorCode::SyntaxError, "expected '@horizon' in truncated expansion",
                  kTrunc.size() + body.size());
    std::string_view list = body.substr(0, at);
    std::string_view horizon_text = body.substr(at + 1);
    if (list.size() >= 4 && list.substr(list.size() - 4) == ",...") list.remove_suffix(4);
    else if (list.size() >= 3 && list.substr(list.size() - 3) == "...") list.remove_suffix(3);
    EPWord digits;
    try {
      digits = EPWord::parse(list);
    } catch (const Error& e) {
      throw Error(ErrorCode::SyntaxError, e.what(), kTrunc.size() + e.index());
    }
    if (digits.is_infinite())
      throw Error(ErrorCode::SyntaxError, "a truncated expansion has no period", kTrunc.size());
    std::size_t horizon = 0;
    if (horizon_text.empty())
      throw Error(ErrorCode::SyntaxError, "expected horizon after '@'", kTrunc.size() + at + 1);
    for (std::size_t i = 0; i < horizon_text.size(); ++i) {
      char c = horizon_text[i];
      if (!std::isdigit(static_cast<unsigned char>(c)) || horizon > 1'000'000)
        throw Error(ErrorCode::SyntaxError, "expected horizon digits", kTrunc.size() + at + 1 + i);
      horizon = horizon * 10 + static_cast<std::size_t>(c - '0');
    }
    return truncated(digits.preperiod(), horizon);
  }
  return from_word(EPWord::parse(text));
}

std::string ParrySeq::to_string() const {
  switch (kind_) {
    case ParryKind::Finite:
      return EPWord::finite(digits_.preperiod()).to_string();
    case ParryKind::EventuallyPeriodic:
      return digits_.to_string();
    case ParryKind::Truncated: {
      FiniteWord listed = digits_.preperiod();
      while (listed.size() > 1 && listed.back() == 0) listed.pop_back();
      return "trunc:" + EPWord::finite(listed).to_string() + ",...@" + std::to_string(horizon_);
    }
  }
  return {};
}

Letter ParrySeq::digit(std::size_t i) const {
  if (i == 0) throw std::out_of_range("digits are 1-based");
  if (kind_ == ParryKind::Truncated && i > horizon_)
    throw Error(ErrorCode::HorizonTooSmall, "digit " + std::to_string(i) + " lies past the horizon");
  return digits_.at(i - 1);
}

std::size_t ParrySeq::preperiod_length() const {
  return kind_ == ParryKind::Truncated ? horizon_ : digits_.preperiod().size();
}

std::size_t ParrySeq::period_length() const {
  return kind_ == ParryKind::EventuallyPeriodic ? digits_.period().size() : 0;
}

bool ParrySeq::is_full_shift() const {
  return kind_ == ParryKind::EventuallyPeriodic && digits_.preperiod().empty() &&
         digits_.period() == FiniteWord{1};
}

EPWord quasi_greedy(const ParrySeq& s) {
  if (s.kind() != ParryKind::Finite) return s.digits();
  FiniteWord block = s.digits().preperiod();
  block.back() -= 1;
  return EPWord::periodic({}, std::move(block));
}

std::string ParryVerdict::to_string() const {
  switch (status) {
    case Status::Valid: return "Valid";
    case Status::InvalidAt: return "InvalidAt(" + std::to_string(index) + ")";
    case Status::ValidToHorizon: return "ValidToHorizon(" + std::to_string(index) + ")";
  }
  return "?";
}

ParryVerdict validate_parry(const ParrySeq& s) {
  using Status = ParryVerdict::Status;
  const EPWord& a = s.digits();
  if (s.kind() == ParryKind::Truncated) {
    std::size_t h = s.horizon();
    for (std::size_t k = 1; k < h; ++k) {
      for (std::size_t j = 0; k + j < h; ++j) {
        Letter shifted = a.at(k + j), original = a.at(j);
        if (shifted > original) return {Status::InvalidAt, k};
        if (shifted < original) break;
      }
    }
    return {Status::ValidToHorizon, h};
  }
  // Shifts past n + p repeat earlier ones.
  std::size_t last = a.preperiod().size() + a.period().size();
  for (std::size_t k = 1; k <= last; ++k) {
    if (lex_compare(shift(a, k), a) == Ordering::Greater) return {Status::InvalidAt, k};
  }
  if (s.kind() == ParryKind::EventuallyPeriodic && a.preperiod().empty() && !s.is_full_shift())
    return {Status::InvalidAt, a.period().size()};
  return {Status::Valid, 0};
}

void require_valid(const ParrySeq& s) {
  ParryVerdict v = validate_parry(s);
  if (!v.ok())
    throw Error(ErrorCode::NotValidated,
                s.to_string() + " fails the Parry condition: " + v.to_string(), v.index);
}

namespace {

std::size_t msb(const BigInt& x) {
  return boost::multiprecision::msb(x);
}

// floor(log2 q) for q > 0.
long long floor_log2(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  long long t = static_cast<long long>(msb(num)) - static_cast<long long>(msb(den));
  bool at_least = t >= 0 ? num >= (den << static_cast<unsigned>(t))
                         : (num << static_cast<unsigned>(-t)) >= den;
  return at_least ? t : t - 1;
}

// Rounds q to `bits` significant bits, downward (dir < 0) or upward.
Rational round_bits(const Rational& q, unsigned bits, int dir) {
  if (q == 0) return q;
  if (q < 0) return -round_bits(-q, bits, -dir);
  long long e = static_cast<long long>(bits) - 1 - floor_log2(q);
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  if (e >= 0)
    num <<= static_cast<unsigned>(e);
  else
    den <<= static_cast<unsigned>(-e);
  BigInt quotient = num / den;
  if (dir > 0 && quotient * den != num) quotient += 1;
  Rational out(quotient);
  if (e >= 0)
    out /= Rational(BigInt(1) << static_cast<unsigned>(e));
  else
    out *= Rational(BigInt(1) << static_cast<unsigned>(-e));
  return out;
}

BigInt floor_of(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt f = num / den;
  if (num < 0 && f * den != num) f -= 1;
  return f;
}

}  // namespace

GreedyExpansion greedy_expand(std::string_view beta_text, std::size_t horizon, unsigned precision) {
  if (horizon == 0) throw Error(ErrorCode::HorizonTooSmall, "horizon must be at least 1");
  if (precision < 2) throw Error(ErrorCode::PrecisionExhausted, "precision below 2 bits");
  Rational beta = parse_rational(beta_text);
  if (beta <= 1 || beta >= 2)
    throw Error(ErrorCode::BetaOutOfRange,
                "beta must lie in (1, 2); beta = 2 is represented as the expansion (1)*");
  Rational beta_lo = round_bits(beta, precision, -1);
  Rational beta_hi = round_bits(beta, precision, +1);
  Rational r_lo = 1, r_hi = 1;
  GreedyExpansion out;
  for (std::size_t i = 0; i < horizon; ++i) {
    Rational t_lo = round_bits(beta_lo * r_lo, precision, -1);
    Rational t_hi = round_bits(beta_hi * r_hi, precision, +1);
    if (t_hi - t_lo >= 1)
      throw Error(ErrorCode::PrecisionExhausted,
                  "remainder interval too wide at digit " + std::to_string(i + 1), i + 1);
    // beta < 2 and r < 1, so the true digit is at most 1.
    BigInt d_lo = std::min(floor_of(t_lo), BigInt(1));
    BigInt d_hi = std::min(floor_of(t_hi), BigInt(1));
    Rational digit(d_hi);
    out.digits.push_back(static_cast<Letter>(d_hi));
    out.certain.push_back(d_lo == d_hi);
    r_lo = std::max(Rational(0), round_bits(t_lo - digit, precision, -1));
    r_hi = std::min(Rational(1), round_bits(t_hi - digit, precision, +1));
  }
  return out;
}

IntPoly unit_series_equation(const EPWord& w) {
  // sum_{i>=1} w_{i-1} r^i = 1
  auto series = [](const FiniteWord& letters, std::size_t offset) {
    IntPoly p(letters.size() + offset + 1);
    for (std::size_t i = 0; i < letters.size(); ++i) p[i + offset + 1] = letters[i];
    trim(p);
    return p;
  };
  const FiniteWord& pre = w.preperiod();
  const FiniteWord& per = w.period();
  if (!w.is_infinite() || per == FiniteWord{0}) return poly_sub(series(pre, 0), {1});
  // P(r)(1 - r^p) + r^n Q(r) - (1 - r^p)
  IntPoly one_minus = poly_sub({1}, monomial(per.size()));
  IntPoly lhs = poly_add(poly_mul(series(pre, 0), one_minus), series(per, pre.size()));
  return poly_sub(lhs, one_minus);
}

Bracket beta_from_parry(const ParrySeq& s, const Rational& tol) {
  require_valid(s);
  if (s.kind() != ParryKind::Truncated) return root_in_unit_interval(unit_series_equation(s.digits()), tol);
  const FiniteWord& known = s.digits().preperiod();
  Bracket low = root_in_unit_interval(unit_series_equation(EPWord::finite(known)), tol);
  Bracket high = root_in_unit_interval(unit_series_equation(EPWord::periodic(known, {1})), tol);
  return {low.lo, high.hi};
}

BetaClass classify_beta(const ParrySeq& s) {
  switch (s.kind()) {
    case ParryKind::Finite: return BetaClass::SFT;
    case ParryKind::EventuallyPeriodic:
      return s.is_full_shift() ? BetaClass::SFT : BetaClass::StrictlySofic;
    case ParryKind::Truncated: return BetaClass::NonSoficSynchronizedUnknown;
  }
  return BetaClass::NonSoficSynchronizedUnknown;
}

}  // namespace betagap
