#include "betagap/analytics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <thread>

#include "betagap/correspond.hpp"
#include "betagap/error.hpp"

namespace betagap {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPoly& p) {
  return RatPoly(p.begin(), p.end());
}

// Quotient and remainder of a / b, b non-zero.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  RatPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt gcd_of(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

std::string term(const BigInt& c, std::size_t degree, bool first) {
  std::ostringstream os;
  BigInt mag = c < 0 ? BigInt(-c) : c;
  if (first) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (degree == 0 || mag != 1) os << mag;
  if (degree >= 1) os << 'r';
  if (degree >= 2) os << '^' << degree;
  return os.str();
}

std::string pretty_poly(const IntPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    out += term(p[i], i, first);
    first = false;
  }
  return out;
}

bool single_term(const IntPoly& p) {
  return std::count_if(p.begin(), p.end(), [](const BigInt& c) { return c != 0; }) <= 1;
}

}  // namespace

RationalFn::RationalFn(IntPoly num, IntPoly den) {
  betagap::trim(num);
  betagap::trim(den);
  if (den.empty()) throw std::domain_error("zero denominator");
  RatPoly n = to_rat(num), d = to_rat(den);
  if (!n.empty()) {
    RatPoly g = poly_gcd(n, d);
    n = divmod(n, g).first;
    d = divmod(d, g).first;
  } else {
    d = {1};
  }
  BigInt scale = 1;
  for (const RatPoly* p : {&n, &d})
    for (const Rational& c : *p) {
      BigInt den_c = boost::multiprecision::denominator(c);
      scale = scale / gcd_of(scale, den_c) * den_c;
    }
  IntPoly ni, di;
  for (const Rational& c : n) ni.push_back(boost::multiprecision::numerator(Rational(c * scale)));
  for (const Rational& c : d) di.push_back(boost::multiprecision::numerator(Rational(c * scale)));
  BigInt content = 0;
  for (const IntPoly* p : {&ni, &di})
    for (const BigInt& c : *p) content = gcd_of(content, c);
  auto lowest = std::find_if(di.begin(), di.end(), [](const BigInt& c) { return c != 0; });
  if (*lowest < 0) content = -content;
  for (BigInt& c : ni) c /= content;
  for (BigInt& c : di) c /= content;
  num_ = std::move(ni);
  den_ = std::move(di);
}

std::string poly_to_string(const IntPoly& p) {
  std::ostringstream os;
  os << '[';
  if (p.empty()) os << 0;
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ']';
  return os.str();
}

std::string RationalFn::to_string() const {
  return poly_to_string(num_) + " / " + poly_to_string(den_);
}

std::string RationalFn::pretty() const {
  std::string n = pretty_poly(num_);
  if (den_ == IntPoly{1}) return n;
  if (!single_term(num_)) n = "(" + n + ")";
  return n + "/(" + pretty_poly(den_) + ")";
}

RationalFn RationalFn::operator*(const RationalFn& other) const {
  return RationalFn(poly_mul(num_, other.num_), poly_mul(den_, other.den_));
}

RationalFn f_gap(const GapSet& s) {
  if (!s.is_sofic()) throw Error(ErrorCode::NotSofic, "f_S needs a sofic gap set");
  EPWord chi = s.indicator();
  IntPoly minus_f = unit_series_equation(chi);
  IntPoly f = poly_sub({}, minus_f);
  if (!chi.is_infinite()) return RationalFn(f, {1});
  return RationalFn(f, poly_sub({1}, monomial(chi.period().size())));
}

RationalFn zeta_gap(const GapSet& s) {
  RationalFn f = f_gap(s);
  RationalFn inverse(f.den(), f.num());
  if (s.is_finite()) return inverse;
  return inverse * RationalFn({1}, {1, -1});
}

RationalFn zeta_beta(const ParrySeq& s) {
  require_valid(s);
  if (!s.is_sofic()) throw Error(ErrorCode::NotSofic, "zeta needs a sofic beta-shift");
  if (s.is_full_shift()) return RationalFn({1}, {1, -2});
  RationalFn f = f_gap(ass_of_beta(s));
  return RationalFn(f.den(), f.num());
}

RationalFn zeta_beta_without_numerator(const ParrySeq& s) {
  require_valid(s);
  if (!s.is_sofic()) throw Error(ErrorCode::NotSofic, "zeta needs a sofic beta-shift");
  return RationalFn({1}, poly_sub({}, unit_series_equation(s.digits())));
}

std::string PnTable::to_json() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < counts.size(); ++i) os << (i ? "," : "") << counts[i];
  os << ']';
  return os.str();
}

namespace {

// Coefficients 0..n-1 of p'/p as a power series; p(0) != 0.
RatPoly log_derivative(const IntPoly& p, std::size_t n) {
  auto coeff = [&](std::size_t i) -> Rational { return i < p.size() ? Rational(p[i]) : Rational(0); };
  RatPoly q(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc = coeff(k + 1) * (k + 1);
    for (std::size_t i = 1; i <= k; ++i) acc -= coeff(i) * q[k - i];
    q[k] = acc / coeff(0);
  }
  return q;
}

}  // namespace

PnTable series_pn(const RationalFn& z, std::size_t n) {
  const IntPoly& num = z.num();
  const IntPoly& den = z.den();
  if (num.empty() || num[0] != den[0])
    throw Error(ErrorCode::NotAZeta, "a zeta function has constant term 1");
  RatPoly a = log_derivative(num, n), b = log_derivative(den, n);
  PnTable out;
  for (std::size_t k = 0; k < n; ++k) {
    Rational p = a[k] - b[k];
    if (boost::multiprecision::denominator(p) != 1 || p < 0)
      throw Error(ErrorCode::NotAZeta, "p_" + std::to_string(k + 1) + " = " + p.str() +
                                           " is not a non-negative integer");
    out.counts.push_back(boost::multiprecision::numerator(p));
  }
  return out;
}

namespace {

void check_length(std::size_t n) {
  if (n == 0) throw std::invalid_argument("period length must be positive");
  if (n > kMaxCountLength)
    throw Error(ErrorCode::NTooLarge, "brute force is limited to n <= 24");
}

template <typename Accept>
BigInt count_words(std::size_t n, unsigned jobs, Accept accept) {
  std::uint64_t total = std::uint64_t{1} << n;
  jobs = std::max(1u, std::min<unsigned>(jobs, 64));
  std::vector<std::uint64_t> partial(jobs, 0);
  auto work = [&](unsigned job) {
    std::uint64_t lo = total * job / jobs, hi = total * (job + 1) / jobs;
    std::uint64_t c = 0;
    for (std::uint64_t w = lo; w < hi; ++w) c += accept(w) ? 1 : 0;
    partial[job] = c;
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }
  return BigInt(std::accumulate(partial.begin(), partial.end(), std::uint64_t{0}));
}

}  // namespace

BigInt periodic_count(const ParrySeq& s, std::size_t n, unsigned jobs) {
  check_length(n);
  require_valid(s);
  EPWord bound = quasi_greedy(s);
  bool truncated = s.kind() == ParryKind::Truncated;
  std::size_t length;
  if (truncated) {
    if (s.horizon() < 2 * n)
      throw Error(ErrorCode::HorizonTooSmall, "counting period " + std::to_string(n) +
                                                  " needs horizon >= " + std::to_string(2 * n));
    length = s.horizon();
  } else {
    std::size_t p = bound.period().size();
    length = bound.preperiod().size() + std::lcm(n, p) + std::max(n, p);
  }
  std::vector<Letter> b(length);
  for (std::size_t i = 0; i < length; ++i) b[i] = bound.at(i);
  auto accept = [&](std::uint64_t w) {
    for (std::size_t start = 0; start < n; ++start) {
      std::size_t pos = start;
      bool decided = false;
      for (std::size_t t = 0; t < length; ++t) {
        Letter x = static_cast<Letter>((w >> pos) & 1u);
        if (x != b[t]) {
          if (x > b[t]) return false;
          decided = true;
          break;
        }
        if (++pos == n) pos = 0;
      }
      if (!decided && truncated)
        throw Error(ErrorCode::HorizonTooSmall, "comparison undecided within the horizon");
    }
    return true;
  };
  return count_words(n, jobs, accept);
}

BigInt periodic_count(const GapSet& s, std::size_t n, unsigned jobs) {
  check_length(n);
  if (s.kind() == GapKind::Truncated && s.horizon() < 2 * n)
    throw Error(ErrorCode::HorizonTooSmall, "counting period " + std::to_string(n) +
                                                " needs horizon >= " + std::to_string(2 * n));
  std::vector<bool> allowed(n);
  for (std::size_t g = 0; g < n; ++g) allowed[g] = s.contains(g);
  bool infinite = !s.is_finite();
  auto accept = [&](std::uint64_t w) {
    if (w == 0) return infinite;
    std::size_t first = static_cast<std::size_t>(std::countr_zero(w));
    std::size_t prev = first;
    for (std::size_t i = first + 1; i < n; ++i) {
      if ((w >> i) & 1u) {
        if (!allowed[i - prev - 1]) return false;
        prev = i;
      }
    }
    return static_cast<bool>(allowed[n - 1 - prev + first]);
  };
  return count_words(n, jobs, accept);
}

PnTable oracle_pn(const ParrySeq& s, std::size_t n, unsigned jobs) {
  PnTable out;
  out.source = PnTable::Source::Oracle;
  for (std::size_t k = 1; k <= n; ++k) out.counts.push_back(periodic_count(s, k, jobs));
  return out;
}

PnTable oracle_pn(const GapSet& s, std::size_t n, unsigned jobs) {
  PnTable out;
  out.source = PnTable::Source::Oracle;
  for (std::size_t k = 1; k <= n; ++k) out.counts.push_back(periodic_count(s, k, jobs));
  return out;
}

Bracket entropy_gap(const GapSet& s, const Rational& tol) {
  if (s.kind() == GapKind::Finite && s.size() < 2)
    throw Error(ErrorCode::TooSmall, "entropy needs |S| >= 2");
  EPWord chi = s.indicator();
  if (s.kind() != GapKind::Truncated) return log_bracket(root_in_unit_interval(unit_series_equation(chi), tol));
  if (s.members_upto(s.horizon()).size() < 2)
    throw Error(ErrorCode::TooSmall, "fewer than two elements lie within the horizon");
  Bracket low = root_in_unit_interval(unit_series_equation(chi), tol);
  Bracket high = root_in_unit_interval(unit_series_equation(EPWord::periodic(chi.preperiod(), {1})), tol);
  return log_bracket({low.lo, high.hi});
}

Bracket entropy_beta(const ParrySeq& s, const Rational& tol) {
  return log_bracket(beta_from_parry(s, tol));
}

CFValue xs_value(const GapSet& s, std::size_t depth) {
  CFValue out;
  out.quotients.push_back(s.d0());
  const EPWord& inc = s.increments();
  std::size_t available = inc.is_infinite() ? depth : std::min(depth, inc.length());
  for (std::size_t i = 0; i < available; ++i) out.quotients.push_back(inc.at(i));
  BigInt h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  for (Value a : out.quotients) {
    BigInt h = BigInt(a) * h_prev + h_prev2;
    BigInt k = BigInt(a) * k_prev + k_prev2;
    out.convergents.emplace_back(h, k);
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  out.exact = s.is_finite() && available == inc.length();
  if (out.exact) {
    const Rational& x = out.convergents.back();
    out.reciprocal_integer = x > 0 && boost::multiprecision::numerator(x) == 1;
  }
  return out;
}

CantorWitness cantor_witness(const GapSet& input, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::PrefixTooShort, "m must be at least 1");
  GapSet s = normalize(input);
  StarVerdict verdict = star_condition(s);
  if (!verdict.holds())
    throw Error(ErrorCode::NotInCantorSet, "the star condition fails: " + verdict.to_string(),
                verdict.index);
  EPWord d = inverse_parry_word(s);
  if (!d.is_infinite() && d.length() < m)
    throw Error(ErrorCode::PrefixTooShort, "only " + std::to_string(d.length()) +
                                               " increments are known");
  FiniteWord prefix = d.prefix(m);
  Letter top = 1 + *std::max_element(prefix.begin(), prefix.end());
  GapSet inside = GapSet::from_increments(0, EPWord::periodic(prefix, {top}));
  while (inside == s) inside = GapSet::from_increments(0, EPWord::periodic(prefix, {++top}));
  FiniteWord out_pre = prefix;
  out_pre.push_back(2);
  GapSet outside = GapSet::from_increments(0, EPWord::periodic(out_pre, {1}));
  CantorWitness w{inside, outside, star_condition(inside), star_condition(outside)};
  if (!w.inside_verdict.holds() || w.outside_verdict.holds())
    throw Error(ErrorCode::NotInCantorSet, "witness verification failed");
  return w;
}

}  // namespace betagap
