#include "doctest.h"

#include <cmath>

#include "betagap/analytics.hpp"
#include "betagap/correspond.hpp"
#include "betagap/error.hpp"
#include "corpus.hpp"

using namespace betagap;

namespace {

GapSet gs(const char* text) { return GapSet::parse(text); }
ParrySeq ps(const char* text) { return ParrySeq::parse(text); }

RationalFn fn(IntPoly num, IntPoly den) { return RationalFn(std::move(num), std::move(den)); }

std::vector<BigInt> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

std::vector<BigInt> brute(const ParrySeq& s, std::size_t n) {
  std::vector<BigInt> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(periodic_count(s, k));
  return out;
}

std::vector<BigInt> brute(const GapSet& s, std::size_t n) {
  std::vector<BigInt> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(periodic_count(s, k));
  return out;
}

const RationalFn one_minus_r = fn({1, -1}, {1});

}  // namespace

TEST_CASE("RationalFn is canonical") {
  CHECK(fn({2}, {2, -2, -2}) == fn({1}, {1, -1, -1}));
  CHECK(fn({1, -1}, {1, -2, 1}) == fn({1}, {1, -1}));
  CHECK(fn({-1}, {-1, 1}).den()[0] > 0);
  CHECK(fn({1}, {1, -1, -1}).to_string() == "[1] / [1,-1,-1]");
  CHECK(fn({1}, {1, -1, -1}).pretty() == "1/(1 - r - r^2)");
}

TEST_CASE("zeta_gap examples") {
  CHECK(zeta_gap(gs("{0,1}")) == fn({1}, {1, -1, -1}));
  CHECK(zeta_gap(gs("{0,3}")) == fn({1}, {1, -1, 0, 0, -1}));
  CHECK(zeta_gap(gs("0;1,(2)*")) == fn({1, 0, -1}, poly_mul({1, -1}, {1, -1, -2, 1})));
  CHECK_THROWS_AS(zeta_gap(gs("trunc:squares@20")), Error);
}

TEST_CASE("zeta_beta examples") {
  CHECK(zeta_beta(ps("1,1")) == fn({1}, {1, -1, -1}));
  CHECK(zeta_beta(ps("1,1,0,1")) == fn({1}, {1, -1, -1, 0, -1}));
  CHECK(zeta_beta(ps("1(1,0)*")) == fn({1, 0, -1}, {1, -1, -2, 1}));
  CHECK(zeta_beta(ps("(1)*")) == fn({1}, {1, -2}));
  CHECK_THROWS_AS(zeta_beta(ps("1,0,1,1")), Error);
}

TEST_CASE("series_pn examples") {
  CHECK(series_pn(fn({1}, {1, -1, -1}), 4).counts == ints({1, 3, 4, 7}));
  CHECK(series_pn(fn({1}, {1, -1}), 3).counts == ints({1, 1, 1}));
  CHECK(series_pn(fn({1, 0, -1}, {1, -1, -2, 1}), 2).counts == ints({1, 3}));
  CHECK(series_pn(fn({1}, {1, -1, -1}), 8).counts == ints({1, 3, 4, 7, 11, 18, 29, 47}));
  try {
    series_pn(fn({1}, {1, 1}), 3);
    FAIL("expected NotAZeta");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAZeta);
  }
  CHECK_THROWS_AS(series_pn(fn({2}, {1, -1}), 3), Error);
  CHECK(series_pn(fn({1}, {1, -1, -1}), 3).to_json() == "[1,3,4]");
}

TEST_CASE("periodic_count examples") {
  CHECK(periodic_count(gs("0;1,(2)*"), 2) == 4);
  CHECK(periodic_count(ps("1(1,0)*"), 2) == 3);
  CHECK(periodic_count(ps("1,1"), 3) == 4);
  CHECK(periodic_count(gs("{0,1}"), 3) == 4);
  CHECK(periodic_count(ps("(1)*"), 5) == 32);
  CHECK_THROWS_AS(periodic_count(ps("1,1"), 25), Error);
  try {
    periodic_count(gs("trunc:squares@10"), 6);
    FAIL("expected HorizonTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HorizonTooSmall);
  }
}

TEST_CASE("periodic_count does not depend on the number of jobs") {
  for (const char* text : {"1,1,0,1", "1(1,0)*", "1,0,1,1,1"}) {
    ParrySeq s = ps(text);
    if (!validate_parry(s).ok()) continue;
    BigInt one = periodic_count(s, 16, 1);
    for (unsigned jobs : {2u, 3u, 8u}) CHECK(periodic_count(s, 16, jobs) == one);
  }
  GapSet g = gs("0;1,(2)*");
  CHECK(periodic_count(g, 15, 1) == periodic_count(g, 15, 5));
}

TEST_CASE("zeta of the SFT pairs coincide") {
  for (const ParrySeq& s : corpus::finite_parry(9)) {
    CAPTURE(s.to_string());
    CHECK(zeta_beta(s) == zeta_gap(ass_of_beta(s)));
  }
}

TEST_CASE("zeta of the strictly sofic pairs differ by 1 - r") {
  for (const ParrySeq& s : corpus::periodic_parry(4, 4)) {
    if (classify_beta(s) != BetaClass::StrictlySofic) continue;
    CAPTURE(s.to_string());
    CHECK(zeta_beta(s) == one_minus_r * zeta_gap(ass_of_beta(s)));
  }
}

TEST_CASE("series counts match the brute-force oracle") {
  const std::size_t n = 12;
  std::vector<ParrySeq> betas = corpus::finite_parry(8);
  for (const ParrySeq& s : corpus::periodic_parry(3, 3)) betas.push_back(s);
  for (const ParrySeq& s : betas) {
    CAPTURE(s.to_string());
    CHECK(series_pn(zeta_beta(s), n).counts == brute(s, n));
    GapSet g = ass_of_beta(s);
    CHECK(series_pn(zeta_gap(g), n).counts == brute(g, n));
  }
  for (const GapSet& g : corpus::periodic_sets({0, 1}, 1, 2, 3)) {
    CAPTURE(g.to_string());
    CHECK(series_pn(zeta_gap(g), n).counts == brute(g, n));
  }
  for (const GapSet& g : corpus::finite_sets(5)) {
    CAPTURE(g.to_string());
    CHECK(series_pn(zeta_gap(g), n).counts == brute(g, n));
  }
}

TEST_CASE("the numerator-free strictly sofic zeta disagrees with the oracle") {
  ParrySeq s = ps("1(1,0)*");
  CHECK(series_pn(zeta_beta_without_numerator(s), 2).counts == ints({1, 5}));
  CHECK(periodic_count(s, 2) == 3);
  CHECK(series_pn(zeta_beta(s), 2).counts == ints({1, 3}));
}

TEST_CASE("oracle_pn") {
  PnTable t = oracle_pn(ps("1(1,0)*"), 2);
  CHECK(t.counts == ints({1, 3}));
  CHECK(t.source == PnTable::Source::Oracle);
  CHECK(oracle_pn(gs("0;1,(2)*"), 2).counts == ints({2, 4}));
}

TEST_CASE("non-sofic count law") {
  std::vector<GapSet> sets{corpus::squares(40), corpus::primes_shifted(40)};
  for (const GapSet& g : sets) {
    CAPTURE(g.to_string());
    ParrySeq partner = ass_of_gap(g).parry;
    for (std::size_t n = 1; n <= 12; ++n) CHECK(periodic_count(g, n) == periodic_count(partner, n) + 1);
  }
}

TEST_CASE("entropy examples") {
  Bracket golden = entropy_gap(gs("{0,1}"));
  CHECK(golden.width() <= kDefaultTol);
  CHECK(std::fabs(static_cast<double>(golden.mid_value()) - 0.4812118250596) < 1e-9);

  Bracket cubic = entropy_gap(gs("0;1,(2)*"));
  double root = std::exp(static_cast<double>(cubic.mid_value()));
  CHECK(std::fabs(root * root * root - root * root - 2 * root + 1) < 1e-9);

  Bracket sq = entropy_gap(corpus::squares(40));
  CHECK(sq.width() <= Rational(1, 1'000'000));

  CHECK(entropy_beta(ps("1,1")).contains(golden.mid()));
  Bracket two = entropy_beta(ps("(1)*"));
  CHECK(std::fabs(static_cast<double>(two.mid_value()) - std::log(2.0)) < 1e-12);

  CHECK_THROWS_AS(entropy_gap(gs("{0}")), Error);
  CHECK_THROWS_AS(entropy_beta(ps("1,0,1,1")), Error);
}

TEST_CASE("entropies of ASS pairs agree") {
  Rational tol = 2 * kDefaultTol;
  std::vector<ParrySeq> betas = corpus::finite_parry(9);
  for (const ParrySeq& s : corpus::periodic_parry(3, 3)) betas.push_back(s);
  for (const ParrySeq& s : betas) {
    CAPTURE(s.to_string());
    Rational diff = entropy_beta(s).mid() - entropy_gap(ass_of_beta(s)).mid();
    CHECK(abs(diff) <= tol);
  }
}

TEST_CASE("xs_value examples") {
  CFValue a = xs_value(gs("{0,2,3}"), 5);
  CHECK(a.exact);
  CHECK(a.convergents.back() == Rational(1, 3));
  CHECK(a.reciprocal_integer);
  CHECK(a.convergents == std::vector<Rational>{0, Rational(1, 2), Rational(1, 3)});

  CFValue b = xs_value(gs("0;1,(2)*"), 12);
  CHECK_FALSE(b.exact);
  double target = std::sqrt(2.0) / 2;
  CHECK(std::fabs(static_cast<double>(to_long_double(b.convergents.back())) - target) < 1e-8);

  CFValue c = xs_value(gs("{0,1}"), 3);
  CHECK(c.convergents.back() == 1);
  CHECK(c.reciprocal_integer);
  CHECK_FALSE(xs_value(gs("{0,1,3}"), 4).reciprocal_integer);
}

TEST_CASE("convergents alternate around the limit") {
  CFValue v = xs_value(gs("0;1,(2,3)*"), 12);
  for (std::size_t k = 1; k + 1 < v.convergents.size(); ++k) {
    Rational left = v.convergents[k] - v.convergents[k - 1];
    Rational right = v.convergents[k + 1] - v.convergents[k];
    CHECK(left * right < 0);
    Rational gap = abs(right);
    CHECK(numerator(gap) == 1);
    CHECK(denominator(gap) == denominator(v.convergents[k]) * denominator(v.convergents[k + 1]));
  }
}

TEST_CASE("cantor_witness examples") {
  CantorWitness a = cantor_witness(gs("{0,1}"), 1);
  CHECK(a.inside == gs("0;2,(3)*"));
  CHECK(a.outside == gs("0;2,2,(1)*"));
  CHECK(a.inside_verdict.holds());
  CHECK_FALSE(a.outside_verdict.holds());

  CantorWitness b = cantor_witness(gs("0;1,(2)*"), 2);
  CHECK(b.inside == gs("0;1,2,(3)*"));
  CHECK(b.outside == gs("0;1,2,2,(1)*"));

  CantorWitness c = cantor_witness(corpus::squares(40), 3);
  CHECK(inverse_parry_word(c.inside).prefix(3) == FiniteWord{1, 3, 5});
  CHECK(inverse_parry_word(c.outside).prefix(3) == FiniteWord{1, 3, 5});
  CHECK(c.inside_verdict.holds());
  CHECK_FALSE(c.outside_verdict.holds());

  try {
    cantor_witness(corpus::squares(10), 8);
    FAIL("expected PrefixTooShort");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PrefixTooShort);
  }
  CHECK_THROWS_AS(cantor_witness(gs("{0,1}"), 0), Error);
  try {
    cantor_witness(gs("0;(2,1)*"), 1);
    FAIL("expected NotInCantorSet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInCantorSet);
  }
}

TEST_CASE("cantor witnesses are labeled correctly") {
  for (const GapSet& s : corpus::periodic_sets({0}, 2, 2, 3)) {
    if (!star_condition(s).holds()) continue;
    for (std::size_t m = 1; m <= 3; ++m) {
      CAPTURE(s.to_string());
      CantorWitness w = cantor_witness(s, m);
      CHECK(star_condition(w.inside).holds());
      CHECK_FALSE(star_condition(w.outside).holds());
      CHECK(w.inside != s);
      CHECK(w.outside != s);
    }
  }
}
