#pragma once

// Entropy, zeta functions, periodic-point counts and the continued-fraction
// coordinate of gap sets.

#include <cstddef>
#include <string>
#include <vector>

#include "betagap/beta.hpp"
#include "betagap/gaps.hpp"
#include "betagap/numeric.hpp"

namespace betagap {

inline const Rational kDefaultTol{1, 1'000'000'000'000};

/// num / den in lowest terms over Q, scaled to primitive integer
/// coefficients with den(0) > 0.
class RationalFn {
 public:
  RationalFn(IntPoly num, IntPoly den);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  /// `[1] / [1,-1,-1]`: ascending coefficient lists.
  std::string to_string() const;
  /// `1/(1 - r - r^2)`
  std::string pretty() const;

  RationalFn operator*(const RationalFn& other) const;
  bool operator==(const RationalFn&) const = default;

 private:
  IntPoly num_;
  IntPoly den_;
};

std::string poly_to_string(const IntPoly& p);

/// 1 - sum_{s in S} r^{s+1} as a rational function (geometric tail summed).
RationalFn f_gap(const GapSet& s);

/// 1/f for finite S, 1/((1 - r) f) for infinite S.
RationalFn zeta_gap(const GapSet& s);
/// 1/f_S with S the associated gap set; the full shift gives 1/(1 - 2r).
RationalFn zeta_beta(const ParrySeq& s);
/// The strictly sofic formula without the (1 - r^p) numerator. Kept as a
/// negative control: its counts disagree with brute force.
RationalFn zeta_beta_without_numerator(const ParrySeq& s);

struct PnTable {
  enum class Source { Series, Oracle };
  std::vector<BigInt> counts;  // p_1..p_N
  Source source = Source::Series;

  std::string to_json() const;
};

/// p_n = n [r^n] log z. Throws NotAZeta unless z(0) = 1 and every p_n is a
/// non-negative integer.
PnTable series_pn(const RationalFn& z, std::size_t n);

inline constexpr std::size_t kMaxCountLength = 24;

/// Brute-force number of w in {0,1}^n with w^∞ in the shift. `jobs` > 1
/// splits the words across threads.
BigInt periodic_count(const ParrySeq& s, std::size_t n, unsigned jobs = 1);
BigInt periodic_count(const GapSet& s, std::size_t n, unsigned jobs = 1);

/// oracle counts p_1..p_n as a table
PnTable oracle_pn(const ParrySeq& s, std::size_t n, unsigned jobs = 1);
PnTable oracle_pn(const GapSet& s, std::size_t n, unsigned jobs = 1);

/// Bracket around log λ, λ the root in (1, 2] of sum_{s in S} x^{-(s+1)} = 1.
Bracket entropy_gap(const GapSet& s, const Rational& tol = kDefaultTol);
Bracket entropy_beta(const ParrySeq& s, const Rational& tol = kDefaultTol);

struct CFValue {
  std::vector<Value> quotients;       // d_0, d_1, ...
  std::vector<Rational> convergents;  // c_0, c_1, ...
  /// The expansion ended: the last convergent is x_S itself.
  bool exact = false;
  /// x_S is exactly 1/n for some n >= 1.
  bool reciprocal_integer = false;
};

/// Convergents c_0..c_depth of [d_0; d_1, d_2, ...] from the raw increments.
CFValue xs_value(const GapSet& s, std::size_t depth);

struct CantorWitness {
  GapSet inside;
  GapSet outside;
  StarVerdict inside_verdict;
  StarVerdict outside_verdict;
};

/// Neighbours of S sharing the first m letters of its inverse-Parry word:
/// `inside` continues with H^∞ (H above every prefix letter) and satisfies
/// the star condition, `outside` continues with 2 1^∞ and does not.
CantorWitness cantor_witness(const GapSet& s, std::size_t m);

}  // namespace betagap
