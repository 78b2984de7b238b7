#pragma once

// Expansions of 1 in base beta for beta in (1, 2]: representation, Parry
// validation, greedy expansion of a numeric beta, and beta recovery.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betagap/numeric.hpp"
#include "betagap/seqcore.hpp"

namespace betagap {

enum class ParryKind { Finite, EventuallyPeriodic, Truncated };

std::string_view parry_kind_name(ParryKind kind);

/// Candidate expansion of 1 over {0, 1} with a_1 = 1.
///
/// Finite words are stored as digits·0^∞, eventually periodic ones in
/// canonical EPWord form, and truncated ones as the known prefix a_1..a_H
/// (H = horizon). Validity against the Parry condition is a separate check.
class ParrySeq {
 public:
  /// a_1 ... a_n with a_n = 1; n >= 2 (the single digit `1` is beta = 1).
  static ParrySeq finite(FiniteWord digits);
  static ParrySeq eventually_periodic(FiniteWord pre, FiniteWord per);
  /// Known digits a_1..a_horizon; digits not listed up to the horizon are 0.
  static ParrySeq truncated(FiniteWord prefix, std::size_t horizon);
  /// Kind follows the word: period (0) means Finite.
  static ParrySeq from_word(const EPWord& word);

  /// `1,1`, `1(1,0)*`, `trunc:1,1,0,0,1,...@40`.
  static ParrySeq parse(std::string_view text);
  std::string to_string() const;

  ParryKind kind() const { return kind_; }
  /// The digit sequence; Truncated gives the finite prefix of length horizon.
  const EPWord& digits() const { return digits_; }
  std::size_t horizon() const { return horizon_; }

  /// 1-based digit a_i. Truncated throws past the horizon.
  Letter digit(std::size_t i) const;
  /// Preperiod length n and period length p (p = 0 for Finite; for Finite n
  /// is the number of digits).
  std::size_t preperiod_length() const;
  std::size_t period_length() const;

  /// 1^∞: the beta = 2 full shift under the a_1 = 1 convention.
  bool is_full_shift() const;
  /// Finite expansions and the full shift.
  bool is_sft() const { return kind_ == ParryKind::Finite || is_full_shift(); }
  bool is_sofic() const { return kind_ != ParryKind::Truncated; }

  bool operator==(const ParrySeq&) const = default;

 private:
  ParrySeq(ParryKind kind, EPWord digits, std::size_t horizon)
      : kind_(kind), digits_(std::move(digits)), horizon_(horizon) {}

  ParryKind kind_ = ParryKind::Finite;
  EPWord digits_;
  std::size_t horizon_ = 0;
};

/// Membership bound: (a_1 ... a_{n-1} (a_n - 1))^∞ for a finite expansion,
/// the sequence itself otherwise.
EPWord quasi_greedy(const ParrySeq& s);

struct ParryVerdict {
  enum class Status { Valid, InvalidAt, ValidToHorizon };
  Status status = Status::Valid;
  /// Failing shift k for InvalidAt, horizon for ValidToHorizon.
  std::size_t index = 0;

  bool ok() const { return status != Status::InvalidAt; }
  std::string to_string() const;
};

/// Checks shift(s, k) <= s for all k >= 1. A purely periodic word other than
/// 1^∞ satisfies the non-strict inequality only as the quasi-greedy form of a
/// finite expansion; it is rejected at its period.
ParryVerdict validate_parry(const ParrySeq& s);

/// Throws NotValidated unless validate_parry(s).ok().
void require_valid(const ParrySeq& s);

struct GreedyExpansion {
  FiniteWord digits;
  std::vector<bool> certain;
};

inline constexpr unsigned kDefaultGreedyPrecision = 40;

/// Greedy digits of 1 in base beta from the remainder recurrence
/// r_0 = 1, a_i = floor(beta r_{i-1}), r_i = beta r_{i-1} - a_i, evaluated in
/// interval arithmetic whose endpoints are rounded outward to `precision`
/// significant bits. When an interval straddles an integer the larger digit is
/// taken and flagged uncertain.
GreedyExpansion greedy_expand(std::string_view beta, std::size_t horizon,
                              unsigned precision = kDefaultGreedyPrecision);

/// Bracket of width <= tol around the root in (1, 2] of 1 = sum a_i x^-i.
/// Truncated sequences give the hull of the all-0 and all-1 completions.
Bracket beta_from_parry(const ParrySeq& s, const Rational& tol);

enum class BetaClass { SFT, StrictlySofic, NonSoficSynchronizedUnknown };

std::string_view beta_class_name(BetaClass c);

BetaClass classify_beta(const ParrySeq& s);

/// The polynomial E(r) whose root in [1/2, 1) is 1/x for the series
/// sum_{i>=1} w_{i-1} r^i = 1, where w is finite (zero fill) or eventually
/// periodic over {0, 1}. Shared with the gap-set entropy.
IntPoly unit_series_equation(const EPWord& w);

}  // namespace betagap
