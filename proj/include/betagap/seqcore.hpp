#pragma once

// Finite and eventually periodic words over small non-negative integers.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace betagap {

using Letter = std::uint32_t;
using FiniteWord = std::vector<Letter>;

enum class Ordering { Less, Equal, Greater };

std::string_view ordering_name(Ordering order);

/// Smallest q with w = (w_0 ... w_{q-1})^{|w|/q}. Requires w non-empty.
std::size_t least_period(std::span<const Letter> w);
bool is_primitive(std::span<const Letter> w);

FiniteWord repeat(std::span<const Letter> block, std::size_t times);

/// An eventually periodic word pre·per^∞, or a finite word when the period is
/// empty. Always held in canonical form: the period is primitive and the
/// preperiod is as short as possible, so two infinite words are equal exactly
/// when their representations are.
class EPWord {
 public:
  EPWord() = default;

  /// A finite word; it is never implicitly extended.
  static EPWord finite(FiniteWord letters);
  /// letters·fill^∞, e.g. a terminating expansion followed by zeros.
  static EPWord filled(FiniteWord letters, Letter fill);
  /// pre·per^∞; `per` must be non-empty.
  static EPWord periodic(FiniteWord pre, FiniteWord per);

  /// Text form `pre(per)*` with comma-separated letters, e.g. `1(1,0)*`,
  /// `1,1`, `(2,1)*`, `1,(2)*`.
  static EPWord parse(std::string_view text);
  /// `separator` goes between a non-empty preperiod and the period, e.g. ","
  /// for `1,(2)*`.
  std::string to_string(std::string_view separator = "") const;

  const FiniteWord& preperiod() const { return pre_; }
  const FiniteWord& period() const { return per_; }
  bool is_infinite() const { return !per_.empty(); }
  /// Number of letters of a finite word.
  std::size_t length() const { return pre_.size(); }

  /// Letter at 0-based position i; throws std::out_of_range past the end of
  /// a finite word.
  Letter at(std::size_t i) const;
  /// First min(n, length) letters.
  FiniteWord prefix(std::size_t n) const;

  bool operator==(const EPWord&) const = default;

 private:
  EPWord(FiniteWord pre, FiniteWord per) : pre_(std::move(pre)), per_(std::move(per)) {}
  void canonicalize();

  FiniteWord pre_;
  FiniteWord per_;
};

/// Number of leading positions that decide lex_compare(u, v) for infinite
/// words: |pre_u| + |pre_v| + lcm(|per_u|, |per_v|) + max(|per_u|, |per_v|).
std::size_t decision_bound(const EPWord& u, const EPWord& v);

/// Lexicographic order of the (infinite) sequences. A finite word compares as
/// if terminated by a marker below every letter, so a proper prefix is Less.
Ordering lex_compare(const EPWord& u, const EPWord& v);

/// Drops the first k letters.
EPWord shift(const EPWord& u, std::size_t k);

}  // namespace betagap
