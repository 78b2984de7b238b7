#pragma once

// Gap sets S ⊆ {0, 1, 2, ...}, their increment words and the star condition.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betagap/seqcore.hpp"

namespace betagap {

using Value = std::uint64_t;

enum class GapKind { Finite, EventuallyPeriodic, Truncated };

std::string_view gap_kind_name(GapKind kind);

/// S given by its least element d0 = s_0 and increments d_i = s_i - s_{i-1}.
///
/// Finite sets have a finite increment word, eventually periodic ones a
/// canonical periodic word. A truncated set knows membership only for
/// 0..horizon and is taken to be infinite beyond it.
class GapSet {
 public:
  /// Strictly increasing values; throws EmptySet or SyntaxError.
  static GapSet from_list(const std::vector<Value>& values);
  static GapSet from_increments(Value d0, const EPWord& increments);
  /// Members <= horizon given by d0 and the increments; increments reaching
  /// past the horizon are dropped.
  static GapSet truncated(Value d0, const FiniteWord& increments, std::size_t horizon);
  /// {m : chi(m) = 1} for a finite word, or a periodic word with a 1 in the
  /// period (period (0) gives a finite set).
  static GapSet from_indicator(const EPWord& chi);
  /// {m <= horizon : chi(m) = 1}; chi shorter than horizon + 1 is padded with 0.
  static GapSet truncated_from_indicator(const FiniteWord& chi, std::size_t horizon);

  /// `{0,2,3}`, `{2,3,4,...}` (the last difference repeats), `0;1,(2)*`,
  /// `0;2,1`, `trunc:0;1,3,5,7,...@40`, `trunc:squares@40`.
  static GapSet parse(std::string_view text);
  std::string to_string() const;

  GapKind kind() const { return kind_; }
  Value d0() const { return d0_; }
  const EPWord& increments() const { return increments_; }
  std::size_t horizon() const { return horizon_; }
  bool is_finite() const { return kind_ == GapKind::Finite; }
  bool is_sofic() const { return kind_ != GapKind::Truncated; }

  /// Number of elements; throws NotFinite for infinite sets.
  std::size_t size() const;
  Value max() const;
  /// Throws HorizonTooSmall past the horizon of a truncated set.
  bool contains(Value m) const;
  /// Members <= limit in increasing order.
  std::vector<Value> members_upto(Value limit) const;
  /// All members of a finite set.
  std::vector<Value> members() const;

  /// chi(m) = 1 iff m ∈ S: finite word up to max S, periodic word for the
  /// eventually periodic kind, finite word of length horizon + 1 when
  /// truncated.
  EPWord indicator() const;

  bool operator==(const GapSet&) const = default;

 private:
  GapSet(GapKind kind, Value d0, EPWord increments, std::size_t horizon)
      : kind_(kind), d0_(d0), increments_(std::move(increments)), horizon_(horizon) {}

  GapKind kind_ = GapKind::Finite;
  Value d0_ = 0;
  EPWord increments_;
  std::size_t horizon_ = 0;
};

enum class GapClass { SFT, AFTnotSFT, SoficNotAFT, NonSofic };

std::string_view gap_class_name(GapClass c);

GapClass classify_gap(const GapSet& s);

/// {n, n+1, ...} becomes {0, n}; everything else is returned unchanged.
GapSet normalize(const GapSet& s);

/// d_1 ... d_{k-2} (d_{k-1} + s_0 + 1) for |S| = k >= 2.
FiniteWord d_word(const GapSet& s);

/// (d_1 ... d_{k-2} (d_{k-1} + 1))^∞ for finite S, the increments otherwise.
/// Requires s_0 = 0 and |S| >= 2.
EPWord inverse_parry_word(const GapSet& s);

struct StarVerdict {
  enum class Status { Holds, FailsAt, HoldsToHorizon, HoldsByMonotonicity };
  Status status = Status::Holds;
  /// 1-based failing n for FailsAt, horizon for HoldsToHorizon.
  std::size_t index = 0;

  bool holds() const { return status != Status::FailsAt; }
  std::string to_string() const;
};

/// d_n d_{n+1} ... >= d_1 d_2 ... for all n >= 1, on inverse_parry_word of
/// the normalized set.
StarVerdict star_condition(const GapSet& s);

/// The case of the follower-class count for infinite sofic S, from the full
/// increment word Δ = d_0 d_1 ... d_{k-1} (g_0 ... g_{l-1})^∞.
struct CoverCase {
  enum class Kind { Finite, Case1a, Case1b, Case2, Case3, Undetermined };
  Kind kind = Kind::Undetermined;
  /// Index of the last vertex, when a formula applies.
  std::optional<Value> last_vertex;
  std::size_t k = 0;
  std::size_t l = 0;
};

std::string_view cover_case_name(CoverCase::Kind kind);

CoverCase cover_case(const GapSet& s);

}  // namespace betagap
