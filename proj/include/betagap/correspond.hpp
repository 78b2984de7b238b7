#pragma once

// The associated gap set of a beta-shift and back, and equivalence levels
// between the two families.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "betagap/beta.hpp"
#include "betagap/gaps.hpp"

namespace betagap {

/// S = {i - 1 : a_i = 1}, normalized, of the same kind as s.
GapSet ass_of_beta(const ParrySeq& s);

struct AssRecord {
  ParrySeq parry;
  /// The normalized input set.
  GapSet gap;
  /// True when parry is read off S digit by digit.
  bool exact = false;
  std::string note;
};

/// Throws StarFails (index = failing n) when the star condition fails.
AssRecord ass_of_gap(const GapSet& s);

enum class EquivalenceLevel { Conjugate, RRAlmostConjugate, RRFiniteEquivalent, None };

std::string_view equivalence_level_name(EquivalenceLevel level);

struct EquivalenceResult {
  EquivalenceLevel level = EquivalenceLevel::None;
  /// Vertex bijection from the beta cover (or its M_G quotient) to the gap
  /// cover (or its quotient); empty for None.
  std::vector<std::size_t> certificate;
  std::string note;
};

/// Both arguments sofic; throws NotSofic otherwise.
EquivalenceResult equivalence_level(const ParrySeq& s, const GapSet& gap);

/// S_j = (S_{j-1} \ {max S_{j-1}}) ∪ ((max S_{j-1} + 1) + S_0).
GapSet family_sj(const GapSet& s0, std::size_t j);

}  // namespace betagap
