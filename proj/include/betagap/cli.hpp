#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// tests can drive it with string streams.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betagap/beta.hpp"
#include "betagap/gaps.hpp"

namespace betagap {

struct ObjectSpec {
  enum class Kind { Beta, Gap };
  Kind kind = Kind::Beta;
  std::optional<ParrySeq> beta;
  std::optional<GapSet> gap;

  /// Canonical `beta:...` / `gap:...` text.
  std::string to_string() const;
};

/// `beta:1(1,0)*`, `gap:{0,2,3}`, `gap:0;1,(2)*`. SyntaxError positions
/// count from the start of `text`.
ObjectSpec parse_spec(std::string_view text);

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace betagap
