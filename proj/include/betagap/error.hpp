#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace betagap {

enum class ErrorCode {
  SyntaxError,
  BetaOutOfRange,
  PrecisionExhausted,
  NotValidated,
  EmptySet,
  NotFinite,
  TooSmall,
  NonzeroS0,
  HorizonRequired,
  HorizonTooSmall,
  TooLarge,
  NoDistinguishedVertex,
  StarFails,
  NotSofic,
  NotAssImage,
  NotAZeta,
  NTooLarge,
  PrefixTooShort,
  NotInCantorSet,
};

/// Stable machine-readable name, used in JSON output.
std::string_view error_code_name(ErrorCode code);

/// All domain errors raised by the library. `index` carries the position for
/// SyntaxError and the failing index for StarFails; zero otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::size_t index = 0)
      : std::runtime_error(what), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::size_t index_;
};

}  // namespace betagap
