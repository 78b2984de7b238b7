#include "betagap/error.hpp"

namespace betagap {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::BetaOutOfRange: return "BetaOutOfRange";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::NotValidated: return "NotValidated";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NonzeroS0: return "NonzeroS0";
    case ErrorCode::HorizonRequired: return "HorizonRequired";
    case ErrorCode::HorizonTooSmall: return "HorizonTooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoDistinguishedVertex: return "NoDistinguishedVertex";
    case ErrorCode::StarFails: return "StarFails";
    case ErrorCode::NotSofic: return "NotSofic";
    case ErrorCode::NotAssImage: return "NotAssImage";
    case ErrorCode::NotAZeta: return "NotAZeta";
    case ErrorCode::NTooLarge: return "NTooLarge";
    case ErrorCode::PrefixTooShort: return "PrefixTooShort";
    case ErrorCode::NotInCantorSet: return "NotInCantorSet";
  }
  return "Unknown";
}

}  // namespace betagap
