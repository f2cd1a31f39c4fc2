#include "ufp/errors.hpp"

namespace ufp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NegativeQuadraticStake: return "NegativeQuadraticStake";
    case ErrorCode::GameOver: return "GameOver";
    case ErrorCode::InvalidHorizon: return "InvalidHorizon";
    case ErrorCode::ScriptExhausted: return "ScriptExhausted";
    case ErrorCode::SequenceExhausted: return "SequenceExhausted";
    case ErrorCode::NegativeVariance: return "NegativeVariance";
    case ErrorCode::MalformedTrace: return "MalformedTrace";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ufp
