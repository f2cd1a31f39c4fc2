#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ufp {

enum class ErrorCode {
  NegativeQuadraticStake,
  GameOver,
  InvalidHorizon,
  ScriptExhausted,
  SequenceExhausted,
  NegativeVariance,
  MalformedTrace,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported as a ProtocolError
/// tagged with the condition that caused it.
class ProtocolError : public std::runtime_error {
 public:
  ProtocolError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Grammar failure with the byte offset into the input and the tokens that
/// would have been accepted there.
class ParseError : public ProtocolError {
 public:
  ParseError(std::size_t position, std::string expected, const std::string& input)
      : ProtocolError(ErrorCode::ParseError, "at position " + std::to_string(position) + " in '" + input +
                                                 "': expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }
  [[nodiscard]] const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace ufp
