#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace ufp {

/// Arithmetic backing for every real-valued quantity of a game. Fixed per game.
enum class NumericMode { ExactRational, Float };

std::string_view to_string(NumericMode mode);

/// Parses an exact rational literal: "p/q", an integer, or a decimal string
/// with optional exponent ("1e-6", "-0.25"). Decimals are converted exactly.
/// Throws std::invalid_argument on malformed input or a zero denominator.
mpq_class parse_rational(std::string_view text);

/// Round-to-nearest conversion of a rational to double.
double rational_to_double(const mpq_class& q);

/// A real number held either as an arbitrary-precision rational or as an
/// IEEE-754 double. Binary operations require both operands to share a mode;
/// mixing modes throws std::logic_error.
class Scalar {
 public:
  /// Exact zero.
  Scalar() = default;

  static Scalar exact(mpq_class value);
  static Scalar real(double value);
  static Scalar integer(std::int64_t value, NumericMode mode);
  static Scalar from_rational(const mpq_class& value, NumericMode mode);

  /// Accepts rational literals in either mode and "inf", "-inf", "nan" in
  /// float mode.
  static Scalar parse(std::string_view text, NumericMode mode);

  [[nodiscard]] NumericMode mode() const noexcept {
    return std::holds_alternative<mpq_class>(value_) ? NumericMode::ExactRational
                                                      : NumericMode::Float;
  }
  [[nodiscard]] bool is_exact() const noexcept { return mode() == NumericMode::ExactRational; }

  /// Throws std::logic_error in float mode.
  [[nodiscard]] const mpq_class& rational() const;
  [[nodiscard]] double to_double() const;
  /// Exact value of the held double in float mode; throws std::domain_error
  /// for non-finite values.
  [[nodiscard]] mpq_class to_rational() const;
  [[nodiscard]] Scalar in_mode(NumericMode mode) const;

  /// Same mode as *this.
  [[nodiscard]] Scalar like(std::int64_t value) const { return integer(value, mode()); }

  /// "p/q" (or "p" for integers) in exact mode; shortest round-trip decimal
  /// in float mode ("inf", "-inf" and "nan" for non-finite values).
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] int sign() const;
  [[nodiscard]] bool is_finite() const;
  [[nodiscard]] Scalar abs() const;
  [[nodiscard]] Scalar floor() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Exact division by zero throws std::domain_error.
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend std::partial_ordering operator<=>(const Scalar& lhs, const Scalar& rhs);

  friend Scalar operator+(const Scalar& lhs, std::int64_t rhs) { return lhs + lhs.like(rhs); }
  friend Scalar operator-(const Scalar& lhs, std::int64_t rhs) { return lhs - lhs.like(rhs); }
  friend Scalar operator-(std::int64_t lhs, const Scalar& rhs) { return rhs.like(lhs) - rhs; }
  friend Scalar operator*(const Scalar& lhs, std::int64_t rhs) { return lhs * lhs.like(rhs); }
  friend bool operator==(const Scalar& lhs, std::int64_t rhs) { return lhs == lhs.like(rhs); }
  friend std::partial_ordering operator<=>(const Scalar& lhs, std::int64_t rhs) {
    return lhs <=> lhs.like(rhs);
  }

 private:
  explicit Scalar(mpq_class v) : value_(std::move(v)) {}
  explicit Scalar(double v) : value_(v) {}

  void require_same_mode(const Scalar& other) const;

  std::variant<mpq_class, double> value_;
};

Scalar max(const Scalar& a, const Scalar& b);

}  // namespace ufp
