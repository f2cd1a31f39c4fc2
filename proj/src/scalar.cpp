#include "ufp/scalar.hpp"

#include <mpfr.h>

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ufp {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Largest decimal exponent accepted in a literal; keeps 10^e allocations sane.
constexpr long kMaxDecimalExponent = 100000;

[[noreturn]] void bad_literal(std::string_view text, const char* why) {
  throw std::invalid_argument("invalid rational literal '" + std::string(text) + "': " + why);
}

mpz_class parse_digits(std::string_view digits) {
  mpz_class z;
  if (z.set_str(std::string(digits), 10) != 0) throw std::invalid_argument("bad digits");
  return z;
}

}  // namespace

std::string_view to_string(NumericMode mode) {
  return mode == NumericMode::ExactRational ? "exact" : "float";
}

mpq_class parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t int_begin = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  std::string_view int_part = text.substr(int_begin, pos - int_begin);

  mpq_class result;
  if (pos < text.size() && text[pos] == '/') {
    if (int_part.empty()) bad_literal(text, "missing numerator");
    const std::size_t den_begin = ++pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos == den_begin) bad_literal(text, "missing denominator");
    if (pos != text.size()) bad_literal(text, "trailing characters");
    mpz_class den = parse_digits(text.substr(den_begin));
    if (den == 0) bad_literal(text, "zero denominator");
    result = mpq_class(parse_digits(int_part), den);
    result.canonicalize();
  } else {
    std::string_view frac_part;
    if (pos < text.size() && text[pos] == '.') {
      const std::size_t frac_begin = ++pos;
      while (pos < text.size() && is_digit(text[pos])) ++pos;
      frac_part = text.substr(frac_begin, pos - frac_begin);
    }
    if (int_part.empty() && frac_part.empty()) bad_literal(text, "no digits");
    long exponent = 0;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
      ++pos;
      bool exp_negative = false;
      if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        exp_negative = text[pos] == '-';
        ++pos;
      }
      const std::size_t exp_begin = pos;
      while (pos < text.size() && is_digit(text[pos])) ++pos;
      if (pos == exp_begin) bad_literal(text, "empty exponent");
      const std::string_view exp_digits = text.substr(exp_begin, pos - exp_begin);
      if (exp_digits.size() > 7) bad_literal(text, "exponent out of range");
      exponent = std::stol(std::string(exp_digits));
      if (exp_negative) exponent = -exponent;
    }
    if (pos != text.size()) bad_literal(text, "trailing characters");

    mpz_class mantissa = parse_digits(std::string(int_part) + std::string(frac_part));
    exponent -= static_cast<long>(frac_part.size());
    if (exponent > kMaxDecimalExponent || exponent < -kMaxDecimalExponent) {
      bad_literal(text, "exponent out of range");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    if (exponent >= 0) {
      result = mpq_class(mantissa * scale);
    } else {
      result = mpq_class(mantissa, scale);
      result.canonicalize();
    }
  }
  if (negative) result = -result;
  return result;
}

double rational_to_double(const mpq_class& q) {
  mpfr_t x;
  mpfr_init2(x, std::numeric_limits<double>::digits);
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
  const double d = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  return d;
}

Scalar Scalar::exact(mpq_class value) {
  value.canonicalize();
  return Scalar(std::move(value));
}

Scalar Scalar::real(double value) { return Scalar(value); }

Scalar Scalar::integer(std::int64_t value, NumericMode mode) {
  if (mode == NumericMode::Float) return Scalar(static_cast<double>(value));
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(value));
  return Scalar(mpq_class(z));
}

Scalar Scalar::from_rational(const mpq_class& value, NumericMode mode) {
  if (mode == NumericMode::Float) return Scalar(rational_to_double(value));
  return exact(value);
}

Scalar Scalar::parse(std::string_view text, NumericMode mode) {
  if (mode == NumericMode::Float) {
    if (text == "inf" || text == "+inf") return Scalar(std::numeric_limits<double>::infinity());
    if (text == "-inf") return Scalar(-std::numeric_limits<double>::infinity());
    if (text == "nan") return Scalar(std::numeric_limits<double>::quiet_NaN());
  }
  return from_rational(parse_rational(text), mode);
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw std::logic_error("Scalar::rational() called on a float-mode value");
}

double Scalar::to_double() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return rational_to_double(*q);
  return std::get<double>(value_);
}

mpq_class Scalar::to_rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  const double d = std::get<double>(value_);
  if (!std::isfinite(d)) throw std::domain_error("non-finite value has no rational form");
  return mpq_class(d);
}

Scalar Scalar::in_mode(NumericMode target) const {
  if (target == mode()) return *this;
  if (target == NumericMode::Float) return Scalar(to_double());
  return Scalar(to_rational());
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  const double d = std::get<double>(value_);
  if (std::isnan(d)) return "nan";
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), d);
  if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return std::string(buf.data(), end);
}

int Scalar::sign() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q);
  const double d = std::get<double>(value_);
  return (d > 0) - (d < 0);
}

bool Scalar::is_finite() const {
  if (const auto* d = std::get_if<double>(&value_)) return std::isfinite(*d);
  return true;
}

Scalar Scalar::abs() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(::abs(*q)));
  return Scalar(std::fabs(std::get<double>(value_)));
}

Scalar Scalar::floor() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    mpz_class z;
    mpz_fdiv_q(z.get_mpz_t(), q->get_num_mpz_t(), q->get_den_mpz_t());
    return Scalar(mpq_class(z));
  }
  return Scalar(std::floor(std::get<double>(value_)));
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(-*q));
  return Scalar(-std::get<double>(value_));
}

void Scalar::require_same_mode(const Scalar& other) const {
  if (mode() != other.mode()) throw std::logic_error("Scalar operands have different numeric modes");
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_mode(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(rhs.value_);
  } else {
    std::get<double>(value_) += std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_mode(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q -= std::get<mpq_class>(rhs.value_);
  } else {
    std::get<double>(value_) -= std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_mode(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(rhs.value_);
  } else {
    std::get<double>(value_) *= std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_mode(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    const auto& divisor = std::get<mpq_class>(rhs.value_);
    if (sgn(divisor) == 0) throw std::domain_error("exact division by zero");
    *q /= divisor;
  } else {
    std::get<double>(value_) /= std::get<double>(rhs.value_);
  }
  return *this;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  lhs.require_same_mode(rhs);
  if (const auto* q = std::get_if<mpq_class>(&lhs.value_)) return *q == std::get<mpq_class>(rhs.value_);
  return std::get<double>(lhs.value_) == std::get<double>(rhs.value_);
}

std::partial_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
  lhs.require_same_mode(rhs);
  if (const auto* q = std::get_if<mpq_class>(&lhs.value_)) {
    const int c = cmp(*q, std::get<mpq_class>(rhs.value_));
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  return std::get<double>(lhs.value_) <=> std::get<double>(rhs.value_);
}

Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

}  // namespace ufp
