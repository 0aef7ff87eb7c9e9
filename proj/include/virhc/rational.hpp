#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace virhc {

/// Thrown when user-supplied parameters fall outside an operation's domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when text cannot be parsed as a rational or polynomial.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& value);

  /// Parses "int" or "int/int" (optional leading '-', non-zero denominator).
  static Rational parse(std::string_view text);

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_one() const { return value_ == 1; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  /// Lies in (1/2)Z, i.e. denominator divides 2.
  [[nodiscard]] bool is_half_integer_lattice() const {
    return value_.get_den() == 1 || value_.get_den() == 2;
  }

  /// Requires is_integer(); throws otherwise.
  [[nodiscard]] long to_long() const;

  /// "num" when integral, "num/den" otherwise.
  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational& x, const Rational& y) { return x.value_ == y.value_; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    const int c = cmp(x.value_, y.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.to_string();
  }

 private:
  mpq_class value_{0};
};

/// Integer power with non-negative exponent.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace virhc

template <>
struct std::hash<virhc::Rational> {
  std::size_t operator()(const virhc::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.to_string());
  }
};
