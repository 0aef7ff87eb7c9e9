#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "virhc/rational.hpp"

namespace virhc {

/// The closed variable alphabet. Declaration order is the variable order
/// a < b < bp < rho < p < k < m < n < c, where bp stands for b' and rho for
/// the twisting parameter.
enum class Var : std::uint8_t { a, b, bp, rho, p, k, m, n, c };

inline constexpr std::size_t kNumVars = 9;
inline constexpr std::array<Var, kNumVars> kAllVars = {Var::a, Var::b,  Var::bp, Var::rho, Var::p,
                                                      Var::k, Var::m, Var::n,  Var::c};

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

using Exponents = std::array<std::uint16_t, kNumVars>;

/// Graded lexicographic order: total degree first, then the exponent of the
/// greatest variable (c) downwards to a.
struct GrlexGreater {
  bool operator()(const Exponents& x, const Exponents& y) const;
};

/// Sparse multivariate polynomial over Rational in the fixed alphabet.
/// Terms are kept in descending monomial order with no zero coefficients,
/// so structural equality is polynomial equality.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  MultiPoly() = default;
  MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(int constant) : MultiPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(Var v);
  static MultiPoly monomial(const Rational& coeff, const Exponents& exps);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  /// Largest term under the monomial order; requires a non-zero polynomial.
  [[nodiscard]] std::pair<Exponents, Rational> leading_term() const;

  [[nodiscard]] int total_degree() const;
  [[nodiscard]] int degree_in(Var v) const;
  [[nodiscard]] bool contains(Var v) const { return degree_in(v) > 0; }

  /// Collects the coefficient of v^e, as a polynomial in the remaining variables.
  [[nodiscard]] MultiPoly coefficient(Var v, unsigned e) const;

  /// Replaces every occurrence of v by the polynomial replacement.
  [[nodiscard]] MultiPoly substitute(Var v, const MultiPoly& replacement) const;

  /// Substitutes constants for the given variables, leaving the rest symbolic.
  [[nodiscard]] MultiPoly partial_eval(std::span<const std::pair<Var, Rational>> assignment) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
  friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
  friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
  friend MultiPoly operator-(const MultiPoly& x);

  friend bool operator==(const MultiPoly& x, const MultiPoly& y) = default;

 private:
  void add_term(const Exponents& e, const Rational& coeff);

  TermMap terms_;
};

/// x^e. Negative exponents are rejected.
MultiPoly pow(const MultiPoly& x, int exponent);

/// A total assignment of rationals to variables.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<Var, Rational>> values);

  Assignment& set(Var v, const Rational& value);
  [[nodiscard]] const std::optional<Rational>& get(Var v) const {
    return values_[static_cast<std::size_t>(v)];
  }

 private:
  std::array<std::optional<Rational>, kNumVars> values_{};
};

/// Exact value of x under the assignment; throws ParameterError if a
/// variable of x is unassigned.
Rational eval(const MultiPoly& x, const Assignment& assignment);

struct DivRem {
  MultiPoly quotient;
  MultiPoly remainder;
};

/// Single-divisor reduction: x = quotient * d + remainder where no term of
/// the remainder is divisible by the leading monomial of d. For a single
/// divisor this is a complete divisibility test (remainder 0 iff d | x).
DivRem divrem(const MultiPoly& x, const MultiPoly& d);

/// Exact quotient x / d; throws std::domain_error when d does not divide x.
MultiPoly exact_divide(const MultiPoly& x, const MultiPoly& d);

using Matrix3 = std::array<std::array<MultiPoly, 3>, 3>;

/// Cofactor expansion along the first row.
MultiPoly det3(const Matrix3& mat);

/// Deterministic text form: terms in descending monomial order joined by
/// " + "; coefficient written "(num/den)*" unless it is 1 on a non-constant
/// monomial; zero is "0".
std::string canonical_string(const MultiPoly& x);

/// Inverse of canonical_string. Whitespace around '+' and '*' is tolerated.
MultiPoly parse_poly(std::string_view text);

}  // namespace virhc
