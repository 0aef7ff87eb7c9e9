#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "virhc/check_report.hpp"
#include "virhc/lie.hpp"
#include "virhc/poly.hpp"
#include "virhc/rational.hpp"

namespace virhc {

/// Intermediate-series module families.
///   Aab      over Vir:        L_m v_i = (a + i + b m) v_{m+i}
///   Aa       over Vir:        L_m v_i = (i + m) v_{m+i} (i != 0), L_m v_0 = m (m + a) v_m
///   Ba       over Vir:        L_m v_i = i v_{m+i} (i != -m), L_m v_{-m} = -m (m + a) v_0
///   Aabc     over W(rho)[0]:  Aab plus Y_p v_k = c v_{p+k}
///   Aabc1c2  over W(rho)[1/2]: L_m v_k = (a + k + b m) v_{m+k} on integer k and
///            (a + k + b' m) on half-integer k; Y_p v_k = c1 v_{p+k} (k integer),
///            c2 v_{p+k} (k half-integer)
enum class ModuleKind : std::uint8_t { Aab, Aa, Ba, Aabc, Aabc1c2 };

std::string_view module_kind_name(ModuleKind kind);
std::optional<ModuleKind> module_kind_from_name(std::string_view text);

struct ModuleParams {
  Rational a;
  Rational b;
  std::optional<Rational> b_prime;  // defaults to b
  Rational c;
  Rational c1;
  Rational c2;
};

struct ModuleSpec {
  ModuleKind kind = ModuleKind::Aab;
  Rational a;
  Rational b;
  Rational b_prime;
  Rational c;
  Rational c1;
  Rational c2;
  AlgebraSpec host;

  /// Weight lattice of the module: Z for s = 0 hosts, (1/2)Z for s = 1/2.
  [[nodiscard]] bool on_lattice(const Rational& index) const;

  /// Basis indices with |index| <= bound on the module's lattice, ascending.
  [[nodiscard]] std::vector<Rational> indices_within(const Rational& bound) const;

  [[nodiscard]] std::string display_name() const;
};

/// Validates kind/host compatibility and installs the action formulas.
/// An integral weight shift a is normalized to 0 for Aab, Aabc and Aabc1c2.
ModuleSpec make_module(ModuleKind kind, const ModuleParams& params, const AlgebraSpec& host);

/// A vector sum_k coeff_k v_k with finite support and no zero coefficients.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(const Rational& index, const Rational& coeff = Rational(1));

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<Rational, Rational>& terms() const { return terms_; }
  [[nodiscard]] Rational coefficient(const Rational& index) const;

  void add(const Rational& index, const Rational& coeff);

  WeightVector& operator+=(const WeightVector& o);
  WeightVector& operator-=(const WeightVector& o);

  friend WeightVector operator+(WeightVector x, const WeightVector& y) { return x += y; }
  friend WeightVector operator-(WeightVector x, const WeightVector& y) { return x -= y; }
  friend bool operator==(const WeightVector&, const WeightVector&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  std::map<Rational, Rational> terms_;
};

/// Coefficient of v_{index + degree(x)} in x . v_index for a basis element x.
Rational action_coefficient(const ModuleSpec& mod, const BasisElement& x, const Rational& index);

/// Bilinear action x . v. Throws ParameterError if x is not in the host or
/// v has an index off the module's lattice.
WeightVector act(const ModuleSpec& mod, const Element& x, const WeightVector& v);

/// Checks [x,y] . v = x . (y . v) - y . (x . v) for host basis pairs with
/// |degree| <= window and basis vectors v_k with |k| <= window. Each
/// unordered pair is visited once, in L, Y order, because the identity is
/// antisymmetric in (x, y). Residuals are [x,y].v - (x.(y.v) - y.(x.v)).
CheckReport check_module_axiom(const ModuleSpec& mod, int window);

/// Residual of the module identity on (L_m, Y_p, v_k) as a polynomial in
/// m, p, k for kinds whose coefficients are polynomial in the indices
/// (Aab, Aabc, and Aabc1c2 restricted to integer k). Same orientation as
/// check_module_axiom.
MultiPoly symbolic_ly_residual(const ModuleSpec& mod);

/// For each generator v_i with |i| <= window/2, closes {v_i} under host basis
/// operators with |degree| <= window, discarding results with |index| > window.
/// A generator that fails to reach every v_j with |j| <= window/2 is a violation.
CheckReport check_window_cyclic(const ModuleSpec& mod, int window);

/// The printed simplicity criteria: Aab simple iff a not in Z or b not in
/// {0, 1}; Aabc additionally when c != 0; Aabc1c2 iff c1 c2 != 0.
/// Aa and Ba are rejected with ParameterError.
bool simplicity_criterion(const ModuleSpec& mod);

}  // namespace virhc
