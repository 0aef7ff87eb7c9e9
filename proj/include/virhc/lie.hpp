#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "virhc/check_report.hpp"
#include "virhc/rational.hpp"

namespace virhc {

/// Generator families: L (Virasoro part), Y (twisted abelian or Schrodinger
/// part) and M (the family spanned by brackets of Y's in SV and D).
enum class Family : std::uint8_t { L, Y, M };

std::string_view family_name(Family f);

struct BasisElement {
  Family family = Family::L;
  Rational degree;

  [[nodiscard]] std::string label() const;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
  friend std::strong_ordering operator<=>(const BasisElement& x, const BasisElement& y) {
    if (x.family != y.family) return x.family <=> y.family;
    return x.degree <=> y.degree;
  }
};

inline BasisElement L(const Rational& n) { return {Family::L, n}; }
inline BasisElement Y(const Rational& p) { return {Family::Y, p}; }
inline BasisElement M(const Rational& n) { return {Family::M, n}; }

/// Finite linear combination of basis elements; zero coefficients are never stored.
class Element {
 public:
  Element() = default;
  Element(const BasisElement& e, const Rational& coeff = Rational(1));  // NOLINT(google-explicit-constructor)

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<BasisElement, Rational>& terms() const { return terms_; }
  [[nodiscard]] Rational coefficient(const BasisElement& e) const;

  void add(const BasisElement& e, const Rational& coeff);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& s);

  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  friend Element operator*(const Rational& s, Element x) { return x *= s; }

  friend bool operator==(const Element&, const Element&) = default;

  /// "(c)*X_d" terms joined by " + ", family then degree ascending; zero is "0".
  [[nodiscard]] std::string to_string() const;

 private:
  std::map<BasisElement, Rational> terms_;
};

enum class AlgebraName : std::uint8_t { Vir, W, SV, D };

std::string_view algebra_name(AlgebraName name);
std::optional<AlgebraName> algebra_from_name(std::string_view text);

/// A graded Lie algebra presented by structure-constant formulas.
struct AlgebraSpec {
  AlgebraName name = AlgebraName::Vir;
  Rational s;                  // 0 or 1/2; Y degrees lie in Z + s
  std::optional<Rational> rho; // twisting parameter for W and D

  [[nodiscard]] std::vector<Family> families() const;
  [[nodiscard]] bool has_family(Family f) const;
  [[nodiscard]] bool is_valid(const BasisElement& e) const;

  /// All basis elements with |degree| <= window, families in order L, Y, M.
  [[nodiscard]] std::vector<BasisElement> window_basis(int window) const;

  /// e.g. "Vir", "W(1/2)[0]", "SV[1/2]", "D(2)".
  [[nodiscard]] std::string display_name() const;
};

/// Validates the parameter domain: W needs rho != -1; D needs s = 0 and
/// rho not in {0, -1, -3}; Vir and SV take no rho; Vir has s = 0.
AlgebraSpec make_algebra(AlgebraName name, const Rational& s, std::optional<Rational> rho = std::nullopt);

/// A single structure-constant term c * e, or nothing when the bracket vanishes.
using Term = std::optional<std::pair<BasisElement, Rational>>;
using BasisBracket = std::function<Term(const BasisElement&, const BasisElement&)>;

/// Bracket of two basis elements from the formulas. Throws ParameterError if
/// either element is not on the algebra's degree lattice.
Term basis_bracket(const AlgebraSpec& alg, const BasisElement& x, const BasisElement& y);

/// Bilinear extension of basis_bracket.
Element bracket(const AlgebraSpec& alg, const Element& x, const Element& y);
Element bracket_with(const BasisBracket& fn, const Element& x, const Element& y);

/// [x,y] + [y,x] = 0 over all ordered basis pairs with |degree| <= window.
CheckReport check_antisymmetry(const AlgebraSpec& alg, int window);

/// [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 over all ordered basis triples with |degree| <= window.
CheckReport check_jacobi(const AlgebraSpec& alg, int window);

/// Jacobi check against an arbitrary bracket; used to mutation-test the checker.
CheckReport check_jacobi_with(const BasisBracket& fn, const std::vector<BasisElement>& basis, int window);

enum class CocycleName : std::uint8_t { gamma0, gamma01, gamma02, gamma11 };

std::string_view cocycle_name(CocycleName name);
std::optional<CocycleName> cocycle_from_name(std::string_view text);

/// Value of the named 2-cocycle on an ordered pair. The printed formulas are
/// stated for (L, L), (L, Y) and (Y, Y); (Y, L) is filled in by antisymmetry.
/// Pairs outside a formula's families evaluate to 0.
Rational cocycle_value(CocycleName name, const BasisElement& x, const BasisElement& y);

/// Checks g([x,y],z) + g([y,z],x) + g([z,x],y) = 0 over basis triples with
/// |degree| <= window. gamma0 applies to Vir and every W(rho)[0];
/// gamma01, gamma02 need W(0)[0]; gamma11 needs W(1)[0].
CheckReport check_cocycle(CocycleName name, const AlgebraSpec& alg, int window);

}  // namespace virhc
