#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "virhc/check_report.hpp"
#include "virhc/poly.hpp"
#include "virhc/rational.hpp"
#include "virhc/reference_data.hpp"

namespace virhc {

/// (a+p+k+b'm) f(p,k) - (a+k+bm) f(p,m+k) = (p - m rho) f(m+p,k).
/// The first two coefficients sit on the left-hand side with their signs.
struct FunctionalEquation {
  MultiPoly coeff_f_pk;   // a + p + k + bp m
  MultiPoly coeff_f_pmk;  // -(a + k + b m)
  MultiPoly coeff_f_mpk;  // p - m rho, right-hand side
};

FunctionalEquation build_functional_equation();

/// Three linear relations among f(p,k+m), f(p,k), f(p,k-m), obtained from
/// the composed functional equation at (m, m, k-m), (-m, -m, k+m) and
/// (m, -m, k). Column order is kUnknowns.
struct LinearSystem3 {
  Matrix3 matrix;
};

inline constexpr std::array<std::string_view, 3> kUnknowns = {"f(p,k+m)", "f(p,k)", "f(p,k-m)"};

LinearSystem3 build_linear_system();

struct ClassificationData {
  MultiPoly delta;                             // det of the linear system
  MultiPoly delta1, delta2, delta3;            // reference coefficients
  std::pair<MultiPoly, MultiPoly> linear_factors;  // (b'-b+rho), (1+b-b'-rho)
};

ClassificationData compute_delta();

/// Computed delta / (linear factors * m^6) = m2 m^2 + akp (a+k) p + p2 p^2.
struct ShapeCoefficients {
  MultiPoly m2;
  MultiPoly akp;
  MultiPoly p2;
};

struct CoefficientComparison {
  std::string name;
  MultiPoly computed;
  MultiPoly reference;
  MultiPoly difference;  // computed - reference
  bool exact_match = false;
  bool negated_match = false;
};

struct FactorizationCertificate {
  bool divisible_by_first_factor = false;
  bool divisible_by_second_factor = false;
  bool divisible_by_m6 = false;
  MultiPoly quotient;                      // delta / (factors * m^6), when divisible
  std::optional<ShapeCoefficients> shape;  // set when the quotient has the expected shape
  MultiPoly difference;                    // delta - factors * m^6 * (reference shape)
  std::vector<CoefficientComparison> comparisons;
  CheckReport report;  // passes iff difference is zero; the violation carries it verbatim

  [[nodiscard]] bool factorization_holds() const {
    return divisible_by_first_factor && divisible_by_second_factor && divisible_by_m6 && shape.has_value();
  }
};

FactorizationCertificate certify_factorization(const ClassificationData& data);

/// Splits q into m2 m^2 + akp (a+k) p + p2 p^2 with coefficients free of
/// a, k, p, m; nullopt when q has another shape.
std::optional<ShapeCoefficients> split_shape(const MultiPoly& q);

/// delta with b' := b.
MultiPoly specialize_s0(const ClassificationData& data);

struct S0Certificate {
  MultiPoly specialized;
  MultiPoly reference;
  MultiPoly difference;  // specialized - reference
  bool prefactor_divides = false;
  MultiPoly quotient;    // specialized / ((rho-1) rho (1+rho) m^6)
  CheckReport report;
};

S0Certificate certify_s0_display(const MultiPoly& specialized);

/// Computed once from the determinant; immutable afterwards.
struct ConditionSystem {
  MultiPoly linear;     // (b'-b+rho)(1+b-b'-rho)
  ShapeCoefficients deltas;
  MultiPoly s0_reduced; // specialized determinant / m^6
};

const ConditionSystem& condition_system();

/// (first, swapped): the vanishing condition for (b, b') and the same with
/// b and b' interchanged inside the linear factors and the coefficients.
std::pair<bool, bool> condition_pair_holds(const Rational& rho, const Rational& b, const Rational& bp);

using reference::Relation;

std::string_view relation_name(Relation r);

enum class SatisfiedBy : std::uint8_t { linear_factor, delta_vanishing };

std::string_view satisfied_by_name(SatisfiedBy s);

struct ClassificationCase {
  Rational rho;
  Relation relation = Relation::point;
  std::optional<Rational> b;   // set for points
  std::optional<Rational> bp;  // set for points
  SatisfiedBy first = SatisfiedBy::linear_factor;
  SatisfiedBy swapped = SatisfiedBy::linear_factor;

  /// Same case regardless of how it is satisfied.
  [[nodiscard]] bool same_case(const ClassificationCase& o) const {
    return rho == o.rho && relation == o.relation && b == o.b && bp == o.bp;
  }
  [[nodiscard]] std::string describe() const;
};

/// Sorted distinct values num/den with |num| <= max_num, 1 <= den <= max_den.
std::vector<Rational> rational_grid(int max_num, int max_den);

/// Exhaustive scan of (rho, b, b') over rational_grid (b' = b for s = 0,
/// rho = -1 skipped). Hits on a line b' = b, b + b' = 1 or b' = b +- 1/2 are
/// merged into a family when the conditions hold identically along that
/// line; other hits are emitted as points. Sorted by (rho, relation, b).
std::vector<ClassificationCase> enumerate_cases(const Rational& s, int max_num, int max_den);

struct PaperComparison {
  std::vector<ClassificationCase> matched;
  std::vector<ClassificationCase> missing;         // printed, within bounds, not emitted
  std::vector<ClassificationCase> extra;           // emitted, not printed
  std::vector<ClassificationCase> outside_bounds;  // printed, not representable on the grid

  [[nodiscard]] bool passed() const { return missing.empty() && extra.empty(); }
};

PaperComparison compare_with_printed(const Rational& s, const std::vector<ClassificationCase>& emitted,
                                     int max_num, int max_den);

/// Residual of the functional equation under f = c with b' = b, written as
/// (p - m rho) c - [(a+p+k+bm) c - (a+k+bm) c], which reduces to -m rho c.
MultiPoly constant_solution_residual(const Rational& rho, const Rational& c);

/// True iff f = c solves the functional equation (with b' = b) for all m, p, k.
bool check_constant_solution(const Rational& rho, const Rational& c);

using FunctionTable = std::map<std::pair<Rational, Rational>, Rational>;

struct EquationPoint {
  Rational a, b, bp, rho, m, p, k;
};

/// LHS - RHS of the functional equation at a point, with f read from the
/// table. Throws ParameterError when f(p,k), f(p,m+k) or f(m+p,k) is missing.
Rational residual(const FunctionalEquation& eq, const FunctionTable& table, const EquationPoint& point);

}  // namespace virhc
