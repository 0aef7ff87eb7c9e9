#pragma once

// Published reference data for the intermediate-series classification. These
// are transcriptions kept verbatim as golden inputs; the determinant computed
// from the linear system is authoritative wherever the two disagree.

#include <string_view>
#include <vector>

#include "virhc/poly.hpp"
#include "virhc/rational.hpp"

namespace virhc {

inline constexpr std::string_view kReferenceDataVersion = "1";

namespace reference {

/// Printed coefficient of m^2 in the reduced determinant (polynomial in b, bp, rho).
MultiPoly delta1();
/// Printed coefficient of (a + k) p.
MultiPoly delta2();
/// Printed coefficient of p^2.
MultiPoly delta3();

/// Printed determinant for s = 0 (b' = b), including the factor
/// (rho - 1) rho (1 + rho) m^6.
MultiPoly s0_display();

/// The printed prefactor (rho - 1) rho (1 + rho) m^6 alone.
MultiPoly s0_prefactor();

/// The printed relations among (rho, b, b').
enum class Relation : std::uint8_t { bp_equals_b, sum_is_one, bp_is_b_plus_half, bp_is_b_minus_half, point };

struct PrintedCase {
  Rational rho;
  Relation relation;
  Rational b;   // only meaningful for Relation::point
  Rational bp;  // only meaningful for Relation::point
};

/// Printed solution list for s = 1/2, cases (i) to (v) in order, with the
/// two point-cases expanded into their (b, b') pairs.
std::vector<PrintedCase> printed_cases_half();

/// Printed solution statement for s = 0: rho = 0, rho = 1 (any b), or
/// rho = 2 with b in {0, 1}.
std::vector<PrintedCase> printed_cases_integral();

}  // namespace reference
}  // namespace virhc
