#pragma once

#include <random>
#include <vector>

#include "virhc/poly.hpp"
#include "virhc/rational.hpp"

namespace virhc::testing {

inline Rational small_rational(std::mt19937_64& rng, unsigned max_num = 6, unsigned max_den = 5) {
  const long num = static_cast<long>(rng() % (2 * max_num + 1)) - static_cast<long>(max_num);
  const long den = static_cast<long>(rng() % max_den) + 1;
  return {num, den};
}

/// Random polynomial over the given variables with up to max_terms terms.
inline MultiPoly random_poly(std::mt19937_64& rng, const std::vector<Var>& vars, int max_terms = 5, int max_exp = 3) {
  MultiPoly out;
  const int terms = static_cast<int>(rng() % static_cast<unsigned>(max_terms)) + 1;
  for (int t = 0; t < terms; ++t) {
    Exponents e{};
    for (Var v : vars) e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(rng() % (max_exp + 1));
    out += MultiPoly::monomial(small_rational(rng), e);
  }
  return out;
}

inline Assignment random_assignment(std::mt19937_64& rng) {
  Assignment out;
  for (Var v : kAllVars) out.set(v, small_rational(rng, 9, 7));
  return out;
}

inline MultiPoly var(Var v) { return MultiPoly::variable(v); }

}  // namespace virhc::testing
