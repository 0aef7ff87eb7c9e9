#pragma once

#include <optional>
#include <string>
#include <vector>

#include "virhc/rational.hpp"

namespace virhc {

/// One failed instance of an identity.
struct Violation {
  std::vector<std::string> inputs;  // labels such as "L_2", "Y_1/2", "v_-3"
  std::vector<Rational> degrees;    // degree or weight index of each input
  std::string residual;             // canonical text of the non-zero residual
  std::optional<Rational> scalar;   // residual coefficient when it is a single term
};

/// Outcome of an exhaustive check. passed holds exactly when violations is empty.
struct CheckReport {
  int window = 0;
  std::size_t cases_checked = 0;
  std::vector<Violation> violations;

  [[nodiscard]] bool passed() const { return violations.empty(); }
};

}  // namespace virhc
