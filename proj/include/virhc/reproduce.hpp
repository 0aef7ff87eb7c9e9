#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "virhc/report.hpp"

namespace virhc {

struct CriterionInfo {
  int id;
  std::string_view group;
  std::string_view title;
};

inline constexpr std::array<CriterionInfo, 10> kCriteria = {{
    {1, "delta", "determinant factorization"},
    {2, "delta", "golden shape coefficients"},
    {3, "delta", "s = 0 specialization"},
    {4, "classify", "case list"},
    {5, "jacobi", "algebra axioms"},
    {6, "cocycle", "cocycle identities"},
    {7, "module", "module axiom"},
    {8, "cyclicity", "submodule detection"},
    {9, "constant", "constant solutions"},
    {10, "determinism", "byte-identical report"},
}};

struct ReproduceOptions {
  std::vector<std::string> only;  // group names or criterion ids; empty runs everything
  std::uint64_t seed = 0;
};

/// Criterion ids selected by the options, ascending. Throws ParameterError on
/// an unknown selector.
std::vector<int> select_criteria(const std::vector<std::string>& only);

/// {"id", "group", "title", "passed", "status", "details"}.
Json run_criterion(int id, std::uint64_t seed);

/// The full reproduce document; details holds {"criteria": [...]}.
Json reproduce_document(const ReproduceOptions& options);

}  // namespace virhc
