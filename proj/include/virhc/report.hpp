#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <json.hpp>

#include "virhc/check_report.hpp"
#include "virhc/classification.hpp"
#include "virhc/rational.hpp"

namespace virhc {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Violations beyond this many are counted but not listed.
inline constexpr std::size_t kMaxListedViolations = 10;

Json to_json(const CheckReport& report);
Json to_json(const ClassificationCase& c);
Json to_json(const PaperComparison& cmp);

/// {"version", "command", "params", "passed", "details"} in that order.
Json make_document(std::string_view command, Json params, bool passed, Json details);

/// Byte-stable serialization: two-space indent and a trailing newline.
std::string serialize(const Json& doc);

/// Rationals drawn from raw mt19937_64 output, so the sequence does not depend
/// on the standard library's distribution implementations.
class RationalDraws {
 public:
  explicit RationalDraws(std::uint64_t seed) : engine_(seed) {}

  /// num/den with |num| <= max_num and 1 <= den <= max_den.
  Rational next(unsigned max_num, unsigned max_den);
  Rational next_nonzero(unsigned max_num, unsigned max_den);

 private:
  std::mt19937_64 engine_;
};

}  // namespace virhc
