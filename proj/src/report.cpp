#include "virhc/report.hpp"

namespace virhc {

Json to_json(const CheckReport& report) {
  Json violations = Json::array();
  for (std::size_t i = 0; i < report.violations.size() && i < kMaxListedViolations; ++i) {
    const Violation& v = report.violations[i];
    Json degrees = Json::array();
    for (const auto& d : v.degrees) degrees.push_back(d.to_string());
    Json entry{{"inputs", v.inputs}, {"degrees", degrees}, {"residual", v.residual}};
    if (v.scalar) entry["scalar"] = v.scalar->to_string();
    violations.push_back(std::move(entry));
  }
  return Json{{"passed", report.passed()},
              {"window", report.window},
              {"cases_checked", report.cases_checked},
              {"violation_count", report.violations.size()},
              {"violations", violations}};
}

Json to_json(const ClassificationCase& c) {
  Json out{{"rho", c.rho.to_string()}, {"relation", relation_name(c.relation)}};
  if (c.b) out["b"] = c.b->to_string();
  if (c.bp) out["bp"] = c.bp->to_string();
  out["first"] = satisfied_by_name(c.first);
  out["swapped"] = satisfied_by_name(c.swapped);
  return out;
}

namespace {

Json case_list(const std::vector<ClassificationCase>& cases) {
  Json out = Json::array();
  for (const auto& c : cases) out.push_back(c.describe());
  return out;
}

}  // namespace

Json to_json(const PaperComparison& cmp) {
  return Json{{"passed", cmp.passed()},
              {"matched", case_list(cmp.matched)},
              {"missing", case_list(cmp.missing)},
              {"extra", case_list(cmp.extra)},
              {"outside_bounds", case_list(cmp.outside_bounds)}};
}

Json make_document(std::string_view command, Json params, bool passed, Json details) {
  return Json{{"version", kToolVersion},
              {"command", command},
              {"params", std::move(params)},
              {"passed", passed},
              {"details", std::move(details)}};
}

std::string serialize(const Json& doc) { return doc.dump(2) + "\n"; }

Rational RationalDraws::next(unsigned max_num, unsigned max_den) {
  const std::uint64_t span = 2ULL * max_num + 1;
  const long num = static_cast<long>(engine_() % span) - static_cast<long>(max_num);
  const long den = static_cast<long>(engine_() % max_den) + 1;
  return {num, den};
}

Rational RationalDraws::next_nonzero(unsigned max_num, unsigned max_den) {
  for (;;) {
    Rational r = next(max_num, max_den);
    if (!r.is_zero()) return r;
  }
}

}  // namespace virhc
