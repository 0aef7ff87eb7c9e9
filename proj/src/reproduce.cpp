#include "virhc/reproduce.hpp"

#include <algorithm>
#include <set>

#include "virhc/lie.hpp"
#include "virhc/module.hpp"

namespace virhc {

namespace {

struct Outcome {
  bool passed = false;
  std::string status;
  Json details;
};

Outcome criterion_factorization() {
  const ClassificationData data = compute_delta();
  const FactorizationCertificate cert = certify_factorization(data);
  Json details{{"delta_terms", data.delta.size()},
               {"divisible_by_first_factor", cert.divisible_by_first_factor},
               {"divisible_by_second_factor", cert.divisible_by_second_factor},
               {"divisible_by_m6", cert.divisible_by_m6},
               {"shape", cert.shape.has_value()},
               {"quotient_terms", cert.quotient.size()}};
  const bool ok = cert.factorization_holds();
  return {ok, ok ? "exact" : "failed", std::move(details)};
}

Outcome criterion_golden() {
  const ClassificationData data = compute_delta();
  const FactorizationCertificate cert = certify_factorization(data);
  if (!cert.shape) return {false, "failed", Json{{"reason", "quotient has no shape coefficients"}}};
  Json rows = Json::array();
  bool all_exact = true;
  for (const auto& c : cert.comparisons) {
    all_exact = all_exact && c.exact_match;
    rows.push_back(Json{{"name", c.name},
                        {"exact_match", c.exact_match},
                        {"negated_match", c.negated_match},
                        {"computed", canonical_string(c.computed)},
                        {"difference", canonical_string(c.difference)}});
  }
  Json details{{"coefficients", rows}, {"factored_difference_terms", cert.difference.size()}};
  return {true, all_exact ? "exact" : "erratum", std::move(details)};
}

Outcome criterion_s0() {
  const S0Certificate cert = certify_s0_display(specialize_s0(compute_delta()));
  const bool ok = cert.difference.is_zero() && cert.prefactor_divides;
  Json details{{"difference", canonical_string(cert.difference)},
               {"prefactor_divides", cert.prefactor_divides},
               {"quotient", canonical_string(cert.quotient)}};
  return {ok, ok ? "exact" : "failed", std::move(details)};
}

Outcome criterion_cases() {
  constexpr int kBound = 4;
  Json details = Json::object();
  bool ok = true;
  for (const auto& [key, s] : {std::pair{"s=1/2", Rational(1, 2)}, std::pair{"s=0", Rational(0)}}) {
    const auto cases = enumerate_cases(s, kBound, kBound);
    const PaperComparison cmp = compare_with_printed(s, cases, kBound, kBound);
    ok = ok && cmp.passed();
    Json emitted = Json::array();
    for (const auto& c : cases) emitted.push_back(to_json(c));
    details[key] = Json{{"max_num", kBound}, {"max_den", kBound}, {"emitted", emitted}, {"comparison", to_json(cmp)}};
  }
  return {ok, ok ? "exact" : "mismatch", std::move(details)};
}

std::vector<AlgebraSpec> axiom_algebras() {
  const std::vector<Rational> rhos{0, 1, 2, Rational(1, 2), Rational(5, 7), -3};
  std::vector<AlgebraSpec> out{make_algebra(AlgebraName::Vir, 0)};
  for (const auto& s : {Rational(0), Rational(1, 2)}) {
    for (const auto& rho : rhos) out.push_back(make_algebra(AlgebraName::W, s, rho));
  }
  out.push_back(make_algebra(AlgebraName::SV, 0));
  out.push_back(make_algebra(AlgebraName::SV, Rational(1, 2)));
  for (const auto& rho : rhos) {
    if (rho.is_zero() || rho == Rational(-3)) continue;
    out.push_back(make_algebra(AlgebraName::D, 0, rho));
  }
  return out;
}

Outcome criterion_axioms() {
  constexpr int kWindow = 6;
  Json rows = Json::array();
  bool ok = true;
  for (const auto& alg : axiom_algebras()) {
    const CheckReport anti = check_antisymmetry(alg, kWindow);
    const CheckReport jac = check_jacobi(alg, kWindow);
    ok = ok && anti.passed() && jac.passed();
    rows.push_back(Json{{"algebra", alg.display_name()}, {"antisymmetry", to_json(anti)}, {"jacobi", to_json(jac)}});
  }
  return {ok, ok ? "exact" : "failed", Json{{"window", kWindow}, {"algebras", rows}}};
}

Outcome criterion_cocycles() {
  constexpr int kWindow = 8;
  const AlgebraSpec w0 = make_algebra(AlgebraName::W, 0, Rational(0));
  const AlgebraSpec w1 = make_algebra(AlgebraName::W, 0, Rational(1));
  const std::vector<std::pair<CocycleName, AlgebraSpec>> runs{
      {CocycleName::gamma0, w0}, {CocycleName::gamma01, w0}, {CocycleName::gamma02, w0},
      {CocycleName::gamma0, w1}, {CocycleName::gamma11, w1}};
  Json rows = Json::array();
  bool ok = true;
  for (const auto& [name, alg] : runs) {
    const CheckReport report = check_cocycle(name, alg, kWindow);
    ok = ok && report.passed();
    rows.push_back(Json{{"cocycle", cocycle_name(name)}, {"algebra", alg.display_name()}, {"report", to_json(report)}});
  }
  return {ok, ok ? "exact" : "discrepancy", Json{{"window", kWindow}, {"runs", rows}}};
}

Json module_row(const ModuleSpec& mod, const CheckReport& report) {
  return Json{{"module", mod.display_name()},
              {"passed", report.passed()},
              {"cases_checked", report.cases_checked},
              {"violation_count", report.violations.size()}};
}

Outcome criterion_modules(std::uint64_t seed) {
  constexpr int kWindow = 4;
  constexpr int kDraws = 10;
  RationalDraws draws(seed);
  const AlgebraSpec vir = make_algebra(AlgebraName::Vir, 0);
  const AlgebraSpec w0 = make_algebra(AlgebraName::W, 0, Rational(0));
  bool ok = true;

  Json positive = Json::array();
  for (const auto& [kind, host] : {std::pair{ModuleKind::Aab, vir}, std::pair{ModuleKind::Aa, vir},
                                   std::pair{ModuleKind::Ba, vir}, std::pair{ModuleKind::Aabc, w0}}) {
    for (int i = 0; i < kDraws; ++i) {
      ModuleParams params;
      params.a = draws.next(9, 7);
      params.b = draws.next(9, 7);
      params.c = draws.next(9, 7);
      const ModuleSpec mod = make_module(kind, params, host);
      const CheckReport report = check_module_axiom(mod, kWindow);
      ok = ok && report.passed();
      positive.push_back(module_row(mod, report));
    }
  }

  // Twisted hosts: the axiom must fail, and only through -m rho c on (L_m, Y_p).
  Json negative = Json::array();
  for (int i = 0; i < kDraws; ++i) {
    Rational rho = draws.next_nonzero(9, 7);
    while (rho == Rational(-1)) rho = draws.next_nonzero(9, 7);
    ModuleParams params;
    params.a = draws.next(9, 7);
    params.b = draws.next(9, 7);
    params.c = draws.next_nonzero(9, 7);
    const ModuleSpec mod = make_module(ModuleKind::Aabc, params, make_algebra(AlgebraName::W, 0, rho));
    const CheckReport report = check_module_axiom(mod, kWindow);
    bool residuals_match = !report.passed();
    for (const auto& v : report.violations) {
      const bool l_then_y = v.inputs[0].starts_with("L_") && v.inputs[1].starts_with("Y_");
      residuals_match = residuals_match && l_then_y && v.scalar && *v.scalar == -(v.degrees[0] * rho * params.c);
    }
    const MultiPoly expected = MultiPoly(-(rho * params.c)) * MultiPoly::variable(Var::m);
    const bool symbolic_match = symbolic_ly_residual(mod) == expected;
    ok = ok && residuals_match && symbolic_match;
    Json row = module_row(mod, report);
    row["residuals_equal_minus_m_rho_c"] = residuals_match;
    row["symbolic_residual"] = canonical_string(symbolic_ly_residual(mod));
    negative.push_back(std::move(row));
  }
  return {ok, ok ? "exact" : "failed",
          Json{{"window", kWindow}, {"seed", seed}, {"expected_modules", positive}, {"twisted_hosts", negative}}};
}

bool v0_isolated(const CheckReport& report) {
  return std::any_of(report.violations.begin(), report.violations.end(), [](const Violation& v) {
    return v.inputs.size() == 1 && v.inputs[0] == "v_0" && v.residual == "span{v_0}";
  });
}

Outcome criterion_cyclicity() {
  constexpr int kWindow = 6;
  const AlgebraSpec vir = make_algebra(AlgebraName::Vir, 0);
  bool ok = true;
  Json proper = Json::array();
  std::vector<ModuleSpec> degenerate{make_module(ModuleKind::Aab, {0, 0, {}, 0, 0, 0}, vir)};
  for (const auto& a : {Rational(0), Rational(1), Rational(-2), Rational(1, 2), Rational(3)}) {
    degenerate.push_back(make_module(ModuleKind::Ba, {a, 0, {}, 0, 0, 0}, vir));
  }
  for (const auto& mod : degenerate) {
    const CheckReport report = check_window_cyclic(mod, kWindow);
    const bool found = v0_isolated(report);
    ok = ok && found;
    proper.push_back(Json{{"module", mod.display_name()}, {"v0_proper", found}, {"report", to_json(report)}});
  }

  const std::vector<Rational> as{0, Rational(1, 2), Rational(1, 3), Rational(-2, 5), Rational(7, 4)};
  const std::vector<Rational> bs{-1, Rational(1, 2), 2, 3, Rational(-5, 3)};
  Json simple = Json::array();
  for (const auto& a : as) {
    for (const auto& b : bs) {
      const ModuleSpec mod = make_module(ModuleKind::Aab, {a, b, {}, 0, 0, 0}, vir);
      const CheckReport report = check_window_cyclic(mod, kWindow);
      const bool simple_by_criterion = simplicity_criterion(mod);
      ok = ok && simple_by_criterion && report.passed();
      simple.push_back(Json{{"module", mod.display_name()},
                            {"simplicity_criterion", simple_by_criterion},
                            {"all_full", report.passed()}});
    }
  }
  return {ok, ok ? "exact" : "failed", Json{{"window", kWindow}, {"proper", proper}, {"simple", simple}}};
}

Outcome criterion_constant() {
  const std::vector<Rational> grid{-2, Rational(-3, 2), Rational(-1, 2), Rational(-1, 3), 0,
                                   Rational(1, 3), Rational(1, 2), 1, 2};
  const MultiPoly m = MultiPoly::variable(Var::m);
  bool ok = true;
  Json failures = Json::array();
  std::size_t solutions = 0;
  for (const auto& rho : grid) {
    for (const auto& c : grid) {
      const bool expected = rho.is_zero() || c.is_zero();
      const bool got = check_constant_solution(rho, c);
      const bool symbolic = constant_solution_residual(rho, c) == MultiPoly(-(rho * c)) * m;
      solutions += got ? 1 : 0;
      if (got != expected || !symbolic) {
        ok = false;
        failures.push_back(Json{{"rho", rho.to_string()}, {"c", c.to_string()}});
      }
    }
  }
  return {ok, ok ? "exact" : "failed",
          Json{{"grid_points", grid.size() * grid.size()}, {"solutions", solutions}, {"failures", failures}}};
}

Outcome run_outcome(int id, std::uint64_t seed) {
  switch (id) {
    case 1: return criterion_factorization();
    case 2: return criterion_golden();
    case 3: return criterion_s0();
    case 4: return criterion_cases();
    case 5: return criterion_axioms();
    case 6: return criterion_cocycles();
    case 7: return criterion_modules(seed);
    case 8: return criterion_cyclicity();
    case 9: return criterion_constant();
    default: break;
  }
  throw ParameterError("criterion " + std::to_string(id) + " is not a standalone check");
}

Json wrap(const CriterionInfo& info, Outcome outcome) {
  return Json{{"id", info.id},
              {"group", info.group},
              {"title", info.title},
              {"passed", outcome.passed},
              {"status", outcome.status},
              {"details", std::move(outcome.details)}};
}

}  // namespace

std::vector<int> select_criteria(const std::vector<std::string>& only) {
  std::set<int> ids;
  if (only.empty()) {
    for (const auto& c : kCriteria) ids.insert(c.id);
  }
  for (const auto& sel : only) {
    bool known = false;
    for (const auto& c : kCriteria) {
      if (sel == c.group || sel == std::to_string(c.id)) {
        ids.insert(c.id);
        known = true;
      }
    }
    if (!known) throw ParameterError("unknown criterion selector '" + sel + "'");
  }
  return {ids.begin(), ids.end()};
}

Json run_criterion(int id, std::uint64_t seed) {
  const auto& info = kCriteria.at(static_cast<std::size_t>(id - 1));
  return wrap(info, run_outcome(id, seed));
}

Json reproduce_document(const ReproduceOptions& options) {
  const std::vector<int> ids = select_criteria(options.only);
  const bool determinism = std::find(ids.begin(), ids.end(), 10) != ids.end();
  std::vector<int> checks;
  std::copy_if(ids.begin(), ids.end(), std::back_inserter(checks), [](int id) { return id != 10; });

  const auto run_all = [&](const std::vector<int>& which) {
    Json list = Json::array();
    for (int id : which) list.push_back(run_criterion(id, options.seed));
    return list;
  };

  Json criteria = run_all(checks);
  if (determinism) {
    // Rerun the same checks in-process; on its own, rerun the full suite twice.
    std::vector<int> all_checks;
    for (const auto& c : kCriteria) {
      if (c.id != 10) all_checks.push_back(c.id);
    }
    const std::vector<int>& which = checks.empty() ? all_checks : checks;
    const std::string first = serialize(checks.empty() ? run_all(which) : criteria);
    const std::string second = serialize(run_all(which));
    const bool identical = first == second;
    criteria.push_back(wrap(kCriteria[9], {identical, identical ? "exact" : "differs",
                                           Json{{"runs", 2}, {"bytes", first.size()}, {"identical", identical}}}));
  }

  bool passed = true;
  for (const auto& c : criteria) passed = passed && c["passed"].get<bool>();
  Json only = Json::array();
  for (const auto& s : options.only) only.push_back(s);
  return make_document("reproduce", Json{{"only", only}, {"seed", options.seed}}, passed,
                       Json{{"criteria", criteria}});
}

}  // namespace virhc
