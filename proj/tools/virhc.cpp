// Command-line front end for the virhc checks.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "virhc/classification.hpp"
#include "virhc/lie.hpp"
#include "virhc/module.hpp"
#include "virhc/reference_data.hpp"
#include "virhc/report.hpp"
#include "virhc/reproduce.hpp"

using namespace virhc;

namespace {

constexpr int kExitPassed = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;

struct Global {
  std::string output = "text";
  std::uint64_t seed = 0;
};

std::optional<Rational> parse_opt(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return Rational::parse(text);
}

Rational parse_or(const std::string& text, const Rational& fallback) {
  return text.empty() ? fallback : Rational::parse(text);
}

std::string verdict(bool ok) { return ok ? "passed" : "FAILED"; }

void print_report(std::ostream& os, std::string_view label, const CheckReport& r) {
  os << label << ": " << verdict(r.passed()) << " (" << r.cases_checked << " cases, " << r.violations.size()
     << " violations)\n";
  for (std::size_t i = 0; i < r.violations.size() && i < kMaxListedViolations; ++i) {
    const Violation& v = r.violations[i];
    os << "  ";
    for (std::size_t j = 0; j < v.inputs.size(); ++j) os << (j ? ", " : "") << v.inputs[j];
    os << " -> " << v.residual << "\n";
  }
  if (r.violations.size() > kMaxListedViolations) {
    os << "  ... " << r.violations.size() - kMaxListedViolations << " more\n";
  }
}

int finish(const Global& g, const Json& doc, const std::string& text) {
  if (g.output == "json") {
    std::cout << serialize(doc);
  } else {
    std::cout << text;
  }
  return doc["passed"].get<bool>() ? kExitPassed : kExitFailed;
}

// ---- jacobi ------------------------------------------------------------

struct AlgebraArgs {
  std::string algebra = "W";
  std::string s = "0";
  std::string rho;
  int window = 6;
};

void add_algebra_options(CLI::App* cmd, AlgebraArgs& args) {
  cmd->add_option("--algebra", args.algebra, "Vir, W, SV or D")->capture_default_str();
  cmd->add_option("--s", args.s, "0 or 1/2")->capture_default_str();
  cmd->add_option("--rho", args.rho, "twisting parameter (W, D)");
}

AlgebraSpec algebra_from(const AlgebraArgs& args) {
  const auto name = algebra_from_name(args.algebra);
  if (!name) throw ParameterError("unknown algebra '" + args.algebra + "'");
  std::optional<Rational> rho = parse_opt(args.rho);
  if (!rho && (*name == AlgebraName::W || *name == AlgebraName::D)) rho = Rational(0);
  return make_algebra(*name, Rational::parse(args.s), rho);
}

Json algebra_params(const AlgebraArgs& args, const AlgebraSpec& alg) {
  return Json{{"algebra", algebra_name(alg.name)},
              {"s", alg.s.to_string()},
              {"rho", alg.rho ? Json(alg.rho->to_string()) : Json(nullptr)},
              {"window", args.window}};
}

int cmd_jacobi(const Global& g, const AlgebraArgs& args) {
  const AlgebraSpec alg = algebra_from(args);
  const CheckReport anti = check_antisymmetry(alg, args.window);
  const CheckReport jac = check_jacobi(alg, args.window);
  const bool ok = anti.passed() && jac.passed();
  const Json doc = make_document("jacobi", algebra_params(args, alg), ok,
                                 Json{{"algebra", alg.display_name()},
                                      {"antisymmetry", to_json(anti)},
                                      {"jacobi", to_json(jac)}});
  std::ostringstream text;
  text << alg.display_name() << ", window " << args.window << "\n";
  print_report(text, "antisymmetry", anti);
  print_report(text, "jacobi", jac);
  return finish(g, doc, text.str());
}

// ---- cocycle -----------------------------------------------------------

int cmd_cocycle(const Global& g, const AlgebraArgs& args, const std::string& name_text) {
  const auto name = cocycle_from_name(name_text);
  if (!name) throw ParameterError("unknown cocycle '" + name_text + "'");
  const AlgebraSpec alg = algebra_from(args);
  const CheckReport report = check_cocycle(*name, alg, args.window);
  Json params = algebra_params(args, alg);
  params["cocycle"] = cocycle_name(*name);
  const Json doc = make_document("cocycle", params, report.passed(),
                                 Json{{"algebra", alg.display_name()}, {"report", to_json(report)}});
  std::ostringstream text;
  text << cocycle_name(*name) << " on " << alg.display_name() << ", window " << args.window << "\n";
  print_report(text, "cocycle identity", report);
  return finish(g, doc, text.str());
}

// ---- delta -------------------------------------------------------------

struct DeltaArgs {
  bool print = false;
  bool check_paper = false;
  bool specialize_s0 = false;
};

int cmd_delta(const Global& g, const DeltaArgs& args) {
  const ClassificationData data = compute_delta();
  Json details = Json::object();
  std::ostringstream text;
  bool ok = true;
  const MultiPoly target = args.specialize_s0 ? specialize_s0(data) : data.delta;
  const bool print = args.print || !args.check_paper;
  if (print) {
    details["polynomial"] = canonical_string(target);
    text << canonical_string(target) << "\n";
  }
  if (args.check_paper && args.specialize_s0) {
    const S0Certificate cert = certify_s0_display(target);
    ok = cert.difference.is_zero();
    details["matches_display"] = ok;
    details["prefactor_divides"] = cert.prefactor_divides;
    details["difference"] = canonical_string(cert.difference);
    text << "s = 0 display: " << (ok ? "exact match" : "MISMATCH") << "\n";
    if (!ok) text << "difference: " << canonical_string(cert.difference) << "\n";
  } else if (args.check_paper) {
    const FactorizationCertificate cert = certify_factorization(data);
    ok = cert.factorization_holds() && cert.difference.is_zero();
    details["factorization_holds"] = cert.factorization_holds();
    details["divisible_by_first_factor"] = cert.divisible_by_first_factor;
    details["divisible_by_second_factor"] = cert.divisible_by_second_factor;
    details["divisible_by_m6"] = cert.divisible_by_m6;
    Json rows = Json::array();
    text << "factorization (b'-b+rho)(1+b-b'-rho) m^6 (d1 m^2 + d2 (a+k) p + d3 p^2): "
         << (cert.factorization_holds() ? "holds" : "FAILS") << "\n";
    for (const auto& c : cert.comparisons) {
      rows.push_back(Json{{"name", c.name},
                          {"exact_match", c.exact_match},
                          {"negated_match", c.negated_match},
                          {"computed", canonical_string(c.computed)},
                          {"difference", canonical_string(c.difference)}});
      text << c.name << ": " << (c.exact_match ? "exact match" : c.negated_match ? "matches up to sign" : "MISMATCH")
           << "\n";
      if (!c.exact_match) text << "  difference: " << canonical_string(c.difference) << "\n";
    }
    details["coefficients"] = rows;
    details["difference"] = canonical_string(cert.difference);
  }
  const Json params{{"print", print}, {"check_paper", args.check_paper}, {"specialize_s0", args.specialize_s0}};
  return finish(g, make_document("delta", params, ok, details), text.str());
}

// ---- classify ----------------------------------------------------------

struct ClassifyArgs {
  std::string s = "1/2";
  int max_num = 4;
  int max_den = 4;
  bool expect_paper = false;
};

int cmd_classify(const Global& g, const ClassifyArgs& args) {
  const Rational s = Rational::parse(args.s);
  const auto cases = enumerate_cases(s, args.max_num, args.max_den);
  Json emitted = Json::array();
  std::ostringstream text;
  for (const auto& c : cases) {
    emitted.push_back(to_json(c));
    text << c.describe() << "\n";
  }
  Json details{{"cases", emitted}};
  bool ok = true;
  if (args.expect_paper) {
    const PaperComparison cmp = compare_with_printed(s, cases, args.max_num, args.max_den);
    ok = cmp.passed();
    details["comparison"] = to_json(cmp);
    text << "printed list: " << (ok ? "match" : "MISMATCH") << " (" << cmp.matched.size() << " matched)\n";
    for (const auto& c : cmp.missing) text << "  missing: " << c.describe() << "\n";
    for (const auto& c : cmp.extra) text << "  extra: " << c.describe() << "\n";
    for (const auto& c : cmp.outside_bounds) text << "  outside bounds: " << c.describe() << "\n";
  }
  const Json params{{"s", s.to_string()},
                    {"max_num", args.max_num},
                    {"max_den", args.max_den},
                    {"expect_paper", args.expect_paper}};
  return finish(g, make_document("classify", params, ok, details), text.str());
}

// ---- module-check / cyclicity ------------------------------------------

struct ModuleArgs {
  std::string kind = "Aab";
  std::string a = "0", b = "0", bp, c = "0", c1 = "0", c2 = "0";
  std::string rho;
  std::string host;
  std::string s;
  int window = 4;
  bool cyclicity = false;
};

void add_module_options(CLI::App* cmd, ModuleArgs& args) {
  cmd->add_option("--kind", args.kind, "Aab, Aa, Ba, Aabc or Aabc1c2")->capture_default_str();
  cmd->add_option("--a", args.a)->capture_default_str();
  cmd->add_option("--b", args.b)->capture_default_str();
  cmd->add_option("--bp", args.bp, "b' on half-integer indices (Aabc1c2); defaults to b");
  cmd->add_option("--c", args.c)->capture_default_str();
  cmd->add_option("--c1", args.c1)->capture_default_str();
  cmd->add_option("--c2", args.c2)->capture_default_str();
  cmd->add_option("--rho", args.rho, "twisting parameter of a W host (default 0)");
  cmd->add_option("--host", args.host, "Vir or W (default from kind)");
  cmd->add_option("--s", args.s, "host shift, 0 or 1/2 (default from kind)");
}

ModuleSpec module_from(const ModuleArgs& args) {
  const auto kind = module_kind_from_name(args.kind);
  if (!kind) throw ParameterError("unknown module kind '" + args.kind + "'");
  const bool y_kind = *kind == ModuleKind::Aabc || *kind == ModuleKind::Aabc1c2;
  const std::string host_name = args.host.empty() ? (y_kind ? "W" : "Vir") : args.host;
  const auto host_alg = algebra_from_name(host_name);
  if (!host_alg) throw ParameterError("unknown host '" + host_name + "'");
  const Rational s = parse_or(args.s, *kind == ModuleKind::Aabc1c2 ? Rational(1, 2) : Rational(0));
  std::optional<Rational> rho = parse_opt(args.rho);
  if (!rho && (*host_alg == AlgebraName::W || *host_alg == AlgebraName::D)) rho = Rational(0);
  const AlgebraSpec host = make_algebra(*host_alg, s, rho);
  ModuleParams params;
  params.a = Rational::parse(args.a);
  params.b = Rational::parse(args.b);
  params.b_prime = parse_opt(args.bp);
  params.c = Rational::parse(args.c);
  params.c1 = Rational::parse(args.c1);
  params.c2 = Rational::parse(args.c2);
  return make_module(*kind, params, host);
}

Json module_params(const ModuleSpec& mod, int window) {
  return Json{{"kind", module_kind_name(mod.kind)},
              {"a", mod.a.to_string()},
              {"b", mod.b.to_string()},
              {"bp", mod.b_prime.to_string()},
              {"c", mod.c.to_string()},
              {"c1", mod.c1.to_string()},
              {"c2", mod.c2.to_string()},
              {"host", mod.host.display_name()},
              {"window", window}};
}

std::optional<bool> simplicity_or_none(const ModuleSpec& mod) {
  if (mod.kind == ModuleKind::Aa || mod.kind == ModuleKind::Ba) return std::nullopt;
  return simplicity_criterion(mod);
}

int cmd_module_check(const Global& g, const ModuleArgs& args) {
  const ModuleSpec mod = module_from(args);
  std::ostringstream text;
  text << mod.display_name() << ", window " << args.window << "\n";
  const CheckReport axiom = check_module_axiom(mod, args.window);
  print_report(text, "module axiom", axiom);
  Json details{{"module", mod.display_name()}, {"axiom", to_json(axiom)}};
  bool ok = axiom.passed();
  if (args.cyclicity) {
    const CheckReport cyc = check_window_cyclic(mod, args.window);
    print_report(text, "window cyclicity", cyc);
    details["cyclicity"] = to_json(cyc);
    ok = ok && cyc.passed();
  }
  if (const auto simple = simplicity_or_none(mod)) {
    details["simplicity_criterion"] = *simple;
    text << "simplicity criterion: " << (*simple ? "simple" : "not simple") << "\n";
  }
  Json params = module_params(mod, args.window);
  params["cyclicity"] = args.cyclicity;
  return finish(g, make_document("module-check", params, ok, details), text.str());
}

int cmd_cyclicity(const Global& g, const ModuleArgs& args) {
  const ModuleSpec mod = module_from(args);
  const CheckReport cyc = check_window_cyclic(mod, args.window);
  std::ostringstream text;
  text << mod.display_name() << ", window " << args.window << "\n";
  print_report(text, "window cyclicity", cyc);
  Json details{{"module", mod.display_name()}, {"cyclicity", to_json(cyc)}};
  if (const auto simple = simplicity_or_none(mod)) {
    details["simplicity_criterion"] = *simple;
    text << "simplicity criterion: " << (*simple ? "simple" : "not simple") << "\n";
  }
  return finish(g, make_document("cyclicity", module_params(mod, args.window), cyc.passed(), details), text.str());
}

// ---- reproduce ---------------------------------------------------------

int cmd_reproduce(const Global& g, const std::vector<std::string>& only) {
  const Json doc = reproduce_document({only, g.seed});
  std::ostringstream text;
  for (const auto& c : doc["details"]["criteria"]) {
    text << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["id"].get<int>() << " "
         << c["title"].get<std::string>() << " [" << c["status"].get<std::string>() << "]\n";
  }
  text << (doc["passed"].get<bool>() ? "all selected criteria passed" : "some criteria FAILED") << "\n";
  return finish(g, doc, text.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification tools for twisted Virasoro-type algebras and their intermediate-series modules"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--output", g.output, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized sweeps")->capture_default_str();

  AlgebraArgs jacobi_args;
  auto* jacobi = app.add_subcommand("jacobi", "antisymmetry and Jacobi identity on a window");
  add_algebra_options(jacobi, jacobi_args);
  jacobi->add_option("--window", jacobi_args.window)->capture_default_str();

  AlgebraArgs cocycle_args;
  cocycle_args.window = 8;
  std::string cocycle_name_text = "gamma0";
  auto* cocycle = app.add_subcommand("cocycle", "2-cocycle identity on a window");
  add_algebra_options(cocycle, cocycle_args);
  cocycle->add_option("--name", cocycle_name_text, "gamma0, gamma01, gamma02 or gamma11")->capture_default_str();
  cocycle->add_option("--window", cocycle_args.window)->capture_default_str();

  DeltaArgs delta_args;
  auto* delta = app.add_subcommand("delta", "determinant of the linear system");
  delta->add_flag("--print", delta_args.print);
  delta->add_flag("--check-paper", delta_args.check_paper);
  delta->add_flag("--specialize-s0", delta_args.specialize_s0);

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "scan (rho, b, b') for solutions");
  classify->add_option("--s", classify_args.s)->capture_default_str();
  classify->add_option("--max-num", classify_args.max_num)->capture_default_str();
  classify->add_option("--max-den", classify_args.max_den)->capture_default_str();
  classify->add_flag("--expect-paper", classify_args.expect_paper);

  ModuleArgs module_args;
  auto* module_check = app.add_subcommand("module-check", "module axiom on a window");
  add_module_options(module_check, module_args);
  module_check->add_option("--window", module_args.window)->capture_default_str();
  module_check->add_flag("--cyclicity", module_args.cyclicity);

  ModuleArgs cyclicity_args;
  cyclicity_args.window = 6;
  auto* cyclicity = app.add_subcommand("cyclicity", "window-cyclicity of each basis vector");
  add_module_options(cyclicity, cyclicity_args);
  cyclicity->add_option("--window", cyclicity_args.window)->capture_default_str();

  std::vector<std::string> only;
  auto* reproduce = app.add_subcommand("reproduce", "run the full verification suite");
  reproduce->add_option("--only", only, "criterion groups or ids");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*jacobi) return cmd_jacobi(g, jacobi_args);
    if (*cocycle) return cmd_cocycle(g, cocycle_args, cocycle_name_text);
    if (*delta) return cmd_delta(g, delta_args);
    if (*classify) return cmd_classify(g, classify_args);
    if (*module_check) return cmd_module_check(g, module_args);
    if (*cyclicity) return cmd_cyclicity(g, cyclicity_args);
    if (*reproduce) return cmd_reproduce(g, only);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
