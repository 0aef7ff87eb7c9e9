#include "virhc/classification.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace virhc {

namespace {

struct Symbols {
  MultiPoly a = MultiPoly::variable(Var::a);
  MultiPoly b = MultiPoly::variable(Var::b);
  MultiPoly bp = MultiPoly::variable(Var::bp);
  MultiPoly rho = MultiPoly::variable(Var::rho);
  MultiPoly p = MultiPoly::variable(Var::p);
  MultiPoly k = MultiPoly::variable(Var::k);
  MultiPoly m = MultiPoly::variable(Var::m);
};

MultiPoly swap_b_bp(const MultiPoly& x) {
  // n never occurs in these polynomials, so it can hold b during the swap.
  return x.substitute(Var::b, MultiPoly::variable(Var::n))
      .substitute(Var::bp, MultiPoly::variable(Var::b))
      .substitute(Var::n, MultiPoly::variable(Var::bp));
}

bool only_parameters(const MultiPoly& x) {
  return !x.contains(Var::a) && !x.contains(Var::k) && !x.contains(Var::p) && !x.contains(Var::m) &&
         !x.contains(Var::n) && !x.contains(Var::c);
}

// The vanishing condition in one orientation: linear product, or all three coefficients.
struct ConditionPolys {
  MultiPoly linear;
  std::array<MultiPoly, 3> deltas;

  [[nodiscard]] std::optional<SatisfiedBy> at(const Rational& rho, const Rational& b, const Rational& bp) const {
    const Assignment point{{Var::rho, rho}, {Var::b, b}, {Var::bp, bp}};
    if (eval(linear, point).is_zero()) return SatisfiedBy::linear_factor;
    for (const auto& d : deltas) {
      if (!eval(d, point).is_zero()) return std::nullopt;
    }
    return SatisfiedBy::delta_vanishing;
  }
};

MultiPoly line_image(Relation r) {
  const MultiPoly b = MultiPoly::variable(Var::b);
  switch (r) {
    case Relation::bp_equals_b: return b;
    case Relation::sum_is_one: return 1 - b;
    case Relation::bp_is_b_plus_half: return b + Rational(1, 2);
    case Relation::bp_is_b_minus_half: return b - Rational(1, 2);
    case Relation::point: break;
  }
  throw std::logic_error("a point has no line image");
}

bool on_line(Relation r, const Rational& b, const Rational& bp) {
  switch (r) {
    case Relation::bp_equals_b: return bp == b;
    case Relation::sum_is_one: return b + bp == Rational(1);
    case Relation::bp_is_b_plus_half: return bp == b + Rational(1, 2);
    case Relation::bp_is_b_minus_half: return bp == b - Rational(1, 2);
    case Relation::point: break;
  }
  return false;
}

bool identically_zero_on_line(const MultiPoly& x, const Rational& rho, Relation r) {
  const std::array<std::pair<Var, Rational>, 1> fix{{{Var::rho, rho}}};
  return x.partial_eval(fix).substitute(Var::bp, line_image(r)).is_zero();
}

std::optional<SatisfiedBy> holds_on_line(const ConditionPolys& c, const Rational& rho, Relation r) {
  if (identically_zero_on_line(c.linear, rho, r)) return SatisfiedBy::linear_factor;
  for (const auto& d : c.deltas) {
    if (!identically_zero_on_line(d, rho, r)) return std::nullopt;
  }
  return SatisfiedBy::delta_vanishing;
}

struct Conditions {
  ConditionPolys first;
  ConditionPolys swapped;
};

const Conditions& conditions() {
  static const Conditions instance = [] {
    const ConditionSystem& sys = condition_system();
    Conditions c;
    c.first = {sys.linear, {sys.deltas.m2, sys.deltas.akp, sys.deltas.p2}};
    c.swapped = {swap_b_bp(sys.linear),
                 {swap_b_bp(sys.deltas.m2), swap_b_bp(sys.deltas.akp), swap_b_bp(sys.deltas.p2)}};
    return c;
  }();
  return instance;
}

// Product-grid test for a polynomial in a, m, p, k. A polynomial whose degree in
// each variable is below the number of grid values on that axis vanishes
// identically iff it vanishes on the grid.
bool vanishes_on_test_cube(const MultiPoly& x) {
  static const std::vector<Rational> a_values{Rational(0), Rational(1)};
  static const std::vector<Rational> cube{-3, -2, -1, 0, 1, 2, 3};
  static const std::vector<Rational> p_values{-3, -2, -1, 1, 2, 3};
  const std::array<std::pair<Var, std::size_t>, 4> axes{
      {{Var::a, a_values.size()}, {Var::m, cube.size()}, {Var::p, p_values.size()}, {Var::k, cube.size()}}};
  for (const auto& [v, count] : axes) {
    if (static_cast<std::size_t>(x.degree_in(v)) >= count) {
      throw std::logic_error("test cube too small for degree " + std::to_string(x.degree_in(v)) + " in " +
                             std::string(var_name(v)));
    }
  }
  for (const auto& a : a_values) {
    for (const auto& m : cube) {
      for (const auto& p : p_values) {
        for (const auto& k : cube) {
          const Assignment point{{Var::a, a}, {Var::m, m}, {Var::p, p}, {Var::k, k}};
          if (!eval(x, point).is_zero()) return false;
        }
      }
    }
  }
  return true;
}

ClassificationCase from_printed(const reference::PrintedCase& pc) {
  ClassificationCase c;
  c.rho = pc.rho;
  c.relation = pc.relation;
  if (pc.relation == Relation::point) {
    c.b = pc.b;
    c.bp = pc.bp;
  }
  return c;
}

bool case_less(const ClassificationCase& x, const ClassificationCase& y) {
  if (x.rho != y.rho) return x.rho < y.rho;
  if (x.relation != y.relation) return x.relation < y.relation;
  if (x.b != y.b) return x.b < y.b;
  return x.bp < y.bp;
}

std::vector<ClassificationCase> enumerate_half(const std::vector<Rational>& grid) {
  const Conditions& cond = conditions();
  std::vector<ClassificationCase> out;
  for (const auto& rho : grid) {
    if (rho == Rational(-1)) continue;
    std::vector<std::pair<Rational, Rational>> hits;
    for (const auto& b : grid) {
      for (const auto& bp : grid) {
        if (cond.first.at(rho, b, bp) && cond.swapped.at(rho, b, bp)) hits.emplace_back(b, bp);
      }
    }
    if (hits.empty()) continue;
    std::vector<Relation> families;
    for (Relation r : {Relation::bp_equals_b, Relation::sum_is_one, Relation::bp_is_b_plus_half,
                       Relation::bp_is_b_minus_half}) {
      const bool touched = std::any_of(hits.begin(), hits.end(),
                                       [&](const auto& h) { return on_line(r, h.first, h.second); });
      if (!touched) continue;
      const auto first = holds_on_line(cond.first, rho, r);
      const auto swapped = holds_on_line(cond.swapped, rho, r);
      if (!first || !swapped) continue;
      families.push_back(r);
      out.push_back({rho, r, std::nullopt, std::nullopt, *first, *swapped});
    }
    for (const auto& [b, bp] : hits) {
      const bool covered = std::any_of(families.begin(), families.end(),
                                       [&](Relation r) { return on_line(r, b, bp); });
      if (covered) continue;
      out.push_back({rho, Relation::point, b, bp, *cond.first.at(rho, b, bp), *cond.swapped.at(rho, b, bp)});
    }
  }
  return out;
}

std::vector<ClassificationCase> enumerate_integral(const std::vector<Rational>& grid) {
  const ConditionSystem& sys = condition_system();
  std::vector<ClassificationCase> out;
  for (const auto& rho : grid) {
    if (rho == Rational(-1)) continue;
    const std::array<std::pair<Var, Rational>, 1> fix_rho{{{Var::rho, rho}}};
    const MultiPoly at_rho = sys.s0_reduced.partial_eval(fix_rho);
    const SatisfiedBy how = (rho * (1 - rho)).is_zero() ? SatisfiedBy::linear_factor : SatisfiedBy::delta_vanishing;
    std::vector<Rational> hits;
    for (const auto& b : grid) {
      const std::array<std::pair<Var, Rational>, 1> fix_b{{{Var::b, b}}};
      if (vanishes_on_test_cube(at_rho.partial_eval(fix_b))) hits.push_back(b);
    }
    if (hits.empty()) continue;
    if (at_rho.is_zero()) {
      out.push_back({rho, Relation::bp_equals_b, std::nullopt, std::nullopt, how, how});
      continue;
    }
    for (const auto& b : hits) out.push_back({rho, Relation::point, b, b, how, how});
  }
  return out;
}

}  // namespace

FunctionalEquation build_functional_equation() {
  const Symbols s;
  return {s.a + s.p + s.k + s.bp * s.m, -(s.a + s.k + s.b * s.m), s.p - s.m * s.rho};
}

LinearSystem3 build_linear_system() {
  const Symbols s;
  const auto& [a, b, bp, rho, p, k, m] = s;
  LinearSystem3 sys;
  auto& row1 = sys.matrix[0];
  row1[0] = (p - 2 * m * rho) * (a + k - m + b * m) * (a + k + b * m) +
            (p - m * rho) * (m + p - m * rho) * (a + k - m + 2 * b * m);
  row1[1] = -2 * (p - 2 * m * rho) * (a + k - m + b * m) * (a + k + p + bp * m);
  row1[2] = (p - 2 * m * rho) * (a + k - m + p + bp * m) * (a + k + p + bp * m) -
            (p - m * rho) * (m + p - m * rho) * (a + k - m + p + 2 * bp * m);

  auto& row2 = sys.matrix[1];
  row2[0] = (p + 2 * m * rho) * (a + k + m + p - bp * m) * (a + k + p - bp * m) -
            (p + m * rho) * (-m + p + m * rho) * (a + k + m + p - 2 * bp * m);
  row2[1] = -2 * (p + 2 * m * rho) * (a + k + m - b * m) * (a + k + p - bp * m);
  row2[2] = (a + k + m - 2 * b * m) * (p + m * rho) * (-m + p + m * rho) +
            (p + 2 * m * rho) * (a + k + m - b * m) * (a + k - b * m);

  auto& row3 = sys.matrix[2];
  row3[0] = (a + k + b * m) * (a + k + p + m - bp * m);
  row3[1] = -((a + k + p - bp * m) * (a + k + p - m + bp * m) - (p + m * rho) * (-m + p - m * rho) +
              (a + k + b * m) * (a + k + m - b * m));
  row3[2] = (a + k - b * m) * (a + k + p - m + bp * m);
  return sys;
}

ClassificationData compute_delta() {
  const Symbols s;
  ClassificationData data;
  data.delta = det3(build_linear_system().matrix);
  data.delta1 = reference::delta1();
  data.delta2 = reference::delta2();
  data.delta3 = reference::delta3();
  data.linear_factors = {s.bp - s.b + s.rho, 1 + s.b - s.bp - s.rho};
  return data;
}

std::optional<ShapeCoefficients> split_shape(const MultiPoly& q) {
  const Symbols s;
  ShapeCoefficients shape;
  shape.m2 = q.coefficient(Var::p, 0).coefficient(Var::m, 2);
  shape.p2 = q.coefficient(Var::p, 2);
  const MultiPoly linear_in_p = q.coefficient(Var::p, 1);
  shape.akp = linear_in_p.coefficient(Var::a, 1);
  if (!only_parameters(shape.m2) || !only_parameters(shape.akp) || !only_parameters(shape.p2)) {
    return std::nullopt;
  }
  const MultiPoly rebuilt =
      shape.m2 * s.m * s.m + shape.akp * (s.a + s.k) * s.p + shape.p2 * s.p * s.p;
  if (rebuilt != q) return std::nullopt;
  return shape;
}

FactorizationCertificate certify_factorization(const ClassificationData& data) {
  const Symbols s;
  FactorizationCertificate cert;
  const MultiPoly m6 = pow(s.m, 6);
  const DivRem by_first = divrem(data.delta, data.linear_factors.first);
  cert.divisible_by_first_factor = by_first.remainder.is_zero();
  const DivRem by_second = divrem(by_first.quotient, data.linear_factors.second);
  cert.divisible_by_second_factor = by_second.remainder.is_zero();
  const DivRem by_m6 = divrem(by_second.quotient, m6);
  cert.divisible_by_m6 = by_m6.remainder.is_zero();
  if (cert.divisible_by_first_factor && cert.divisible_by_second_factor && cert.divisible_by_m6) {
    cert.quotient = by_m6.quotient;
    cert.shape = split_shape(cert.quotient);
  }

  const MultiPoly printed_shape =
      data.delta1 * s.m * s.m + data.delta2 * (s.a + s.k) * s.p + data.delta3 * s.p * s.p;
  cert.difference = data.delta - data.linear_factors.first * data.linear_factors.second * m6 * printed_shape;

  if (cert.shape) {
    const std::array<std::pair<const char*, std::pair<const MultiPoly*, const MultiPoly*>>, 3> rows{{
        {"delta1", {&cert.shape->m2, &data.delta1}},
        {"delta2", {&cert.shape->akp, &data.delta2}},
        {"delta3", {&cert.shape->p2, &data.delta3}},
    }};
    for (const auto& [name, polys] : rows) {
      CoefficientComparison cmp;
      cmp.name = name;
      cmp.computed = *polys.first;
      cmp.reference = *polys.second;
      cmp.difference = cmp.computed - cmp.reference;
      cmp.exact_match = cmp.difference.is_zero();
      cmp.negated_match = (cmp.computed + cmp.reference).is_zero();
      cert.comparisons.push_back(std::move(cmp));
    }
  }

  cert.report.cases_checked = 1;
  if (!cert.difference.is_zero()) {
    cert.report.violations.push_back(
        {{"delta", "factored reference"}, {}, canonical_string(cert.difference), std::nullopt});
  }
  return cert;
}

MultiPoly specialize_s0(const ClassificationData& data) {
  return data.delta.substitute(Var::bp, MultiPoly::variable(Var::b));
}

S0Certificate certify_s0_display(const MultiPoly& specialized) {
  S0Certificate cert;
  cert.specialized = specialized;
  cert.reference = reference::s0_display();
  cert.difference = specialized - cert.reference;
  const DivRem qr = divrem(specialized, reference::s0_prefactor());
  cert.prefactor_divides = qr.remainder.is_zero();
  if (cert.prefactor_divides) cert.quotient = qr.quotient;
  cert.report.cases_checked = 1;
  if (!cert.difference.is_zero()) {
    cert.report.violations.push_back(
        {{"specialized delta", "reference display"}, {}, canonical_string(cert.difference), std::nullopt});
  }
  return cert;
}

const ConditionSystem& condition_system() {
  static const ConditionSystem instance = [] {
    const ClassificationData data = compute_delta();
    const FactorizationCertificate cert = certify_factorization(data);
    if (!cert.factorization_holds()) {
      throw std::logic_error("determinant does not have the expected factorization");
    }
    ConditionSystem sys;
    sys.linear = data.linear_factors.first * data.linear_factors.second;
    sys.deltas = *cert.shape;
    sys.s0_reduced = exact_divide(specialize_s0(data), pow(MultiPoly::variable(Var::m), 6));
    return sys;
  }();
  return instance;
}

std::pair<bool, bool> condition_pair_holds(const Rational& rho, const Rational& b, const Rational& bp) {
  const Conditions& c = conditions();
  return {c.first.at(rho, b, bp).has_value(), c.swapped.at(rho, b, bp).has_value()};
}

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::bp_equals_b: return "bp = b";
    case Relation::sum_is_one: return "b + bp = 1";
    case Relation::bp_is_b_plus_half: return "bp = b + 1/2";
    case Relation::bp_is_b_minus_half: return "bp = b - 1/2";
    case Relation::point: return "point";
  }
  return "";
}

std::string_view satisfied_by_name(SatisfiedBy s) {
  return s == SatisfiedBy::linear_factor ? "linear_factor" : "delta_vanishing";
}

std::string ClassificationCase::describe() const {
  std::string out = "rho=" + rho.to_string() + ": ";
  if (relation == Relation::point) {
    return out + "(b, bp) = (" + b->to_string() + ", " + bp->to_string() + ")";
  }
  return out + std::string(relation_name(relation));
}

std::vector<Rational> rational_grid(int max_num, int max_den) {
  if (max_num < 1 || max_den < 1) throw ParameterError("scan bounds must be >= 1");
  std::set<Rational> values;
  for (int den = 1; den <= max_den; ++den) {
    for (int num = -max_num; num <= max_num; ++num) values.insert(Rational(num, den));
  }
  return {values.begin(), values.end()};
}

std::vector<ClassificationCase> enumerate_cases(const Rational& s, int max_num, int max_den) {
  const auto grid = rational_grid(max_num, max_den);
  std::vector<ClassificationCase> out;
  if (s.is_zero()) {
    out = enumerate_integral(grid);
  } else if (s == Rational(1, 2)) {
    out = enumerate_half(grid);
  } else {
    throw ParameterError("s must be 0 or 1/2, got " + s.to_string());
  }
  std::sort(out.begin(), out.end(), case_less);
  return out;
}

PaperComparison compare_with_printed(const Rational& s, const std::vector<ClassificationCase>& emitted,
                                     int max_num, int max_den) {
  const auto grid = rational_grid(max_num, max_den);
  const auto on_grid = [&](const Rational& x) { return std::binary_search(grid.begin(), grid.end(), x); };
  const auto printed = s.is_zero() ? reference::printed_cases_integral() : reference::printed_cases_half();
  PaperComparison cmp;
  std::vector<ClassificationCase> expected;
  for (const auto& pc : printed) {
    const ClassificationCase c = from_printed(pc);
    const bool within = on_grid(c.rho) && (c.relation != Relation::point || (on_grid(*c.b) && on_grid(*c.bp)));
    if (!within) {
      cmp.outside_bounds.push_back(c);
      continue;
    }
    expected.push_back(c);
    const auto it = std::find_if(emitted.begin(), emitted.end(), [&](const auto& e) { return e.same_case(c); });
    if (it != emitted.end()) {
      cmp.matched.push_back(*it);
    } else {
      cmp.missing.push_back(c);
    }
  }
  for (const auto& e : emitted) {
    const bool known = std::any_of(expected.begin(), expected.end(), [&](const auto& c) { return c.same_case(e); });
    if (!known) cmp.extra.push_back(e);
  }
  return cmp;
}

MultiPoly constant_solution_residual(const Rational& rho, const Rational& c) {
  const FunctionalEquation eq = build_functional_equation();
  const MultiPoly value(c);
  const MultiPoly rhs_minus_lhs = eq.coeff_f_mpk * value - (eq.coeff_f_pk * value + eq.coeff_f_pmk * value);
  const std::array<std::pair<Var, Rational>, 1> fix{{{Var::rho, rho}}};
  return rhs_minus_lhs.substitute(Var::bp, MultiPoly::variable(Var::b)).partial_eval(fix);
}

bool check_constant_solution(const Rational& rho, const Rational& c) {
  return constant_solution_residual(rho, c).is_zero();
}

Rational residual(const FunctionalEquation& eq, const FunctionTable& table, const EquationPoint& point) {
  const auto lookup = [&](const Rational& x, const Rational& y) {
    const auto it = table.find({x, y});
    if (it == table.end()) {
      throw ParameterError("table has no entry f(" + x.to_string() + "," + y.to_string() + ")");
    }
    return it->second;
  };
  const Assignment at{{Var::a, point.a},     {Var::b, point.b}, {Var::bp, point.bp}, {Var::rho, point.rho},
                      {Var::m, point.m},     {Var::p, point.p}, {Var::k, point.k}};
  const Rational lhs = eval(eq.coeff_f_pk, at) * lookup(point.p, point.k) +
                       eval(eq.coeff_f_pmk, at) * lookup(point.p, point.m + point.k);
  const Rational rhs = eval(eq.coeff_f_mpk, at) * lookup(point.m + point.p, point.k);
  return lhs - rhs;
}

}  // namespace virhc
