#include "virhc/reference_data.hpp"

namespace virhc::reference {

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

MultiPoly sq(const MultiPoly& x) { return x * x; }
MultiPoly cube(const MultiPoly& x) { return x * x * x; }

}  // namespace

MultiPoly delta1() {
  const Symbols s;
  const auto& [a, b, bp, rho, p, k, m] = s;
  return 4 * (-1 + b + bp) * sq(rho) *
         (-sq(b) + cube(b) - 2 * bp + sq(b) * bp + 3 * sq(bp) - b * sq(bp) - cube(bp) - b * rho - bp * rho +
          2 * b * bp * rho - b * sq(rho) + bp * sq(rho));
}

MultiPoly delta2() {
  const Symbols s;
  const auto& [a, b, bp, rho, p, k, m] = s;
  return -2 * rho * (1 + rho) *
         (-2 + 5 * b - 3 * sq(b) + 7 * bp - 6 * b * bp - 3 * sq(bp) - rho + 2 * b * rho - 2 * bp * rho + sq(rho));
}

MultiPoly delta3() {
  const Symbols s;
  const auto& [a, b, bp, rho, p, k, m] = s;
  return (-2 + b - bp) * (-1 + b + bp) * (-b + sq(b) - 3 * bp + 2 * b * bp + sq(bp)) +
         (2 - 10 * b + 10 * sq(b) - 2 * cube(b) - 10 * bp + 18 * b * bp - 6 * sq(b) * bp + 8 * sq(bp) -
          6 * b * sq(bp) - 2 * cube(bp)) *
             rho +
         (3 - 10 * b + 6 * sq(b) - 2 * bp + 6 * b * bp) * sq(rho) + (-2 * b + 2 * bp) * cube(rho) -
         sq(rho) * sq(rho);
}

MultiPoly s0_prefactor() {
  const Symbols s;
  return (s.rho - 1) * s.rho * (1 + s.rho) * pow(s.m, 6);
}

MultiPoly s0_display() {
  const Symbols s;
  const auto& [a, b, bp, rho, p, k, m] = s;
  const MultiPoly cubic_b = 8 * b * (2 * b - 1) * (b - 1);
  const MultiPoly quad = sq(rho) - rho - 12 * sq(b) + 12 * b - 2;
  return s0_prefactor() *
         (sq(rho) * cubic_b * sq(m) - 2 * rho * quad * (a + k) * p - (cubic_b + rho * quad) * sq(p));
}

std::vector<PrintedCase> printed_cases_half() {
  const Rational half(1, 2);
  const Rational three_halves(3, 2);
  return {
      // (i)
      {Rational(0), Relation::bp_equals_b, {}, {}},
      {Rational(0), Relation::sum_is_one, {}, {}},
      // (ii)
      {Rational(1), Relation::bp_equals_b, {}, {}},
      // (iii)
      {half, Relation::bp_is_b_plus_half, {}, {}},
      {half, Relation::bp_is_b_minus_half, {}, {}},
      // (iv)
      {three_halves, Relation::point, Rational(0), half},
      {three_halves, Relation::point, half, Rational(1)},
      {three_halves, Relation::point, half, Rational(0)},
      {three_halves, Relation::point, Rational(1), half},
      // (v), printed with the same rho as (iv)
      {three_halves, Relation::point, Rational(0), Rational(1)},
      {three_halves, Relation::point, Rational(1), Rational(0)},
  };
}

std::vector<PrintedCase> printed_cases_integral() {
  return {
      {Rational(0), Relation::bp_equals_b, {}, {}},
      {Rational(1), Relation::bp_equals_b, {}, {}},
      {Rational(2), Relation::point, Rational(0), Rational(0)},
      {Rational(2), Relation::point, Rational(1), Rational(1)},
  };
}

}  // namespace virhc::reference
