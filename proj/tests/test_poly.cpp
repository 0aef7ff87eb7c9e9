#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "virhc/poly.hpp"

using namespace virhc;
using virhc::testing::random_assignment;
using virhc::testing::random_poly;
using virhc::testing::var;

namespace {

const std::vector<Var> kFew = {Var::a, Var::b, Var::m};
const std::vector<Var> kMany = {Var::a, Var::b, Var::bp, Var::rho, Var::p, Var::k, Var::m};

}  // namespace

TEST(Poly, Examples) {
  const MultiPoly m = var(Var::m), b = var(Var::b), bp = var(Var::bp);
  EXPECT_TRUE((m + (-m)).is_zero());
  EXPECT_EQ((b - bp) * (b + bp), b * b - bp * bp);
  EXPECT_EQ(pow(m, 6), m * m * m * m * m * m);
  EXPECT_EQ(pow(m, 0), MultiPoly(1));
  EXPECT_THROW(pow(m, -1), ParameterError);
}

TEST(Poly, CanonicalStringExamples) {
  const MultiPoly m = var(Var::m);
  EXPECT_EQ(canonical_string(MultiPoly()), "0");
  EXPECT_EQ(canonical_string(pow(m, 3) - m), "m^3 + (-1)*m");
  EXPECT_EQ(canonical_string(MultiPoly(Rational(1, 12)) * pow(m, 3)), "(1/12)*m^3");
  EXPECT_EQ(canonical_string(MultiPoly(1)), "1");
  EXPECT_EQ(canonical_string(MultiPoly(-3)), "(-3)");
}

TEST(Poly, MonomialOrderIsGradedThenGreatestVariable) {
  const MultiPoly a = var(Var::a), c = var(Var::c), m = var(Var::m), k = var(Var::k);
  // Degree dominates.
  EXPECT_EQ(canonical_string(c + a * a), "a^2 + c");
  // Same degree: higher power of the greatest variable first.
  EXPECT_EQ(canonical_string(a + c + m), "c + m + a");
  EXPECT_EQ(canonical_string(a * m + k * k + m * m), "m^2 + a*m + k^2");
}

TEST(Poly, EvalExamples) {
  const MultiPoly m = var(Var::m);
  EXPECT_EQ(eval(pow(m, 3) - m, Assignment{{Var::m, 2}}), Rational(6));
  EXPECT_EQ(eval(MultiPoly(), Assignment{}), Rational(0));
  const MultiPoly factor = var(Var::bp) - var(Var::b) + var(Var::rho);
  EXPECT_EQ(eval(factor, Assignment{{Var::b, 0}, {Var::bp, Rational(1, 2)}, {Var::rho, Rational(1, 2)}}), Rational(1));
  EXPECT_THROW(eval(m, Assignment{{Var::a, 1}}), ParameterError);
}

TEST(Poly, DivremExamples) {
  const MultiPoly m = var(Var::m), b = var(Var::b), bp = var(Var::bp);
  const DivRem r1 = divrem(pow(m, 6) * b, m);
  EXPECT_EQ(r1.quotient, pow(m, 5) * b);
  EXPECT_TRUE(r1.remainder.is_zero());
  const DivRem r2 = divrem(b * b - bp * bp, b - bp);
  EXPECT_EQ(r2.quotient, b + bp);
  EXPECT_TRUE(r2.remainder.is_zero());
  EXPECT_THROW(divrem(m, MultiPoly()), ParameterError);
  EXPECT_THROW(exact_divide(m + 1, m), std::domain_error);
}

TEST(Poly, Det3Examples) {
  Matrix3 id{};
  for (std::size_t i = 0; i < 3; ++i) id[i][i] = MultiPoly(1);
  EXPECT_EQ(det3(id), MultiPoly(1));
  Matrix3 diag{};
  diag[0][0] = var(Var::a);
  diag[1][1] = var(Var::b);
  diag[2][2] = var(Var::m);
  EXPECT_EQ(det3(diag), var(Var::a) * var(Var::b) * var(Var::m));
}

TEST(Poly, StructuralQueries) {
  const MultiPoly a = var(Var::a), m = var(Var::m), p = var(Var::p);
  const MultiPoly x = 3 * a * m * m + m * p - 2 * m * m + 5;
  EXPECT_EQ(x.total_degree(), 3);
  EXPECT_EQ(x.degree_in(Var::m), 2);
  EXPECT_EQ(x.degree_in(Var::c), 0);
  EXPECT_EQ(x.coefficient(Var::m, 2), 3 * a - 2);
  EXPECT_EQ(x.coefficient(Var::m, 0), MultiPoly(5));
  EXPECT_EQ(x.substitute(Var::a, p + 1), 3 * (p + 1) * m * m + m * p - 2 * m * m + 5);
  const std::array<std::pair<Var, Rational>, 1> at{{{Var::m, Rational(2)}}};
  EXPECT_EQ(x.partial_eval(at), 12 * a + 2 * p - 3);
  EXPECT_EQ(x.leading_term().second, Rational(3));
}

TEST(Poly, ParseRejectsGarbage) {
  for (const char* bad : {"", "(1/2", "q", "m^", "m^0", "(1)*", "m*", "m + + a"}) {
    EXPECT_THROW(parse_poly(bad), ParseError) << bad;
  }
}

class PolyProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(PolyProperty, RingAxioms) {
  std::mt19937_64 rng(GetParam());
  for (int i = 0; i < 30; ++i) {
    const MultiPoly x = random_poly(rng, kFew), y = random_poly(rng, kFew), z = random_poly(rng, kFew);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_TRUE((x - x).is_zero());
    EXPECT_EQ(x * MultiPoly(1), x);
    EXPECT_TRUE((x * MultiPoly()).is_zero());
  }
}

TEST_P(PolyProperty, DivremIdentity) {
  std::mt19937_64 rng(GetParam());
  for (int i = 0; i < 30; ++i) {
    const MultiPoly x = random_poly(rng, kFew, 8, 4);
    MultiPoly d = random_poly(rng, kFew, 3, 2);
    if (d.is_zero()) d = MultiPoly(1);
    const DivRem qr = divrem(x, d);
    EXPECT_EQ(qr.quotient * d + qr.remainder, x);
    const DivRem exact = divrem(x * d, d);
    EXPECT_TRUE(exact.remainder.is_zero());
    EXPECT_EQ(exact.quotient, x);
  }
}

TEST_P(PolyProperty, EvalIsAHomomorphism) {
  std::mt19937_64 rng(GetParam());
  for (int i = 0; i < 30; ++i) {
    const MultiPoly x = random_poly(rng, kMany), y = random_poly(rng, kMany);
    const Assignment s = random_assignment(rng);
    EXPECT_EQ(eval(x * y, s), eval(x, s) * eval(y, s));
    EXPECT_EQ(eval(x + y, s), eval(x, s) + eval(y, s));
  }
}

TEST_P(PolyProperty, ParseRoundTrip) {
  std::mt19937_64 rng(GetParam());
  for (int i = 0; i < 30; ++i) {
    const MultiPoly x = random_poly(rng, kMany, 8);
    EXPECT_EQ(parse_poly(canonical_string(x)), x);
  }
}

TEST_P(PolyProperty, Det3MatchesNumericLeibniz) {
  std::mt19937_64 rng(GetParam());
  Matrix3 mat;
  for (auto& row : mat) {
    for (auto& e : row) e = random_poly(rng, kFew, 3, 2);
  }
  const MultiPoly d = det3(mat);
  constexpr std::array<std::array<int, 3>, 6> kPerms = {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
  for (int point = 0; point < 25; ++point) {
    const Assignment s = random_assignment(rng);
    Rational leibniz;
    for (std::size_t i = 0; i < kPerms.size(); ++i) {
      Rational term = i < 3 ? Rational(1) : Rational(-1);
      for (std::size_t r = 0; r < 3; ++r) term *= eval(mat[r][static_cast<std::size_t>(kPerms[i][r])], s);
      leibniz += term;
    }
    EXPECT_EQ(eval(d, s), leibniz);
  }
}

// 5 seeds x 25 points = 125 determinant evaluations.
INSTANTIATE_TEST_SUITE_P(Seeds, PolyProperty, ::testing::Values(1U, 2U, 3U, 4U, 5U));
