#include "virhc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace virhc {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {"a", "b", "bp", "rho", "p",
                                                              "k", "m", "n",  "c"};

int degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

bool divides(const Exponents& d, const Exponents& x) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (d[i] > x[i]) return false;
  }
  return true;
}

Exponents add_exps(const Exponents& x, const Exponents& y) {
  Exponents r{};
  for (std::size_t i = 0; i < kNumVars; ++i) r[i] = static_cast<std::uint16_t>(x[i] + y[i]);
  return r;
}

Exponents sub_exps(const Exponents& x, const Exponents& y) {
  Exponents r{};
  for (std::size_t i = 0; i < kNumVars; ++i) r[i] = static_cast<std::uint16_t>(x[i] - y[i]);
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string monomial_string(const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kVarNames[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (kVarNames[i] == name) return static_cast<Var>(i);
  }
  return std::nullopt;
}

bool GrlexGreater::operator()(const Exponents& x, const Exponents& y) const {
  const int dx = degree_of(x);
  const int dy = degree_of(y);
  if (dx != dy) return dx > dy;
  for (std::size_t i = kNumVars; i-- > 0;) {
    if (x[i] != y[i]) return x[i] > y[i];
  }
  return false;
}

MultiPoly::MultiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

MultiPoly MultiPoly::variable(Var v) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = 1;
  return monomial(Rational(1), e);
}

MultiPoly MultiPoly::monomial(const Rational& coeff, const Exponents& exps) {
  MultiPoly r;
  r.add_term(exps, coeff);
  return r;
}

void MultiPoly::add_term(const Exponents& e, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::pair<Exponents, Rational> MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return *terms_.begin();
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : degree_of(terms_.begin()->first);
}

int MultiPoly::degree_in(Var v) const {
  int d = 0;
  for (const auto& [e, coeff] : terms_) d = std::max<int>(d, e[static_cast<std::size_t>(v)]);
  return d;
}

MultiPoly MultiPoly::coefficient(Var v, unsigned e) const {
  MultiPoly r;
  const auto idx = static_cast<std::size_t>(v);
  for (const auto& [exps, coeff] : terms_) {
    if (exps[idx] != e) continue;
    Exponents rest = exps;
    rest[idx] = 0;
    r.add_term(rest, coeff);
  }
  return r;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& replacement) const {
  const auto idx = static_cast<std::size_t>(v);
  const int max_e = degree_in(v);
  std::vector<MultiPoly> powers{MultiPoly(1)};
  for (int i = 1; i <= max_e; ++i) powers.push_back(powers.back() * replacement);
  MultiPoly r;
  for (const auto& [exps, coeff] : terms_) {
    Exponents rest = exps;
    rest[idx] = 0;
    r += monomial(coeff, rest) * powers[exps[idx]];
  }
  return r;
}

MultiPoly MultiPoly::partial_eval(std::span<const std::pair<Var, Rational>> assignment) const {
  MultiPoly r;
  for (const auto& [exps, coeff] : terms_) {
    Exponents rest = exps;
    Rational value = coeff;
    for (const auto& [v, x] : assignment) {
      const auto idx = static_cast<std::size_t>(v);
      if (rest[idx] == 0) continue;
      value *= pow(x, static_cast<unsigned>(rest[idx]));
      rest[idx] = 0;
    }
    r.add_term(rest, value);
  }
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, coeff] : o.terms_) add_term(e, coeff);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, coeff] : o.terms_) add_term(e, -coeff);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
  MultiPoly r;
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) r.add_term(add_exps(ex, ey), cx * cy);
  }
  return r;
}

MultiPoly operator-(const MultiPoly& x) {
  MultiPoly r;
  for (const auto& [e, coeff] : x.terms_) r.terms_.emplace(e, -coeff);
  return r;
}

MultiPoly pow(const MultiPoly& x, int exponent) {
  if (exponent < 0) throw ParameterError("negative polynomial exponent");
  MultiPoly result(1);
  MultiPoly base = x;
  auto e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Assignment::Assignment(std::initializer_list<std::pair<Var, Rational>> values) {
  for (const auto& [v, x] : values) set(v, x);
}

Assignment& Assignment::set(Var v, const Rational& value) {
  values_[static_cast<std::size_t>(v)] = value;
  return *this;
}

Rational eval(const MultiPoly& x, const Assignment& assignment) {
  Rational total;
  for (const auto& [exps, coeff] : x.terms()) {
    Rational term = coeff;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (exps[i] == 0) continue;
      const auto& value = assignment.get(static_cast<Var>(i));
      if (!value) {
        throw ParameterError("assignment is missing variable '" + std::string(kVarNames[i]) + "'");
      }
      term *= pow(*value, static_cast<unsigned>(exps[i]));
    }
    total += term;
  }
  return total;
}

DivRem divrem(const MultiPoly& x, const MultiPoly& d) {
  if (d.is_zero()) throw ParameterError("division by the zero polynomial");
  const auto [lead_e, lead_c] = d.leading_term();
  DivRem out;
  MultiPoly work = x;
  // Repeatedly cancel the largest term divisible by the divisor's leading
  // monomial; each step strictly lowers that term, so this terminates.
  while (true) {
    const auto it = std::find_if(work.terms().begin(), work.terms().end(),
                                 [&](const auto& term) { return divides(lead_e, term.first); });
    if (it == work.terms().end()) break;
    const MultiPoly step = MultiPoly::monomial(it->second / lead_c, sub_exps(it->first, lead_e));
    out.quotient += step;
    work -= step * d;
  }
  out.remainder = std::move(work);
  return out;
}

MultiPoly exact_divide(const MultiPoly& x, const MultiPoly& d) {
  DivRem qr = divrem(x, d);
  if (!qr.remainder.is_zero()) {
    throw std::domain_error("not divisible by " + canonical_string(d));
  }
  return std::move(qr.quotient);
}

MultiPoly det3(const Matrix3& mat) {
  const auto minor = [&](std::size_t c0, std::size_t c1) {
    return mat[1][c0] * mat[2][c1] - mat[1][c1] * mat[2][c0];
  };
  return mat[0][0] * minor(1, 2) - mat[0][1] * minor(0, 2) + mat[0][2] * minor(0, 1);
}

std::string canonical_string(const MultiPoly& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [exps, coeff] : x.terms()) {
    if (!out.empty()) out += " + ";
    const std::string mono = monomial_string(exps);
    if (mono.empty()) {
      out += coeff.is_one() ? std::string("1") : "(" + coeff.to_string() + ")";
    } else if (coeff.is_one()) {
      out += mono;
    } else {
      out += "(" + coeff.to_string() + ")*" + mono;
    }
  }
  return out;
}

namespace {

Exponents parse_monomial(std::string_view text, std::string_view whole) {
  if (trim(text).empty()) throw ParseError("missing monomial in '" + std::string(whole) + "'");
  Exponents e{};
  while (!text.empty()) {
    const auto star = text.find('*');
    std::string_view factor = trim(text.substr(0, star));
    text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
    if (star != std::string_view::npos && trim(text).empty()) {
      throw ParseError("dangling '*' in '" + std::string(whole) + "'");
    }
    unsigned power = 1;
    if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
      const Rational pw = Rational::parse(trim(factor.substr(caret + 1)));
      if (!pw.is_integer() || pw.sign() <= 0) {
        throw ParseError("bad exponent in '" + std::string(whole) + "'");
      }
      power = static_cast<unsigned>(pw.to_long());
      factor = trim(factor.substr(0, caret));
    }
    const auto v = var_from_name(factor);
    if (!v) throw ParseError("unknown variable '" + std::string(factor) + "'");
    e[static_cast<std::size_t>(*v)] = static_cast<std::uint16_t>(e[static_cast<std::size_t>(*v)] + power);
  }
  return e;
}

MultiPoly parse_term(std::string_view term) {
  term = trim(term);
  if (term.empty()) throw ParseError("empty term");
  Rational coeff(1);
  std::string_view rest = term;
  if (term.front() == '(') {
    const auto close = term.find(')');
    if (close == std::string_view::npos) throw ParseError("unbalanced '(' in '" + std::string(term) + "'");
    coeff = Rational::parse(trim(term.substr(1, close - 1)));
    rest = trim(term.substr(close + 1));
    if (rest.empty()) return MultiPoly(coeff);
    if (rest.front() != '*') throw ParseError("expected '*' after coefficient in '" + std::string(term) + "'");
    rest = trim(rest.substr(1));
  } else if (std::isdigit(static_cast<unsigned char>(term.front())) || term.front() == '-') {
    return MultiPoly(Rational::parse(term));
  }
  return MultiPoly::monomial(coeff, parse_monomial(rest, term));
}

}  // namespace

MultiPoly parse_poly(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty polynomial text");
  MultiPoly result;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (depth < 0) throw ParseError("unbalanced ')' in polynomial text");
      if (!(text[i] == '+' && depth == 0)) continue;
    }
    result += parse_term(text.substr(start, i - start));
    start = i + 1;
  }
  if (depth != 0) throw ParseError("unbalanced '(' in polynomial text");
  return result;
}

}  // namespace virhc
