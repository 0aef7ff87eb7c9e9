#include "virhc/lie.hpp"

#include <algorithm>
#include <array>

namespace virhc {

namespace {

const Rational kHalf(1, 2);

Term term(Family f, const Rational& degree, const Rational& coeff) {
  if (coeff.is_zero()) return std::nullopt;
  return std::make_pair(BasisElement{f, degree}, coeff);
}

Term negate(Term t) {
  if (t) t->second = -t->second;
  return t;
}

// Bracket for x <= y in family order; the caller handles the swap.
Term ordered_bracket(const AlgebraSpec& alg, const BasisElement& x, const BasisElement& y) {
  const Rational& m = x.degree;
  const Rational& n = y.degree;
  const Rational sum = m + n;
  switch (x.family) {
    case Family::L:
      switch (y.family) {
        case Family::L:
          return term(Family::L, sum, n - m);
        case Family::Y:
          switch (alg.name) {
            case AlgebraName::W: return term(Family::Y, sum, n - m * *alg.rho);
            case AlgebraName::SV: return term(Family::Y, sum, n - m * kHalf);
            case AlgebraName::D: return term(Family::Y, sum, n - (*alg.rho + 1) * kHalf * m);
            case AlgebraName::Vir: break;
          }
          break;
        case Family::M:
          if (alg.name == AlgebraName::SV) return term(Family::M, sum, n);
          if (alg.name == AlgebraName::D) return term(Family::M, sum, n - *alg.rho * m);
          break;
      }
      break;
    case Family::Y:
      if (y.family == Family::Y && (alg.name == AlgebraName::SV || alg.name == AlgebraName::D)) {
        return term(Family::M, sum, n - m);
      }
      return std::nullopt;
    case Family::M:
      return std::nullopt;
  }
  throw ParameterError("bracket undefined in " + alg.display_name());
}

std::string coefficient_prefix(const Rational& c) {
  return c.is_one() ? std::string() : "(" + c.to_string() + ")*";
}

}  // namespace

std::string_view family_name(Family f) {
  static constexpr std::array<std::string_view, 3> kNames = {"L", "Y", "M"};
  return kNames[static_cast<std::size_t>(f)];
}

std::string BasisElement::label() const {
  return std::string(family_name(family)) + "_" + degree.to_string();
}

Element::Element(const BasisElement& e, const Rational& coeff) { add(e, coeff); }

Rational Element::coefficient(const BasisElement& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational() : it->second;
}

void Element::add(const BasisElement& e, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

Element& Element::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += coefficient_prefix(c) + e.label();
  }
  return out;
}

std::string_view algebra_name(AlgebraName name) {
  static constexpr std::array<std::string_view, 4> kNames = {"Vir", "W", "SV", "D"};
  return kNames[static_cast<std::size_t>(name)];
}

std::optional<AlgebraName> algebra_from_name(std::string_view text) {
  for (auto name : {AlgebraName::Vir, AlgebraName::W, AlgebraName::SV, AlgebraName::D}) {
    if (algebra_name(name) == text) return name;
  }
  return std::nullopt;
}

std::vector<Family> AlgebraSpec::families() const {
  switch (name) {
    case AlgebraName::Vir: return {Family::L};
    case AlgebraName::W: return {Family::L, Family::Y};
    case AlgebraName::SV:
    case AlgebraName::D: return {Family::L, Family::Y, Family::M};
  }
  return {};
}

bool AlgebraSpec::has_family(Family f) const {
  const auto fs = families();
  return std::find(fs.begin(), fs.end(), f) != fs.end();
}

bool AlgebraSpec::is_valid(const BasisElement& e) const {
  if (!has_family(e.family)) return false;
  if (e.family == Family::Y) return (e.degree - s).is_integer();
  return e.degree.is_integer();
}

std::vector<BasisElement> AlgebraSpec::window_basis(int window) const {
  std::vector<BasisElement> out;
  for (Family f : families()) {
    const Rational shift = f == Family::Y ? s : Rational(0);
    // Degrees d = j + shift with |d| <= window.
    for (long j = -window - 1; j <= window; ++j) {
      const Rational d = Rational(j) + shift;
      if (d < Rational(-window) || d > Rational(window)) continue;
      out.push_back({f, d});
    }
  }
  return out;
}

std::string AlgebraSpec::display_name() const {
  switch (name) {
    case AlgebraName::Vir: return "Vir";
    case AlgebraName::W: return "W(" + rho->to_string() + ")[" + s.to_string() + "]";
    case AlgebraName::SV: return "SV[" + s.to_string() + "]";
    case AlgebraName::D: return "D(" + rho->to_string() + ")";
  }
  return {};
}

AlgebraSpec make_algebra(AlgebraName name, const Rational& s, std::optional<Rational> rho) {
  if (s != Rational(0) && s != Rational(1, 2)) {
    throw ParameterError("s must be 0 or 1/2, got " + s.to_string());
  }
  switch (name) {
    case AlgebraName::Vir:
    case AlgebraName::SV:
      if (rho) throw ParameterError(std::string(algebra_name(name)) + " takes no rho parameter");
      if (name == AlgebraName::Vir && !s.is_zero()) throw ParameterError("Vir is defined with s = 0 only");
      break;
    case AlgebraName::W:
      if (!rho) throw ParameterError("W requires rho");
      if (*rho == Rational(-1)) throw ParameterError("W(rho)[s] requires rho != -1");
      break;
    case AlgebraName::D:
      if (!rho) throw ParameterError("D requires rho");
      if (!s.is_zero()) throw ParameterError("D(rho) is defined with s = 0 only");
      if (*rho == Rational(0) || *rho == Rational(-1) || *rho == Rational(-3)) {
        throw ParameterError("D(rho) requires rho not in {0, -1, -3}, got " + rho->to_string());
      }
      break;
  }
  return AlgebraSpec{name, s, rho};
}

Term basis_bracket(const AlgebraSpec& alg, const BasisElement& x, const BasisElement& y) {
  if (!alg.is_valid(x)) throw ParameterError(x.label() + " is not a basis element of " + alg.display_name());
  if (!alg.is_valid(y)) throw ParameterError(y.label() + " is not a basis element of " + alg.display_name());
  if (x.family <= y.family) return ordered_bracket(alg, x, y);
  return negate(ordered_bracket(alg, y, x));
}

Element bracket_with(const BasisBracket& fn, const Element& x, const Element& y) {
  Element out;
  for (const auto& [ex, cx] : x.terms()) {
    for (const auto& [ey, cy] : y.terms()) {
      if (const Term t = fn(ex, ey)) out.add(t->first, cx * cy * t->second);
    }
  }
  return out;
}

Element bracket(const AlgebraSpec& alg, const Element& x, const Element& y) {
  return bracket_with([&](const BasisElement& a, const BasisElement& b) { return basis_bracket(alg, a, b); },
                      x, y);
}

CheckReport check_antisymmetry(const AlgebraSpec& alg, int window) {
  if (window < 1) throw ParameterError("window must be >= 1");
  CheckReport report;
  report.window = window;
  const auto basis = alg.window_basis(window);
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      ++report.cases_checked;
      const Element sum = bracket(alg, x, y) + bracket(alg, y, x);
      if (!sum.is_zero()) {
        report.violations.push_back({{x.label(), y.label()}, {x.degree, y.degree}, sum.to_string(), std::nullopt});
      }
    }
  }
  return report;
}

CheckReport check_jacobi_with(const BasisBracket& fn, const std::vector<BasisElement>& basis, int window) {
  if (window < 1) throw ParameterError("window must be >= 1");
  CheckReport report;
  report.window = window;
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      const Element xy = bracket_with(fn, x, y);
      for (const auto& z : basis) {
        ++report.cases_checked;
        Element sum = bracket_with(fn, xy, z);
        sum += bracket_with(fn, bracket_with(fn, y, z), x);
        sum += bracket_with(fn, bracket_with(fn, z, x), y);
        if (!sum.is_zero()) {
          report.violations.push_back(
              {{x.label(), y.label(), z.label()}, {x.degree, y.degree, z.degree}, sum.to_string(), std::nullopt});
        }
      }
    }
  }
  return report;
}

CheckReport check_jacobi(const AlgebraSpec& alg, int window) {
  return check_jacobi_with(
      [&](const BasisElement& a, const BasisElement& b) { return basis_bracket(alg, a, b); },
      alg.window_basis(window), window);
}

std::string_view cocycle_name(CocycleName name) {
  static constexpr std::array<std::string_view, 4> kNames = {"gamma0", "gamma01", "gamma02", "gamma11"};
  return kNames[static_cast<std::size_t>(name)];
}

std::optional<CocycleName> cocycle_from_name(std::string_view text) {
  for (auto name : {CocycleName::gamma0, CocycleName::gamma01, CocycleName::gamma02, CocycleName::gamma11}) {
    if (cocycle_name(name) == text) return name;
  }
  return std::nullopt;
}

Rational cocycle_value(CocycleName name, const BasisElement& x, const BasisElement& y) {
  if ((x.degree + y.degree) != Rational(0)) return Rational(0);
  const auto cubic = [](const Rational& m) { return (m * m * m - m) / Rational(12); };
  switch (name) {
    case CocycleName::gamma0:
      if (x.family == Family::L && y.family == Family::L) return cubic(x.degree);
      return Rational(0);
    case CocycleName::gamma01:
    case CocycleName::gamma11: {
      const auto f = [&](const Rational& m) {
        return name == CocycleName::gamma01 ? m * m - m : cubic(m);
      };
      if (x.family == Family::L && y.family == Family::Y) return f(x.degree);
      if (x.family == Family::Y && y.family == Family::L) return -f(y.degree);
      return Rational(0);
    }
    case CocycleName::gamma02:
      if (x.family == Family::Y && y.family == Family::Y) return y.degree;
      return Rational(0);
  }
  return Rational(0);
}

namespace {

Rational cocycle_on(CocycleName name, const Element& x, const BasisElement& y) {
  Rational total;
  for (const auto& [e, c] : x.terms()) total += c * cocycle_value(name, e, y);
  return total;
}

void require_cocycle_host(CocycleName name, const AlgebraSpec& alg) {
  const bool w0 = alg.name == AlgebraName::W && alg.s.is_zero();
  switch (name) {
    case CocycleName::gamma0:
      if (alg.name == AlgebraName::Vir || w0) return;
      break;
    case CocycleName::gamma01:
    case CocycleName::gamma02:
      if (w0 && *alg.rho == Rational(0)) return;
      break;
    case CocycleName::gamma11:
      if (w0 && *alg.rho == Rational(1)) return;
      break;
  }
  throw ParameterError(std::string(cocycle_name(name)) + " is not a 2-cocycle class of " + alg.display_name());
}

}  // namespace

CheckReport check_cocycle(CocycleName name, const AlgebraSpec& alg, int window) {
  require_cocycle_host(name, alg);
  if (window < 1) throw ParameterError("window must be >= 1");
  CheckReport report;
  report.window = window;
  const auto basis = alg.window_basis(window);
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      const Element xy = bracket(alg, x, y);
      for (const auto& z : basis) {
        ++report.cases_checked;
        const Rational sum = cocycle_on(name, xy, z) + cocycle_on(name, bracket(alg, y, z), x) +
                             cocycle_on(name, bracket(alg, z, x), y);
        if (!sum.is_zero()) {
          report.violations.push_back(
              {{x.label(), y.label(), z.label()}, {x.degree, y.degree, z.degree}, sum.to_string(), sum});
        }
      }
    }
  }
  return report;
}

}  // namespace virhc
