#include "virhc/module.hpp"

#include <array>
#include <deque>
#include <set>

namespace virhc {

namespace {

std::string vector_label(const Rational& index) { return "v_" + index.to_string(); }

void require_host(bool ok, ModuleKind kind, const AlgebraSpec& host, std::string_view expected) {
  if (!ok) {
    throw ParameterError(std::string(module_kind_name(kind)) + " must be hosted by " + std::string(expected) +
                         ", not " + host.display_name());
  }
}

}  // namespace

std::string_view module_kind_name(ModuleKind kind) {
  static constexpr std::array<std::string_view, 5> kNames = {"Aab", "Aa", "Ba", "Aabc", "Aabc1c2"};
  return kNames[static_cast<std::size_t>(kind)];
}

std::optional<ModuleKind> module_kind_from_name(std::string_view text) {
  for (auto kind : {ModuleKind::Aab, ModuleKind::Aa, ModuleKind::Ba, ModuleKind::Aabc, ModuleKind::Aabc1c2}) {
    if (module_kind_name(kind) == text) return kind;
  }
  return std::nullopt;
}

bool ModuleSpec::on_lattice(const Rational& index) const {
  return host.s.is_zero() ? index.is_integer() : index.is_half_integer_lattice();
}

std::vector<Rational> ModuleSpec::indices_within(const Rational& bound) const {
  const Rational step = host.s.is_zero() ? Rational(1) : Rational(1, 2);
  const mpq_class ratio = bound.raw() / step.raw();
  mpz_class count;
  mpz_fdiv_q(count.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
  std::vector<Rational> out;
  for (long j = -count.get_si(); j <= count.get_si(); ++j) out.push_back(Rational(j) * step);
  return out;
}

std::string ModuleSpec::display_name() const {
  std::string out(module_kind_name(kind));
  out += "(a=" + a.to_string();
  switch (kind) {
    case ModuleKind::Aa:
    case ModuleKind::Ba:
      break;
    case ModuleKind::Aab:
      out += ", b=" + b.to_string();
      break;
    case ModuleKind::Aabc:
      out += ", b=" + b.to_string() + ", c=" + c.to_string();
      break;
    case ModuleKind::Aabc1c2:
      out += ", b=" + b.to_string() + ", bp=" + b_prime.to_string() + ", c1=" + c1.to_string() +
             ", c2=" + c2.to_string();
      break;
  }
  return out + ") over " + host.display_name();
}

ModuleSpec make_module(ModuleKind kind, const ModuleParams& params, const AlgebraSpec& host) {
  switch (kind) {
    case ModuleKind::Aab:
    case ModuleKind::Aa:
    case ModuleKind::Ba:
      require_host(host.name == AlgebraName::Vir, kind, host, "Vir");
      break;
    case ModuleKind::Aabc:
      require_host(host.name == AlgebraName::W && host.s.is_zero(), kind, host, "W(rho)[0]");
      break;
    case ModuleKind::Aabc1c2:
      require_host(host.name == AlgebraName::W && host.s == Rational(1, 2), kind, host, "W(rho)[1/2]");
      break;
  }
  ModuleSpec mod;
  mod.kind = kind;
  mod.host = host;
  mod.a = params.a;
  mod.b = params.b;
  mod.b_prime = params.b_prime.value_or(params.b);
  mod.c = params.c;
  mod.c1 = params.c1;
  mod.c2 = params.c2;
  const bool shifts_weight = kind == ModuleKind::Aab || kind == ModuleKind::Aabc || kind == ModuleKind::Aabc1c2;
  if (shifts_weight && mod.a.is_integer()) mod.a = Rational(0);
  return mod;
}

WeightVector::WeightVector(const Rational& index, const Rational& coeff) { add(index, coeff); }

Rational WeightVector::coefficient(const Rational& index) const {
  const auto it = terms_.find(index);
  return it == terms_.end() ? Rational() : it->second;
}

void WeightVector::add(const Rational& index, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
  for (const auto& [i, c] : o.terms_) add(i, c);
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
  for (const auto& [i, c] : o.terms_) add(i, -c);
  return *this;
}

std::string WeightVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (!c.is_one()) out += "(" + c.to_string() + ")*";
    out += vector_label(i);
  }
  return out;
}

Rational action_coefficient(const ModuleSpec& mod, const BasisElement& x, const Rational& index) {
  const Rational& m = x.degree;
  const Rational& k = index;
  if (x.family == Family::L) {
    switch (mod.kind) {
      case ModuleKind::Aab:
      case ModuleKind::Aabc:
        return mod.a + k + mod.b * m;
      case ModuleKind::Aa:
        return k.is_zero() ? m * (m + mod.a) : k + m;
      case ModuleKind::Ba:
        return k == -m ? -m * (m + mod.a) : k;
      case ModuleKind::Aabc1c2:
        return mod.a + k + (k.is_integer() ? mod.b : mod.b_prime) * m;
    }
  }
  if (x.family == Family::Y) {
    if (mod.kind == ModuleKind::Aabc) return mod.c;
    if (mod.kind == ModuleKind::Aabc1c2) return k.is_integer() ? mod.c1 : mod.c2;
  }
  throw ParameterError(x.label() + " does not act on " + mod.display_name());
}

WeightVector act(const ModuleSpec& mod, const Element& x, const WeightVector& v) {
  WeightVector out;
  for (const auto& [index, vc] : v.terms()) {
    if (!mod.on_lattice(index)) {
      throw ParameterError(vector_label(index) + " is off the weight lattice of " + mod.display_name());
    }
  }
  for (const auto& [e, xc] : x.terms()) {
    if (!mod.host.is_valid(e)) {
      throw ParameterError(e.label() + " is not a basis element of " + mod.host.display_name());
    }
    for (const auto& [index, vc] : v.terms()) {
      out.add(index + e.degree, xc * vc * action_coefficient(mod, e, index));
    }
  }
  return out;
}

CheckReport check_module_axiom(const ModuleSpec& mod, int window) {
  if (window < 1) throw ParameterError("window must be >= 1");
  CheckReport report;
  report.window = window;
  const auto basis = mod.host.window_basis(window);
  const auto indices = mod.indices_within(Rational(window));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const BasisElement& x = basis[i];
      const BasisElement& y = basis[j];
      const Element xy = bracket(mod.host, x, y);
      for (const auto& k : indices) {
        ++report.cases_checked;
        const WeightVector v(k);
        WeightVector residual = act(mod, xy, v);
        residual -= act(mod, x, act(mod, y, v));
        residual += act(mod, y, act(mod, x, v));
        if (residual.is_zero()) continue;
        std::optional<Rational> scalar;
        if (residual.terms().size() == 1) scalar = residual.terms().begin()->second;
        report.violations.push_back(
            {{x.label(), y.label(), vector_label(k)}, {x.degree, y.degree, k}, residual.to_string(), scalar});
      }
    }
  }
  return report;
}

MultiPoly symbolic_ly_residual(const ModuleSpec& mod) {
  if (mod.kind != ModuleKind::Aabc && mod.kind != ModuleKind::Aabc1c2) {
    throw ParameterError("symbolic residual needs a module with a Y action, got " + mod.display_name());
  }
  const MultiPoly m = MultiPoly::variable(Var::m);
  const MultiPoly p = MultiPoly::variable(Var::p);
  const MultiPoly k = MultiPoly::variable(Var::k);
  const MultiPoly rho(*mod.host.rho);
  // Integer k: v_k and v_{m+k} carry (b, c1); the half-integer v_{p+k} carries b'.
  const bool twisted = mod.kind == ModuleKind::Aabc1c2;
  const MultiPoly c_here(twisted ? mod.c1 : mod.c);
  const MultiPoly b_int(mod.b);
  const MultiPoly b_shifted(twisted ? mod.b_prime : mod.b);
  const MultiPoly a(mod.a);
  const MultiPoly bracket_side = (p - m * rho) * c_here;
  const MultiPoly l_after_y = c_here * (a + p + k + b_shifted * m);
  const MultiPoly y_after_l = (a + k + b_int * m) * c_here;
  return bracket_side - (l_after_y - y_after_l);
}

CheckReport check_window_cyclic(const ModuleSpec& mod, int window) {
  if (window < 2) throw ParameterError("window must be >= 2");
  CheckReport report;
  report.window = window;
  const Rational outer(window);
  const Rational inner(window, 2);
  const auto operators = mod.host.window_basis(window);
  const auto inner_indices = mod.indices_within(inner);
  for (const auto& generator : inner_indices) {
    ++report.cases_checked;
    // Every operator maps a basis vector to a multiple of one basis vector,
    // so the reachable span is spanned by the reachable basis vectors.
    std::set<Rational> reached{generator};
    std::deque<Rational> frontier{generator};
    while (!frontier.empty()) {
      const Rational i = frontier.front();
      frontier.pop_front();
      for (const auto& x : operators) {
        const Rational j = i + x.degree;
        if (j < -outer || j > outer || reached.count(j) != 0) continue;
        if (action_coefficient(mod, x, i).is_zero()) continue;
        reached.insert(j);
        frontier.push_back(j);
      }
    }
    std::string span;
    bool full = true;
    for (const auto& j : inner_indices) {
      if (reached.count(j) == 0) {
        full = false;
        continue;
      }
      span += (span.empty() ? "" : ", ") + vector_label(j);
    }
    if (!full) {
      report.violations.push_back({{vector_label(generator)}, {generator}, "span{" + span + "}", std::nullopt});
    }
  }
  return report;
}

bool simplicity_criterion(const ModuleSpec& mod) {
  const bool generic_ab = !mod.a.is_integer() || (mod.b != Rational(0) && mod.b != Rational(1));
  switch (mod.kind) {
    case ModuleKind::Aab:
      return generic_ab;
    case ModuleKind::Aabc:
      return generic_ab || !mod.c.is_zero();
    case ModuleKind::Aabc1c2:
      return !(mod.c1 * mod.c2).is_zero();
    case ModuleKind::Aa:
    case ModuleKind::Ba:
      break;
  }
  throw ParameterError("no simplicity biconditional is available for " + std::string(module_kind_name(mod.kind)));
}

}  // namespace virhc
