#include "voa/verma.hpp"

#include <stdexcept>

namespace voa {

bool mode_precedes(const Mode& a, const Mode& b) {
  if (a.degree != b.degree) return a.degree > b.degree;
  return a.generator < b.generator;
}

PBWMonomial::PBWMonomial(std::vector<Mode> factors) : factors_(std::move(factors)) {
  for (std::size_t t = 0; t < factors_.size(); ++t) {
    if (factors_[t].degree > -1) throw std::invalid_argument("PBW factors must have degree <= -1");
    if (t > 0 && mode_precedes(factors_[t], factors_[t - 1]))
      throw std::invalid_argument("PBW factors are not in canonical order");
  }
}

int PBWMonomial::conformal_degree() const {
  int d = 0;
  for (const auto& m : factors_) d -= m.degree;
  return d;
}

Weight PBWMonomial::weight(const SlAlgebra& g) const {
  Weight w(g.rank());
  for (const auto& m : factors_) w += g.basis(m.generator).weight;
  return w;
}

ModuleVector::ModuleVector(int rank, Rational level) : rank_(rank), level_(std::move(level)) {}

ModuleVector::ModuleVector(int rank, Rational level, Terms terms)
    : rank_(rank), level_(std::move(level)) {
  for (const auto& [m, c] : terms) add(m, c);
}

Rational ModuleVector::coefficient(const PBWMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ModuleVector::add(const PBWMonomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void ModuleVector::check_compatible(const ModuleVector& other) const {
  if (other.rank_ != rank_ || other.level_ != level_)
    throw std::invalid_argument("module vectors live in different modules");
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

ModuleVector& ModuleVector::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

std::string to_string(const PBWMonomial& m, const SlAlgebra& g) {
  std::string out;
  for (const auto& f : m.factors()) out += g.basis(f.generator).name + "(" + std::to_string(f.degree) + ")";
  return out + "|0>";
}

std::string to_string(const ModuleVector& v) {
  if (v.is_zero()) return "0";
  auto g = SlAlgebra::shared(v.rank());
  std::string out;
  for (const auto& [m, c] : v.terms()) {
    if (out.empty()) {
      out += to_string(c);
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      out += to_string(Rational(abs(c)));
    }
    out += "*" + to_string(m, *g);
  }
  return out;
}

Rational critical_level(int l) { return make_rational(-(l + 1), 2); }

VacuumModule::VacuumModule(int l) : VacuumModule(l, critical_level(l)) {}

VacuumModule::VacuumModule(int l, Rational level) : g_(SlAlgebra::shared(l)), level_(std::move(level)) {}

ModuleVector VacuumModule::vacuum() const {
  ModuleVector v = zero();
  v.add(PBWMonomial(), 1);
  return v;
}

void VacuumModule::check(const ModuleVector& v) const {
  if (v.rank() != rank()) throw std::invalid_argument("module vector rank mismatch");
  if (v.level() != level_) throw std::invalid_argument("module vector level mismatch");
}

const VacuumModule::Terms& VacuumModule::apply(const Mode& x, std::span<const Mode> monomial) const {
  std::pair<Mode, PBWMonomial> key{x, PBWMonomial(std::vector<Mode>(monomial.begin(), monomial.end()))};
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }

  Terms out;
  auto accumulate = [&out](const PBWMonomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = out.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) out.erase(it);
    }
  };

  if (monomial.empty()) {
    // Positive modes annihilate 1; degree-0 modes act through the trivial g-module.
    if (x.degree < 0) accumulate(PBWMonomial({x}), 1);
  } else if (x.degree < 0 && !mode_precedes(monomial.front(), x)) {
    std::vector<Mode> factors;
    factors.reserve(monomial.size() + 1);
    factors.push_back(x);
    factors.insert(factors.end(), monomial.begin(), monomial.end());
    accumulate(PBWMonomial(std::move(factors)), 1);
  } else {
    // x y R = y (x R) + [x, y] R.
    const Mode y = monomial.front();
    const auto rest = monomial.subspan(1);
    const Terms inner = apply(x, rest);
    for (const auto& [m, c] : inner)
      for (const auto& [m2, c2] : apply(y, m.factors())) accumulate(m2, c * c2);
    const int n = x.degree + y.degree;
    for (const auto& [z, c] : g_->bracket(x.generator, y.generator))
      for (const auto& [m2, c2] : apply({z, n}, rest)) accumulate(m2, c * c2);
    if (n == 0) {
      const Rational central = Rational(x.degree) * g_->form(x.generator, y.generator) * level_;
      if (sgn(central) != 0) {
        std::vector<Mode> factors(rest.begin(), rest.end());
        accumulate(PBWMonomial(std::move(factors)), central);
      }
    }
  }

  std::lock_guard lock(cache_mutex_);
  auto [it, inserted] = cache_.emplace(std::move(key), std::move(out));
  return it->second;
}

ModuleVector VacuumModule::act(const Mode& x, const ModuleVector& v) const {
  check(v);
  if (x.generator < 0 || x.generator >= g_->dim()) throw std::invalid_argument("mode generator out of range");
  ModuleVector out = zero();
  for (const auto& [m, c] : v.terms())
    for (const auto& [m2, c2] : apply(x, m.factors())) out.add(m2, c * c2);
  return out;
}

ModuleVector VacuumModule::act(const AffineElement& a, const ModuleVector& v) const {
  if (a.rank() != rank()) throw std::invalid_argument("affine element rank mismatch");
  check(v);
  ModuleVector out = zero();
  for (const auto& [n, x] : a.terms())
    for (const auto& [gen, c] : g_->decompose(x)) out += c * act(Mode{gen, n}, v);
  if (sgn(a.central()) != 0) out += (a.central() * level_) * v;
  return out;
}

ModuleVector VacuumModule::state(const std::vector<Mode>& modes) const {
  ModuleVector v = vacuum();
  for (auto it = modes.rbegin(); it != modes.rend(); ++it) v = act(*it, v);
  return v;
}

AffineWeight VacuumModule::affine_weight(const PBWMonomial& m) const {
  return {level_, m.weight(*g_), Rational(-m.conformal_degree())};
}

ModuleVector singular_vector(int l) {
  require_even_rank(l);
  const VacuumModule module(l);
  const SlAlgebra& g = module.algebra();
  const int e_theta = g.e_index(1, l + 1);
  ModuleVector v = module.zero();
  for (int i = 1; i <= l; ++i)
    v += make_rational(l - 2 * i + 1, l + 1) * module.state({{g.h_index(i), -1}, {e_theta, -1}});
  for (int i = 1; i <= l - 1; ++i)
    v -= module.state({{g.e_index(1, i + 1), -1}, {g.e_index(i + 1, l + 1), -1}});
  v -= make_rational(l - 1, 2) * module.state({{e_theta, -2}});
  return v;
}

SingularityReport is_singular(const VacuumModule& module, const ModuleVector& v) {
  const SlAlgebra& g = module.algebra();
  const int l = g.rank();
  SingularityReport report;
  for (int j = 1; j <= l; ++j)
    report.checks.push_back({"e_" + std::to_string(j) + "(0)", module.act(Mode{g.e_index(j, j + 1), 0}, v)});
  report.checks.push_back({"f_theta(1)", module.act(Mode{g.f_index(1, l + 1), 1}, v)});
  report.singular = true;
  for (const auto& c : report.checks) report.singular = report.singular && c.result.is_zero();
  return report;
}

}  // namespace voa
