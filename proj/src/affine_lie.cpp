#include "voa/affine_lie.hpp"

#include <stdexcept>

namespace voa {

AffineElement::AffineElement(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("affine algebra rank must be positive");
}

AffineElement::AffineElement(int rank, const std::vector<LoopTerm>& terms, Rational central)
    : AffineElement(rank) {
  for (const auto& t : terms) add(t.n, t.x);
  central_ = std::move(central);
}

AffineElement AffineElement::loop(const LieElement& x, int n) {
  AffineElement a(x.rank());
  a.add(n, x);
  return a;
}

AffineElement AffineElement::central_element(int rank) {
  AffineElement a(rank);
  a.central_ = 1;
  return a;
}

void AffineElement::add(int n, const LieElement& x) {
  if (x.rank() != rank_) throw std::invalid_argument("affine element rank mismatch");
  if (x.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(n, x);
  if (!inserted) {
    it->second += x;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AffineElement& AffineElement::operator+=(const AffineElement& other) {
  if (other.rank_ != rank_) throw std::invalid_argument("affine element rank mismatch");
  for (const auto& [n, x] : other.terms_) add(n, x);
  central_ += other.central_;
  return *this;
}

AffineElement& AffineElement::operator-=(const AffineElement& other) {
  if (other.rank_ != rank_) throw std::invalid_argument("affine element rank mismatch");
  for (const auto& [n, x] : other.terms_) add(n, -x);
  central_ -= other.central_;
  return *this;
}

AffineElement& AffineElement::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    central_ = 0;
    return *this;
  }
  for (auto& [n, x] : terms_) x *= s;
  central_ *= s;
  return *this;
}

std::string to_string(const AffineElement& a) {
  std::string out;
  for (const auto& [n, x] : a.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(x) + ")(" + std::to_string(n) + ")";
  }
  if (sgn(a.central()) != 0) {
    if (!out.empty()) out += " + ";
    out += to_string(a.central()) + "*c";
  }
  return out.empty() ? "0" : out;
}

AffineElement affine_bracket(const AffineElement& a, const AffineElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("affine element rank mismatch");
  AffineElement out(a.rank());
  Rational central = 0;
  for (const auto& [m, x] : a.terms())
    for (const auto& [n, y] : b.terms()) {
      out += AffineElement::loop(bracket(x, y), m + n);
      if (m + n == 0) central += Rational(m) * invariant_form(x, y);
    }
  out += central * AffineElement::central_element(a.rank());
  return out;
}

AffineWeight::AffineWeight(Rational level_, Weight finite_, Rational delta_)
    : level(std::move(level_)), finite(std::move(finite_)), delta(std::move(delta_)) {}

AffineWeight& AffineWeight::operator+=(const AffineWeight& other) {
  level += other.level;
  finite += other.finite;
  delta += other.delta;
  return *this;
}

AffineWeight& AffineWeight::operator-=(const AffineWeight& other) {
  level -= other.level;
  finite -= other.finite;
  delta -= other.delta;
  return *this;
}

AffineWeight& AffineWeight::operator*=(const Rational& s) {
  level *= s;
  finite *= s;
  delta *= s;
  return *this;
}

std::string to_string(const AffineWeight& w) {
  return to_string(w.level) + "*Lambda0 + " + to_string(w.finite) + " + " + to_string(w.delta) + "*delta";
}

AffineWeight affine_weyl_vector(int l) { return {Rational(l + 1), weyl_vector(l), 0}; }

AffineWeight RealRoot::as_weight(int l) const { return {0, root_as_weight(l, alpha), m}; }

std::vector<int> RealRoot::coroot_coords(int l) const {
  std::vector<int> v(static_cast<std::size_t>(l + 1), 0);
  RootIndex a = alpha.positive() ? alpha : alpha.negated();
  int s = alpha.positive() ? 1 : -1;
  for (int t = a.i; t < a.j; ++t) v[static_cast<std::size_t>(t - 1)] = s;
  v[static_cast<std::size_t>(l)] = m;
  return v;
}

std::string to_string(const RealRoot& r) {
  std::string finite = r.alpha.positive() ? to_string(r.alpha) : "-(" + to_string(r.alpha.negated()) + ")";
  if (r.m == 0) return finite;
  return finite + " + " + std::to_string(r.m) + "delta";
}

RealRoot affine_simple_root_zero(int l) { return {{l + 1, 1}, 1}; }

Rational affine_pairing(const AffineWeight& lambda, const RealRoot& r) {
  return pairing(lambda.finite, r.alpha) + Rational(r.m) * lambda.level;
}

std::vector<RealRoot> enumerate_positive_real_roots(int l, int max_m) {
  if (max_m < 0) throw std::invalid_argument("max_m must be nonnegative");
  const auto pos = positive_roots(l);
  std::vector<RealRoot> out;
  for (const auto& a : pos) out.push_back({a, 0});
  for (int m = 1; m <= max_m; ++m) {
    for (const auto& a : pos) out.push_back({a, m});
    for (const auto& a : pos) out.push_back({a.negated(), m});
  }
  return out;
}

AffineWeight shifted_reflection(const AffineWeight& lambda, const RealRoot& r) {
  const int l = lambda.rank();
  Rational c = affine_pairing(lambda + affine_weyl_vector(l), r);
  return lambda - c * r.as_weight(l);
}

}  // namespace voa
