#include "voa/cartan_polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace voa {

namespace {

using Univariate = std::vector<Rational>;

Univariate multiply(const Univariate& a, const Univariate& b) {
  if (a.empty() || b.empty()) return {};
  Univariate out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

CartanPolynomial::CartanPolynomial(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("polynomial rank must be positive");
}

CartanPolynomial CartanPolynomial::variable(int rank, int p) {
  if (p < 1 || p > rank) throw std::invalid_argument("variable index out of range");
  CartanPolynomial out(rank);
  Exponents e(static_cast<std::size_t>(rank), 0);
  e[static_cast<std::size_t>(p - 1)] = 1;
  out.add(e, 1);
  return out;
}

CartanPolynomial CartanPolynomial::constant(int rank, const Rational& c) {
  CartanPolynomial out(rank);
  out.add(Exponents(static_cast<std::size_t>(rank), 0), c);
  return out;
}

int CartanPolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

Rational CartanPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CartanPolynomial::add(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != rank_) throw std::invalid_argument("exponent vector has wrong length");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

CartanPolynomial& CartanPolynomial::operator+=(const CartanPolynomial& other) {
  if (other.rank_ != rank_) throw std::invalid_argument("polynomial rank mismatch");
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

CartanPolynomial& CartanPolynomial::operator-=(const CartanPolynomial& other) {
  if (other.rank_ != rank_) throw std::invalid_argument("polynomial rank mismatch");
  for (const auto& [e, c] : other.terms_) add(e, -c);
  return *this;
}

CartanPolynomial& CartanPolynomial::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

CartanPolynomial operator*(const CartanPolynomial& a, const CartanPolynomial& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("polynomial rank mismatch");
  CartanPolynomial out(a.rank_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      CartanPolynomial::Exponents e = ea;
      for (std::size_t p = 0; p < e.size(); ++p) e[p] += eb[p];
      out.add(e, ca * cb);
    }
  return out;
}

Rational CartanPolynomial::evaluate(const Weight& mu) const {
  if (mu.rank() != rank_) throw std::invalid_argument("weight rank mismatch");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int p = 1; p <= rank_; ++p)
      for (int k = 0; k < e[static_cast<std::size_t>(p - 1)]; ++k) term *= mu[p];
    total += term;
  }
  return total;
}

CartanPolynomial CartanPolynomial::restrict_to(const std::vector<bool>& keep) const {
  if (static_cast<int>(keep.size()) != rank_) throw std::invalid_argument("support mask has wrong length");
  CartanPolynomial out(rank_);
  for (const auto& [e, c] : terms_) {
    bool survives = true;
    for (std::size_t p = 0; p < e.size(); ++p)
      if (e[p] > 0 && !keep[p]) survives = false;
    if (survives) out.add(e, c);
  }
  return out;
}

CartanPolynomial CartanPolynomial::divide_by_variable(int p) const {
  if (p < 1 || p > rank_) throw std::invalid_argument("variable index out of range");
  CartanPolynomial out(rank_);
  for (const auto& [e, c] : terms_) {
    Exponents reduced = e;
    auto& x = reduced[static_cast<std::size_t>(p - 1)];
    if (x == 0) throw AlgebraError("polynomial " + to_string(*this) + " is not divisible by h" + std::to_string(p));
    --x;
    out.add(reduced, c);
  }
  return out;
}

std::vector<Rational> CartanPolynomial::substitute_affine(const std::vector<Rational>& offsets,
                                                          const std::vector<Rational>& slopes) const {
  if (static_cast<int>(offsets.size()) != rank_ || static_cast<int>(slopes.size()) != rank_)
    throw std::invalid_argument("substitution has wrong length");
  Univariate total;
  for (const auto& [e, c] : terms_) {
    Univariate term{c};
    for (int p = 0; p < rank_; ++p)
      for (int k = 0; k < e[static_cast<std::size_t>(p)]; ++k)
        term = multiply(term, {offsets[static_cast<std::size_t>(p)], slopes[static_cast<std::size_t>(p)]});
    if (term.size() > total.size()) total.resize(term.size());
    for (std::size_t i = 0; i < term.size(); ++i) total[i] += term[i];
  }
  while (!total.empty() && sgn(total.back()) == 0) total.pop_back();
  return total;
}

std::string to_string(const CartanPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // Highest degree first, then lexicographically larger exponent vectors.
  std::vector<std::pair<const CartanPolynomial::Exponents*, const Rational*>> order;
  for (const auto& [e, c] : p.terms()) order.push_back({&e, &c});
  auto deg = [](const CartanPolynomial::Exponents& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
  };
  std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    if (deg(*a.first) != deg(*b.first)) return deg(*a.first) > deg(*b.first);
    return *a.first > *b.first;
  });
  for (const auto& [e, c] : order) {
    Rational mag = abs(*c);
    if (out.empty()) {
      if (sgn(*c) < 0) out += "-";
    } else {
      out += sgn(*c) < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t q = 0; q < e->size(); ++q) {
      int x = (*e)[q];
      if (x == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "h" + std::to_string(q + 1);
      if (x > 1) mono += "^" + std::to_string(x);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace voa
