#include "voa/enveloping.hpp"

#include <deque>
#include <stdexcept>

#include "voa/linalg.hpp"

namespace voa {

UEAElement::UEAElement(int rank) : rank_(rank) {}

UEAElement::UEAElement(int rank, Terms terms) : rank_(rank) {
  for (const auto& [w, c] : terms) add(w, c);
}

Rational UEAElement::coefficient(const UEAWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void UEAElement::add(const UEAWord& w, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

UEAElement& UEAElement::operator+=(const UEAElement& other) {
  if (other.rank_ != rank_) throw std::invalid_argument("enveloping element rank mismatch");
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& other) {
  if (other.rank_ != rank_) throw std::invalid_argument("enveloping element rank mismatch");
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

UEAElement& UEAElement::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

int word_length(const UEAWord& w) {
  int n = 0;
  for (const auto& f : w) n += f.exponent;
  return n;
}

std::string to_string(const UEAWord& w, const SlAlgebra& g) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& f : w) {
    if (!out.empty()) out += "*";
    out += g.basis(f.generator).name;
    if (f.exponent > 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

std::string to_string(const UEAElement& x) {
  if (x.is_zero()) return "0";
  auto g = SlAlgebra::shared(x.rank());
  std::string out;
  for (const auto& [w, c] : x.terms()) {
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (w.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += to_string(w, *g);
    }
  }
  return out;
}

EnvelopingAlgebra::EnvelopingAlgebra(int l) : g_(SlAlgebra::shared(l)) {}

std::shared_ptr<const EnvelopingAlgebra> EnvelopingAlgebra::shared(int l) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const EnvelopingAlgebra>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[l];
  if (!slot) slot = std::make_shared<const EnvelopingAlgebra>(l);
  return slot;
}

UEAElement EnvelopingAlgebra::one() const {
  UEAElement out(rank());
  out.add({}, 1);
  return out;
}

UEAElement EnvelopingAlgebra::generator(int a) const {
  if (a < 0 || a >= g_->dim()) throw std::invalid_argument("generator index out of range");
  UEAElement out(rank());
  out.add({{a, 1}}, 1);
  return out;
}

UEAElement EnvelopingAlgebra::from_lie(const LieElement& x) const {
  UEAElement out(rank());
  for (const auto& [a, c] : g_->decompose(x)) out.add({{a, 1}}, c);
  return out;
}

const EnvelopingAlgebra::Terms& EnvelopingAlgebra::left_multiply(int x, const UEAWord& w) const {
  std::pair<int, UEAWord> key{x, w};
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }

  Terms out;
  auto accumulate = [&out](const UEAWord& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = out.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) out.erase(it);
    }
  };

  if (w.empty() || x < w.front().generator) {
    UEAWord m;
    m.reserve(w.size() + 1);
    m.push_back({x, 1});
    m.insert(m.end(), w.begin(), w.end());
    accumulate(m, 1);
  } else if (x == w.front().generator) {
    UEAWord m = w;
    ++m.front().exponent;
    accumulate(m, 1);
  } else {
    // x y w' = y (x w') + [x, y] w'.
    const int y = w.front().generator;
    UEAWord rest = w;
    if (--rest.front().exponent == 0) rest.erase(rest.begin());
    const Terms inner = left_multiply(x, rest);
    for (const auto& [m, c] : inner)
      for (const auto& [m2, c2] : left_multiply(y, m)) accumulate(m2, c * c2);
    for (const auto& [z, c] : g_->bracket(x, y))
      for (const auto& [m2, c2] : left_multiply(z, rest)) accumulate(m2, c * c2);
  }

  std::lock_guard lock(cache_mutex_);
  auto [it, inserted] = cache_.emplace(std::move(key), std::move(out));
  return it->second;
}

UEAElement EnvelopingAlgebra::normalize(std::span<const int> generators) const {
  Terms current{{UEAWord{}, Rational(1)}};
  for (auto it = generators.rbegin(); it != generators.rend(); ++it) {
    if (*it < 0 || *it >= g_->dim()) throw std::invalid_argument("generator index out of range");
    UEAElement next(rank());
    for (const auto& [w, c] : current)
      for (const auto& [w2, c2] : left_multiply(*it, w)) next.add(w2, c * c2);
    current = next.terms();
  }
  return UEAElement(rank(), current);
}

UEAElement EnvelopingAlgebra::multiply(const UEAElement& a, const UEAElement& b) const {
  if (a.rank() != rank() || b.rank() != rank()) throw std::invalid_argument("enveloping element rank mismatch");
  UEAElement out(rank());
  for (const auto& [u, cu] : a.terms()) {
    Terms current = b.terms();
    for (auto f = u.rbegin(); f != u.rend(); ++f)
      for (int k = 0; k < f->exponent; ++k) {
        UEAElement next(rank());
        for (const auto& [w, c] : current)
          for (const auto& [w2, c2] : left_multiply(f->generator, w)) next.add(w2, c * c2);
        current = next.terms();
      }
    for (const auto& [w, c] : current) out.add(w, cu * c);
  }
  return out;
}

UEAElement EnvelopingAlgebra::adjoint(int x, const UEAElement& f) const {
  const UEAElement gx = generator(x);
  return multiply(gx, f) - multiply(f, gx);
}

UEAElement EnvelopingAlgebra::adjoint_chain(std::span<const int> xs, const UEAElement& f) const {
  UEAElement current = f;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) current = adjoint(*it, current);
  return current;
}

Weight EnvelopingAlgebra::word_weight(const UEAWord& w) const {
  Weight out(rank());
  for (const auto& f : w) out += Rational(f.exponent) * g_->basis(f.generator).weight;
  return out;
}

std::optional<Weight> EnvelopingAlgebra::weight(const UEAElement& f) const {
  if (f.is_zero()) return std::nullopt;
  Weight first = word_weight(f.terms().begin()->first);
  for (const auto& [w, c] : f.terms())
    if (!(word_weight(w) == first)) return std::nullopt;
  return first;
}

CartanPolynomial EnvelopingAlgebra::project_to_polynomial(const UEAElement& r) const {
  const int l = rank();
  CartanPolynomial out(l);
  for (const auto& [w, c] : r.terms()) {
    if (!word_weight(w).is_zero()) throw std::invalid_argument("projection needs a weight-zero element");
    bool raising = false;
    bool lowering = false;
    for (const auto& f : w) {
      raising = raising || g_->is_raising(f.generator);
      lowering = lowering || g_->is_lowering(f.generator);
    }
    // In f < h < e order, a trailing raising factor kills the highest-weight vector.
    if (raising) continue;
    if (lowering) throw AlgebraError("weight-zero word " + to_string(w, *g_) + " has lowering factors only");
    CartanPolynomial::Exponents e(static_cast<std::size_t>(l), 0);
    for (const auto& f : w) e[static_cast<std::size_t>(g_->basis(f.generator).cartan - 1)] = f.exponent;
    out.add(e, c);
  }
  return out;
}

UEAElement zhu_F(const ModuleVector& v) {
  auto U = EnvelopingAlgebra::shared(v.rank());
  UEAElement out = U->zero();
  for (const auto& [m, c] : v.terms()) {
    const auto& factors = m.factors();
    std::vector<int> reversed;
    int n_sum = 0;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      reversed.push_back(it->generator);
      n_sum += -it->degree - 1;
    }
    const Rational sign = n_sum % 2 == 0 ? 1 : -1;
    out += (c * sign) * U->normalize(reversed);
  }
  return out;
}

namespace {

UEAElement v_prime_impl(int l, bool swapped) {
  require_even_rank(l);
  auto U = EnvelopingAlgebra::shared(l);
  const SlAlgebra& g = U->algebra();
  const int e_theta = g.e_index(1, l + 1);
  UEAElement out = U->zero();
  for (int i = 1; i <= l; ++i) {
    const Rational c = make_rational(l - 2 * i + 1, l + 1);
    std::vector<int> word = swapped ? std::vector<int>{g.h_index(i), e_theta} : std::vector<int>{e_theta, g.h_index(i)};
    out += c * U->normalize(word);
  }
  for (int i = 1; i <= l - 1; ++i) {
    std::vector<int> word{g.e_index(i + 1, l + 1), g.e_index(1, i + 1)};
    out -= U->normalize(word);
  }
  out += make_rational(l - 1, 2) * U->generator(e_theta);
  return out;
}

}  // namespace

UEAElement v_prime(int l) { return v_prime_impl(l, true); }
UEAElement v_prime_unswapped(int l) { return v_prime_impl(l, false); }

AdjointModule generate_adjoint_module(const EnvelopingAlgebra& U, const UEAElement& generator, int bound) {
  const SlAlgebra& g = U.algebra();
  const int l = g.rank();
  auto top = U.weight(generator);
  if (!top) throw AlgebraError("adjoint module generator is not a weight vector");

  std::vector<int> actors;
  for (int p = 1; p <= l; ++p) actors.push_back(g.e_index(p, p + 1));
  for (int p = 1; p <= l; ++p) actors.push_back(g.f_index(p, p + 1));

  AdjointModule R{{}, {}, {}, *top};
  std::map<Weight, SparseEchelon<UEAWord>> spaces;
  std::deque<UEAElement> queue;
  auto offer = [&](const UEAElement& x, const Weight& w) {
    if (!spaces[w].insert(x.terms())) return;
    R.basis.push_back(x);
    ++R.multiplicities[w];
    if (w.is_zero()) R.zero_weight_basis.push_back(x);
    if (R.dimension() > bound)
      throw AlgebraError("adjoint closure exceeded " + std::to_string(bound) + " dimensions");
    queue.push_back(x);
  };

  offer(generator, *top);
  while (!queue.empty()) {
    const UEAElement x = queue.front();
    queue.pop_front();
    for (int a : actors) {
      UEAElement y = U.adjoint(a, x);
      if (y.is_zero()) continue;
      auto w = U.weight(y);
      if (!w) throw AlgebraError("adjoint action produced an inhomogeneous element");
      offer(y, *w);
    }
  }
  return R;
}

AdjointModule generate_R(int l) {
  require_even_rank(l);
  auto U = EnvelopingAlgebra::shared(l);
  const int dim_g = U->algebra().dim();
  return generate_adjoint_module(*U, zhu_F(singular_vector(l)), dim_g + l + 1);
}

std::vector<int> lowering_chain(int l, int i) {
  if (i < 1 || i > l) throw std::invalid_argument("chain index out of range");
  const SlAlgebra& g = *SlAlgebra::shared(l);
  std::vector<int> chain;
  for (int p = i; p >= 1; --p) chain.push_back(g.f_index(p, p + 1));
  for (int p = i + 1; p <= l; ++p) chain.push_back(g.f_index(p, p + 1));
  return chain;
}

CartanPolynomial adjoint_chain_polynomial(int l, int i) {
  require_even_rank(l);
  auto U = EnvelopingAlgebra::shared(l);
  const auto chain = lowering_chain(l, i);
  const UEAElement image = U->adjoint_chain(chain, zhu_F(singular_vector(l)));
  CartanPolynomial p = U->project_to_polynomial(image);
  if (i % 2 != 0) p *= Rational(-1);
  return p;
}

CartanPolynomial closed_form_polynomial(int l, int i) {
  require_even_rank(l);
  if (i < 1 || i > l) throw std::invalid_argument("polynomial index out of range");
  CartanPolynomial factor(l);
  for (int j = 1; j < i; ++j) factor += make_rational(-2 * j, l + 1) * CartanPolynomial::variable(l, j);
  factor += make_rational(l - 2 * i + 1, l + 1) * CartanPolynomial::variable(l, i);
  for (int j = i + 1; j <= l; ++j) factor += make_rational(2 * l - 2 * j + 2, l + 1) * CartanPolynomial::variable(l, j);
  factor += CartanPolynomial::constant(l, make_rational(l + 1, 2) - i);
  return CartanPolynomial::variable(l, i) * factor;
}

std::vector<CartanPolynomial> polynomials_P0(int l) {
  require_even_rank(l);
  std::vector<CartanPolynomial> out;
  for (int i = 1; i <= l; ++i) {
    CartanPolynomial computed = adjoint_chain_polynomial(l, i);
    if (!(computed == closed_form_polynomial(l, i)))
      throw AlgebraError("p_" + std::to_string(i) + " from the adjoint chain is " + to_string(computed) +
                         ", closed form is " + to_string(closed_form_polynomial(l, i)));
    out.push_back(std::move(computed));
  }
  return out;
}

}  // namespace voa
