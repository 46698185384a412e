#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "random.hpp"
#include "voa/enveloping.hpp"
#include "voa/linalg.hpp"

using namespace voa;

namespace {

// f_from f_{from-1} ... f_1
std::vector<int> f_down(const SlAlgebra& g, int from) {
  std::vector<int> out;
  for (int p = from; p >= 1; --p) out.push_back(g.f_index(p, p + 1));
  return out;
}

// f_from f_{from+1} ... f_l
std::vector<int> f_up(const SlAlgebra& g, int from) {
  std::vector<int> out;
  for (int p = from; p <= g.rank(); ++p) out.push_back(g.f_index(p, p + 1));
  return out;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Rational sign_power(int n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

TEST_CASE("normalization examples") {
  const EnvelopingAlgebra& U = *EnvelopingAlgebra::shared(4);
  const SlAlgebra& g = U.algebra();
  const int e1 = g.e_index(1, 2), f1 = g.f_index(1, 2), h1 = g.h_index(1), h2 = g.h_index(2);
  CHECK(U.normalize(std::vector<int>{e1, f1}) == U.normalize(std::vector<int>{f1, e1}) + U.generator(h1));
  UEAElement hh = U.normalize(std::vector<int>{h1, h2});
  CHECK(hh.terms().size() == 1);
  CHECK(hh == U.normalize(std::vector<int>{h2, h1}));

  const int eth = g.e_index(1, 5), fth = g.f_index(1, 5);
  UEAElement ef = U.normalize(std::vector<int>{eth, fth});
  UEAElement want = U.normalize(std::vector<int>{fth, eth}) + U.from_lie(bracket(g.basis(eth).matrix, g.basis(fth).matrix));
  CHECK(ef == want);
  CHECK(U.from_lie(bracket(g.basis(eth).matrix, g.basis(fth).matrix)) ==
        Rational(g.basis(eth).sign * g.basis(fth).sign) * U.from_lie(coroot(4, {1, 5})));
  CHECK(U.normalize(std::vector<int>{}) == U.one());
}

TEST_CASE("adjoint examples") {
  const EnvelopingAlgebra& U = *EnvelopingAlgebra::shared(2);
  const SlAlgebra& g = U.algebra();
  CHECK(U.adjoint(g.h_index(1), U.generator(g.e_index(1, 2))) == Rational(2) * U.generator(g.e_index(1, 2)));
  for (int a = 0; a < g.dim(); ++a) CHECK(U.adjoint(a, U.one()).is_zero());
}

TEST_CASE("the five chain relations") {
  for (int l : {2, 4, 6}) {
    const EnvelopingAlgebra& U = *EnvelopingAlgebra::shared(l);
    const SlAlgebra& g = U.algebra();
    auto e = [&](int a, int b) { return U.generator(g.e_index(a, b)); };
    auto f = [&](int a, int b) { return U.generator(g.f_index(a, b)); };
    for (int i = 1; i <= l; ++i) {
      CAPTURE(l);
      CAPTURE(i);
      auto full = concat(f_down(g, i), f_up(g, i + 1));
      CHECK(full == lowering_chain(l, i));
      CHECK(U.adjoint_chain(full, e(1, l + 1)) == sign_power(i) * U.generator(g.h_index(i)));
      for (int j = 1; j < i; ++j) {
        CAPTURE(j);
        CHECK(U.adjoint_chain(f_down(g, i), e(1, j + 1)) == sign_power(i) * f(j + 1, i + 1));
        CHECK(U.adjoint_chain(f_up(g, i + 1), e(j + 1, l + 1)) == e(j + 1, i + 1));
      }
      for (int j = 1; j < i - 1; ++j) {
        CAPTURE(j);
        CHECK(U.adjoint_chain(f_down(g, i - 1), e(1, j + 1)) == sign_power(i - 1) * f(j + 1, i));
        CHECK(U.adjoint_chain(f_up(g, i), e(j + 1, l + 1)) == e(j + 1, i));
      }
    }
  }
}

TEST_CASE("Zhu map on single modes") {
  const int l = 4;
  VacuumModule N(l);
  const EnvelopingAlgebra& U = *EnvelopingAlgebra::shared(l);
  const SlAlgebra& g = N.algebra();
  for (int a = 0; a < g.dim(); ++a) CHECK(zhu_F(N.state({{a, -1}})) == U.generator(a));
  const int eth = g.e_index(1, l + 1);
  CHECK(zhu_F(N.state({{eth, -2}})) == Rational(-1) * U.generator(eth));
  CHECK(zhu_F(N.vacuum()) == U.one());
}

TEST_CASE("Zhu map is consistent on non-canonical products") {
  testing::Sampler rng(7);
  for (int l : {2, 4}) {
    VacuumModule N(l);
    const EnvelopingAlgebra& U = *EnvelopingAlgebra::shared(l);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Mode> modes;
      const int m = rng.uniform(1, 3);
      int total = 0;
      std::vector<int> reversed;
      for (int k = 0; k < m; ++k) {
        Mode x = rng.mode(N.algebra(), -3, -1);
        modes.push_back(x);
        total += -x.degree - 1;
        reversed.insert(reversed.begin(), x.generator);
      }
      CHECK(zhu_F(N.state(modes)) == sign_power(total) * U.normalize(reversed));
    }
  }
}

TEST_CASE("v prime") {
  const EnvelopingAlgebra& U = *EnvelopingAlgebra::shared(2);
  const SlAlgebra& g = U.algebra();
  const int eth = g.e_index(1, 3);
  UEAElement want = make_rational(1, 3) * U.normalize(std::vector<int>{g.h_index(1), eth}) -
                    make_rational(1, 3) * U.normalize(std::vector<int>{g.h_index(2), eth}) -
                    U.normalize(std::vector<int>{g.e_index(2, 3), g.e_index(1, 2)}) + make_rational(1, 2) * U.generator(eth);
  CHECK(v_prime(2) == want);
  CHECK(v_prime(2).terms().size() == 4);
  auto w = U.weight(v_prime(2));
  REQUIRE(w.has_value());
  CHECK(*w == root_as_weight(2, highest_root(2)));
  CHECK_THROWS_AS(v_prime(3), std::invalid_argument);
  for (int l : {2, 4, 6}) {
    CHECK(zhu_F(singular_vector(l)) == v_prime(l));
    // [h_i, e_theta] corrections cancel between i = 1 and i = l
    CHECK(v_prime(l) == v_prime_unswapped(l));
  }
}

TEST_CASE("projection to Cartan polynomials") {
  const int l = 2;
  const EnvelopingAlgebra& U = *EnvelopingAlgebra::shared(l);
  const SlAlgebra& g = U.algebra();
  const int e1 = g.e_index(1, 2), f1 = g.f_index(1, 2), h1 = g.h_index(1), h2 = g.h_index(2);
  auto H1 = CartanPolynomial::variable(l, 1), H2 = CartanPolynomial::variable(l, 2);
  UEAElement r = U.normalize(std::vector<int>{h1, h2}) + U.normalize(std::vector<int>{e1, f1});
  CHECK(U.project_to_polynomial(r) == H1 * H2 + H1);
  CHECK(U.project_to_polynomial(U.normalize(std::vector<int>{f1, e1})).is_zero());
  CHECK(U.project_to_polynomial(U.generator(h1)) == H1);
  CHECK_THROWS_AS(U.project_to_polynomial(U.generator(e1)), std::invalid_argument);
}

TEST_CASE("projection agrees with acting on a highest-weight vector") {
  testing::Sampler rng(11);
  for (int l : {2, 4}) {
    const EnvelopingAlgebra& U = *EnvelopingAlgebra::shared(l);
    const SlAlgebra& g = U.algebra();
    auto roots = positive_roots(l);
    for (int trial = 0; trial < 40; ++trial) {
      // zero-weight words: a few e/f pairs and Cartan letters, shuffled
      std::vector<int> word;
      const int pairs = rng.uniform(1, 2);
      for (int k = 0; k < pairs; ++k) {
        const RootIndex& a = roots[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(roots.size()) - 1))];
        word.push_back(g.e_index(a));
        word.push_back(g.f_index(a));
      }
      if (rng.uniform(0, 1)) word.push_back(g.h_index(rng.uniform(1, l)));
      for (std::size_t k = word.size(); k > 1; --k)
        std::swap(word[k - 1], word[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(k) - 1))]);

      CartanPolynomial p = U.project_to_polynomial(U.normalize(word));
      Weight mu(l);
      for (int q = 1; q <= l; ++q) mu[q] = rng.rational(true);
      testing::HighestWeightOracle oracle(l, mu);
      std::vector<LieElement> xs;
      for (int a : word) xs.push_back(g.basis(a).matrix);
      auto v = oracle.act_word(xs, oracle.highest());
      Rational value = p.evaluate(mu);
      if (sgn(value) == 0) {
        CHECK(v.empty());
      } else {
        REQUIRE(v.size() == 1);
        CHECK(v.begin()->first.empty());
        CHECK(v.begin()->second == value);
      }
    }
  }
}

TEST_CASE("adjoint module R") {
  for (int l : {2, 4}) {
    AdjointModule R = generate_R(l);
    CHECK(R.dimension() == (l + 1) * (l + 1) - 1);
    CHECK(R.zero_weight_dimension() == l);
    CHECK(R.highest_weight == root_as_weight(l, highest_root(l)));
    CHECK(R.basis.front() == zhu_F(singular_vector(l)));
  }
}

TEST_CASE("adjoint module bound is enforced") {
  const EnvelopingAlgebra& U = *EnvelopingAlgebra::shared(2);
  CHECK_THROWS_AS(generate_adjoint_module(U, v_prime(2), 4), AlgebraError);
}

TEST_CASE("zero-weight polynomials") {
  const int l = 2;
  auto H1 = CartanPolynomial::variable(l, 1), H2 = CartanPolynomial::variable(l, 2);
  auto P = polynomials_P0(l);
  REQUIRE(P.size() == 2);
  CHECK(P[0] == H1 * (make_rational(1, 3) * H1 + make_rational(2, 3) * H2 + CartanPolynomial::constant(l, make_rational(1, 2))));
  CHECK(P[1] == H2 * (make_rational(-2, 3) * H1 + make_rational(-1, 3) * H2 + CartanPolynomial::constant(l, make_rational(-1, 2))));

  for (int l2 : {2, 4, 6}) {
    auto Q = polynomials_P0(l2);
    for (int i = 1; i <= l2; ++i) CHECK(Q[static_cast<std::size_t>(i - 1)] == closed_form_polynomial(l2, i));
    SparseEchelon<CartanPolynomial::Exponents> span;
    for (const auto& p : Q) CHECK(span.insert(SparseEchelon<CartanPolynomial::Exponents>::Vector(p.terms().begin(), p.terms().end())));
    CHECK(span.rank() == l2);
  }
}

TEST_CASE("projection of R0 spans the same space as P0") {
  for (int l : {2, 4}) {
    const EnvelopingAlgebra& U = *EnvelopingAlgebra::shared(l);
    AdjointModule R = generate_R(l);
    using Echelon = SparseEchelon<CartanPolynomial::Exponents>;
    Echelon ours, theirs;
    for (const auto& p : polynomials_P0(l)) ours.insert(Echelon::Vector(p.terms().begin(), p.terms().end()));
    for (const auto& r : R.zero_weight_basis) {
      auto p = U.project_to_polynomial(r);
      theirs.insert(Echelon::Vector(p.terms().begin(), p.terms().end()));
      CHECK(ours.contains(Echelon::Vector(p.terms().begin(), p.terms().end())));
    }
    CHECK(theirs.rank() == l);
  }
}
