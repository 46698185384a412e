#include <doctest.h>

#include <stdexcept>

#include "voa/finite_lie.hpp"

using namespace voa;

TEST_CASE("Chevalley relations") {
  const int l = 4;
  CHECK(bracket(chevalley_e(l, 1), chevalley_f(l, 1)) == chevalley_h(l, 1));
  CHECK(bracket(chevalley_h(l, 1), chevalley_e(l, 1)) == Rational(2) * chevalley_e(l, 1));
  CHECK(bracket(chevalley_h(l, 2), chevalley_e(l, 1)) == Rational(-1) * chevalley_e(l, 1));
  CHECK(bracket(chevalley_e(l, 1), chevalley_e(l, 1)).is_zero());
  CHECK(bracket(chevalley_e(l, 1), chevalley_e(l, 3)).is_zero());
}

TEST_CASE("rank mismatch and trace are rejected") {
  CHECK_THROWS_AS(bracket(chevalley_e(2, 1), chevalley_e(4, 1)), std::invalid_argument);
  CHECK_THROWS_AS(invariant_form(chevalley_e(2, 1), chevalley_e(4, 1)), std::invalid_argument);
  CHECK_THROWS_AS(LieElement(2, {{{1, 1}, Rational(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(LieElement(2, {{{1, 4}, Rational(1)}}), std::invalid_argument);
}

TEST_CASE("nested-bracket root vectors") {
  const int l = 4;
  for (int i = 1; i <= l; ++i) {
    CHECK(root_vector_e(l, i, i + 1).element == LieElement::unit(l, i, i + 1));
    CHECK(root_vector_e(l, i, i + 1).sign == 1);
    CHECK(root_vector_f(l, i, i + 1).element == LieElement::unit(l, i + 1, i));
  }
  // [e_2, e_1] = E23 E12 - E12 E23 = -E13
  RootVector e13 = root_vector_e(2, 1, 3);
  CHECK(e13.sign == -1);
  CHECK(e13.element == bracket(chevalley_e(2, 2), chevalley_e(2, 1)));
  CHECK(root_vector_f(2, 1, 3).element == bracket(chevalley_f(2, 1), chevalley_f(2, 2)));

  for (int i = 1; i <= l + 1; ++i)
    for (int j = i + 1; j <= l + 1; ++j) {
      RootVector e = root_vector_e(l, i, j), f = root_vector_f(l, i, j);
      CHECK(e.element == Rational(e.sign) * LieElement::unit(l, i, j));
      CHECK(f.element == Rational(f.sign) * LieElement::unit(l, j, i));
      int expected = (j - i - 1) % 2 == 0 ? 1 : -1;
      CHECK(e.sign == expected);
    }
  CHECK_THROWS(root_vector_e(l, 3, 2));
  CHECK_THROWS(root_vector_f(l, 2, 2));
}

TEST_CASE("coroots") {
  const int l = 4;
  CHECK(coroot(l, {1, 2}) == chevalley_h(l, 1));
  LieElement sum(l);
  for (int p = 1; p <= l; ++p) sum += chevalley_h(l, p);
  CHECK(coroot(l, {1, l + 1}) == sum);
  CHECK(coroot(l, {2, 4}) == chevalley_h(l, 2) + chevalley_h(l, 3));
  for (int i = 1; i <= l + 1; ++i)
    for (int j = i + 1; j <= l + 1; ++j) {
      LieElement e = root_vector_e(l, i, j).element;
      CHECK(bracket(coroot(l, {i, j}), e) == Rational(2) * e);
    }
  CHECK_THROWS(coroot(l, {3, 1}));
}

TEST_CASE("invariant form") {
  const int l = 4;
  RootVector e = root_vector_e(l, 1, l + 1), f = root_vector_f(l, 1, l + 1);
  CHECK(invariant_form(e.element, f.element) == e.sign * f.sign);
  LieElement h = coroot(l, {1, l + 1});
  CHECK(invariant_form(h, h) == 2);
  CHECK(invariant_form(chevalley_e(l, 1), chevalley_e(l, 2)) == 0);
}

TEST_CASE("weights of elements") {
  const int l = 2;
  auto w = weight_of(chevalley_e(l, 1));
  REQUIRE(w.has_value());
  CHECK((*w)[1] == 2);
  CHECK((*w)[2] == -1);
  auto z = weight_of(chevalley_h(l, 1));
  REQUIRE(z.has_value());
  CHECK(z->is_zero());
  CHECK_FALSE(weight_of(chevalley_e(l, 1) + chevalley_f(l, 1)).has_value());
  CHECK_FALSE(weight_of(LieElement(l)).has_value());
}

TEST_CASE("basis table agrees with matrices") {
  for (int l : {2, 4}) {
    const SlAlgebra& g = *SlAlgebra::shared(l);
    CHECK(g.dim() == (l + 1) * (l + 1) - 1);
    for (int a = 0; a + 1 < g.dim(); ++a) {
      // f < h < e
      CHECK(static_cast<int>(g.basis(a).kind) <= static_cast<int>(g.basis(a + 1).kind));
    }
    for (int a = 0; a < g.dim(); ++a) {
      CHECK(g.compose(g.decompose(g.basis(a).matrix)) == g.basis(a).matrix);
      for (int b = 0; b < g.dim(); ++b) {
        CHECK(g.compose(g.bracket(a, b)) == bracket(g.basis(a).matrix, g.basis(b).matrix));
        CHECK(g.form(a, b) == invariant_form(g.basis(a).matrix, g.basis(b).matrix));
      }
    }
    CHECK(g.basis(g.e_index(1, 2)).name == "e[1,2]");
    CHECK(g.basis(g.f_index(1, l + 1)).name == "f[1," + std::to_string(l + 1) + "]");
    CHECK(g.basis(g.h_index(1)).name == "h[1]");
  }
}

TEST_CASE("invariance of the form on basis triples") {
  const SlAlgebra& g = *SlAlgebra::shared(2);
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < g.dim(); ++b)
      for (int c = 0; c < g.dim(); ++c) {
        const LieElement& x = g.basis(a).matrix;
        const LieElement& y = g.basis(b).matrix;
        const LieElement& z = g.basis(c).matrix;
        CHECK(invariant_form(bracket(x, y), z) == invariant_form(x, bracket(y, z)));
      }
}
