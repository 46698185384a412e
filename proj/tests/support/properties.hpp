#pragma once

// Randomized exact identities. Each function returns the number of failing
// samples out of `samples`.

#include "random.hpp"
#include "voa/affine_lie.hpp"
#include "voa/enveloping.hpp"
#include "voa/verma.hpp"

namespace voa::testing {

inline int finite_jacobi_failures(int l, int samples) {
  Sampler rng(100 + l);
  int failures = 0;
  for (int k = 0; k < samples; ++k) {
    LieElement x = rng.lie(l), y = rng.lie(l), z = rng.lie(l);
    LieElement j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    if (!j.is_zero()) ++failures;
  }
  // the tabulated structure constants on basis triples
  const SlAlgebra& g = *SlAlgebra::shared(l);
  auto br = [&](const SlAlgebra::Sparse& u, const SlAlgebra::Sparse& v) {
    LieElement acc(l);
    for (const auto& [i, ci] : u)
      for (const auto& [j, cj] : v) acc += (ci * cj) * g.compose(g.bracket(i, j));
    return g.decompose(acc);
  };
  for (int k = 0; k < samples; ++k) {
    SlAlgebra::Sparse A{{rng.basis_index(g), 1}}, B{{rng.basis_index(g), 1}}, C{{rng.basis_index(g), 1}};
    LieElement sum = g.compose(br(A, br(B, C))) + g.compose(br(B, br(C, A))) + g.compose(br(C, br(A, B)));
    if (!sum.is_zero()) ++failures;
  }
  return failures;
}

inline int affine_jacobi_failures(int l, int samples) {
  Sampler rng(200 + l);
  int failures = 0;
  for (int k = 0; k < samples; ++k) {
    AffineElement x = rng.affine(l), y = rng.affine(l), z = rng.affine(l);
    AffineElement j = affine_bracket(x, affine_bracket(y, z)) + affine_bracket(y, affine_bracket(z, x)) +
                      affine_bracket(z, affine_bracket(x, y));
    if (!j.is_zero()) ++failures;
  }
  return failures;
}

inline int representation_failures(int l, int samples) {
  Sampler rng(300 + l);
  VacuumModule N(l);
  const SlAlgebra& g = N.algebra();
  int failures = 0;
  for (int k = 0; k < samples; ++k) {
    Mode ma = rng.mode(g, -2, 2), mb = rng.mode(g, -2, 2);
    AffineElement a = rng.rational() * AffineElement::loop(g.basis(ma.generator).matrix, ma.degree);
    AffineElement b = AffineElement::loop(g.basis(mb.generator).matrix, mb.degree);
    if (rng.uniform(0, 1)) b += AffineElement::loop(rng.lie(l, 2), rng.uniform(-1, 1));
    ModuleVector v = rng.module_vector(N, 3);
    ModuleVector lhs = N.act(affine_bracket(a, b), v);
    ModuleVector rhs = N.act(a, N.act(b, v)) - N.act(b, N.act(a, v));
    if (!(lhs == rhs)) ++failures;
  }
  return failures;
}

inline int idempotence_failures(int l, int samples) {
  Sampler rng(400 + l);
  const EnvelopingAlgebra& U = *EnvelopingAlgebra::shared(l);
  int failures = 0;
  for (int k = 0; k < samples; ++k) {
    std::vector<int> word(static_cast<std::size_t>(rng.uniform(1, 4)));
    for (int& a : word) a = rng.basis_index(U.algebra());
    UEAElement once = U.normalize(word);
    UEAElement twice = U.zero();
    bool fixed = true;
    for (const auto& [w, c] : once.terms()) {
      UEAElement again = U.normalize(letters(w));
      if (!(again == UEAElement(l, {{w, Rational(1)}}))) fixed = false;
      twice += c * again;
    }
    if (!fixed || !(twice == once)) ++failures;
  }
  return failures;
}

inline int associativity_failures(int l, int samples) {
  Sampler rng(500 + l);
  const EnvelopingAlgebra& U = *EnvelopingAlgebra::shared(l);
  int failures = 0;
  for (int k = 0; k < samples; ++k) {
    UEAElement a = rng.uea(U, 2), b = rng.uea(U, 2), c = rng.uea(U, 2);
    if (!(U.multiply(U.multiply(a, b), c) == U.multiply(a, U.multiply(b, c)))) ++failures;
  }
  return failures;
}

inline int derivation_failures(int l, int samples) {
  Sampler rng(600 + l);
  const EnvelopingAlgebra& U = *EnvelopingAlgebra::shared(l);
  int failures = 0;
  for (int k = 0; k < samples; ++k) {
    int x = rng.basis_index(U.algebra());
    UEAElement f = rng.uea(U, 2), h = rng.uea(U, 2);
    if (!(U.adjoint(x, U.multiply(f, h)) == U.multiply(U.adjoint(x, f), h) + U.multiply(f, U.adjoint(x, h))))
      ++failures;
  }
  return failures;
}

}  // namespace voa::testing
