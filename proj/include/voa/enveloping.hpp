#pragma once

// U(g) in the PBW basis for the order f < h < e, the map F from the vacuum
// module, the adjoint module R generated by v' and the zero-weight
// polynomials it produces on highest-weight vectors.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "voa/cartan_polynomial.hpp"
#include "voa/finite_lie.hpp"
#include "voa/verma.hpp"

namespace voa {

struct WordFactor {
  int generator;
  int exponent;
  auto operator<=>(const WordFactor&) const = default;
};

/// A PBW word: strictly increasing generators with positive exponents.
using UEAWord = std::vector<WordFactor>;

class UEAElement {
 public:
  using Terms = std::map<UEAWord, Rational>;

  explicit UEAElement(int rank);
  UEAElement(int rank, Terms terms);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const UEAWord& w) const;

  void add(const UEAWord& w, const Rational& c);
  UEAElement& operator+=(const UEAElement& other);
  UEAElement& operator-=(const UEAElement& other);
  UEAElement& operator*=(const Rational& s);
  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend UEAElement operator*(const Rational& s, UEAElement a) { return a *= s; }
  friend bool operator==(const UEAElement& a, const UEAElement& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  int rank_;
  Terms terms_;
};

std::string to_string(const UEAWord& w, const SlAlgebra& g);
std::string to_string(const UEAElement& x);

/// Total degree of the word (sum of exponents).
int word_length(const UEAWord& w);

class EnvelopingAlgebra {
 public:
  explicit EnvelopingAlgebra(int l);

  /// Shared instance per rank, so that the multiplication cache is reused.
  static std::shared_ptr<const EnvelopingAlgebra> shared(int l);

  int rank() const { return g_->rank(); }
  const SlAlgebra& algebra() const { return *g_; }

  UEAElement zero() const { return UEAElement(rank()); }
  UEAElement one() const;
  UEAElement generator(int a) const;
  UEAElement from_lie(const LieElement& x) const;

  /// The product b_{a_1} b_{a_2} ... b_{a_n} rewritten in PBW form.
  UEAElement normalize(std::span<const int> generators) const;
  UEAElement multiply(const UEAElement& a, const UEAElement& b) const;
  /// [b_x, f] = b_x f - f b_x.
  UEAElement adjoint(int x, const UEAElement& f) const;
  /// (x_1 x_2 ... x_n)_L f = x_1 . (x_2 . ( ... (x_n . f))).
  UEAElement adjoint_chain(std::span<const int> xs, const UEAElement& f) const;

  Weight word_weight(const UEAWord& w) const;
  /// The common weight of all words, or nullopt for zero or inhomogeneous input.
  std::optional<Weight> weight(const UEAElement& f) const;

  /// For r of weight zero: the polynomial p_r with r v_mu = p_r(mu) v_mu.
  /// Throws std::invalid_argument for nonzero weight and AlgebraError if a
  /// word with a lowering factor but no raising factor survives.
  CartanPolynomial project_to_polynomial(const UEAElement& r) const;

 private:
  using Terms = UEAElement::Terms;
  const Terms& left_multiply(int x, const UEAWord& w) const;

  std::shared_ptr<const SlAlgebra> g_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<int, UEAWord>, Terms> cache_;
};

/// F([x_1(-n_1-1) ... x_m(-n_m-1) 1]) = (-1)^{n_1+...+n_m} x_m ... x_1, extended linearly.
UEAElement zhu_F(const ModuleVector& v);

/// sum_i (l-2i+1)/(l+1) h_i e_theta - sum_{i<l} e_{eps_{i+1}-eps_{l+1}} e_{eps_1-eps_{i+1}} + (l-1)/2 e_theta.
UEAElement v_prime(int l);
/// The same element with e_theta h_i in place of h_i e_theta.
UEAElement v_prime_unswapped(int l);

struct AdjointModule {
  std::vector<UEAElement> basis;  // breadth-first order, generator first
  std::map<Weight, int> multiplicities;
  std::vector<UEAElement> zero_weight_basis;
  Weight highest_weight;
  int dimension() const { return static_cast<int>(basis.size()); }
  int zero_weight_dimension() const { return static_cast<int>(zero_weight_basis.size()); }
};

/// Closure of {generator} under ad(e_i), ad(f_i). Throws AlgebraError if the
/// span grows beyond `bound`, or if the generator is not a weight vector.
AdjointModule generate_adjoint_module(const EnvelopingAlgebra& U, const UEAElement& generator, int bound);
/// R generated by F([v]) with bound dim g + l + 1.
AdjointModule generate_R(int l);

/// Basis indices of f_i, f_{i-1}, ..., f_1, f_{i+1}, ..., f_l.
std::vector<int> lowering_chain(int l, int i);

/// (-1)^i times the projection of (f_i ... f_1 f_{i+1} ... f_l)_L F([v]).
CartanPolynomial adjoint_chain_polynomial(int l, int i);
/// h_i ( sum_{j<i} -2j/(l+1) h_j + (l-2i+1)/(l+1) h_i + sum_{j>i} (2l-2j+2)/(l+1) h_j + (l+1)/2 - i ).
CartanPolynomial closed_form_polynomial(int l, int i);
/// p_1..p_l from the adjoint chain; throws AlgebraError if one differs from the closed form.
std::vector<CartanPolynomial> polynomials_P0(int l);

}  // namespace voa
