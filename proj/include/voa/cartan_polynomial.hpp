#pragma once

#include <map>
#include <string>
#include <vector>

#include "voa/root_system.hpp"

namespace voa {

/// Polynomial in the commuting variables h_1..h_l. Evaluating at a weight mu
/// substitutes h_p = <mu, alpha_p^vee>, i.e. the p-th fundamental coordinate.
class CartanPolynomial {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational>;

  explicit CartanPolynomial(int rank);
  static CartanPolynomial variable(int rank, int p);
  static CartanPolynomial constant(int rank, const Rational& c);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  Rational coefficient(const Exponents& e) const;

  void add(const Exponents& e, const Rational& c);
  CartanPolynomial& operator+=(const CartanPolynomial& other);
  CartanPolynomial& operator-=(const CartanPolynomial& other);
  CartanPolynomial& operator*=(const Rational& s);
  friend CartanPolynomial operator+(CartanPolynomial a, const CartanPolynomial& b) { return a += b; }
  friend CartanPolynomial operator-(CartanPolynomial a, const CartanPolynomial& b) { return a -= b; }
  friend CartanPolynomial operator*(const Rational& s, CartanPolynomial a) { return a *= s; }
  friend CartanPolynomial operator*(const CartanPolynomial& a, const CartanPolynomial& b);
  friend bool operator==(const CartanPolynomial& a, const CartanPolynomial& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  Rational evaluate(const Weight& mu) const;
  /// Sets h_p = 0 for every p with keep[p-1] == false.
  CartanPolynomial restrict_to(const std::vector<bool>& keep) const;
  /// Exact division by h_p; throws AlgebraError if some term is not divisible.
  CartanPolynomial divide_by_variable(int p) const;
  /// Substitutes h_p = offset_p + slope_p * t and returns the coefficients of t^0, t^1, ...
  std::vector<Rational> substitute_affine(const std::vector<Rational>& offsets,
                                          const std::vector<Rational>& slopes) const;

 private:
  int rank_;
  Terms terms_;
};

std::string to_string(const CartanPolynomial& p);

}  // namespace voa
