#pragma once

// The affinization g (x) C[t, t^-1] + Cc with bracket
//   [x(m), y(n)] = [x, y](m + n) + m delta_{m+n,0} (x, y) c,
// affine weights, positive real roots and their coroot pairings.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "voa/finite_lie.hpp"

namespace voa {

/// x (x) t^n.
struct LoopTerm {
  LieElement x;
  int n;
};

/// Sum of loop terms plus a multiple of c, merged so that each degree appears once.
class AffineElement {
 public:
  explicit AffineElement(int rank);
  AffineElement(int rank, const std::vector<LoopTerm>& terms, Rational central = 0);

  static AffineElement loop(const LieElement& x, int n);
  static AffineElement central_element(int rank);

  int rank() const { return rank_; }
  /// Degree -> finite part; no zero entries.
  const std::map<int, LieElement>& terms() const { return terms_; }
  const Rational& central() const { return central_; }
  bool is_zero() const { return terms_.empty() && sgn(central_) == 0; }

  AffineElement& operator+=(const AffineElement& other);
  AffineElement& operator-=(const AffineElement& other);
  AffineElement& operator*=(const Rational& s);
  friend AffineElement operator+(AffineElement a, const AffineElement& b) { return a += b; }
  friend AffineElement operator-(AffineElement a, const AffineElement& b) { return a -= b; }
  friend AffineElement operator*(const Rational& s, AffineElement a) { return a *= s; }
  friend bool operator==(const AffineElement& a, const AffineElement& b) {
    return a.rank_ == b.rank_ && a.central_ == b.central_ && a.terms_ == b.terms_;
  }

 private:
  void add(int n, const LieElement& x);

  int rank_;
  std::map<int, LieElement> terms_;
  Rational central_ = 0;
};

std::string to_string(const AffineElement& a);

AffineElement affine_bracket(const AffineElement& a, const AffineElement& b);

/// level * Lambda_0 + finite + delta_coeff * delta.
struct AffineWeight {
  Rational level;
  Weight finite;
  Rational delta;

  AffineWeight(Rational level, Weight finite, Rational delta = 0);
  int rank() const { return finite.rank(); }

  AffineWeight& operator+=(const AffineWeight& other);
  AffineWeight& operator-=(const AffineWeight& other);
  AffineWeight& operator*=(const Rational& s);
  friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
  friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
  friend AffineWeight operator*(const Rational& s, AffineWeight a) { return a *= s; }
  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
};

std::string to_string(const AffineWeight& w);

/// Level h^vee = l + 1, finite part the Weyl vector.
AffineWeight affine_weyl_vector(int l);

/// alpha + m delta with alpha a finite root (either sign).
struct RealRoot {
  RootIndex alpha;
  int m = 0;

  bool positive() const { return m > 0 || (m == 0 && alpha.positive()); }
  /// The root as an element of h^*: level 0, finite part alpha, delta coefficient m.
  AffineWeight as_weight(int l) const;
  /// Coroot alpha^vee + m c in coordinates (alpha_1^vee, ..., alpha_l^vee, c).
  std::vector<int> coroot_coords(int l) const;

  auto operator<=>(const RealRoot&) const = default;
};

std::string to_string(const RealRoot& r);

/// alpha_0 = delta - theta.
RealRoot affine_simple_root_zero(int l);

/// <Lambda, r^vee> = <finite, alpha^vee> + m * level (type A is simply laced).
Rational affine_pairing(const AffineWeight& lambda, const RealRoot& r);

/// All positive real roots with m <= max_m, ordered by m, then positive finite
/// roots lexicographically, then negative ones.
std::vector<RealRoot> enumerate_positive_real_roots(int l, int max_m);

/// r.Lambda = Lambda - <Lambda + rho, r^vee> r.
AffineWeight shifted_reflection(const AffineWeight& lambda, const RealRoot& r);

}  // namespace voa
