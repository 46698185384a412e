#pragma once

// Root system of type A_l. Roots are eps_i - eps_j, weights are kept in the
// fundamental-weight basis omega_1..omega_l.

#include <compare>
#include <string>
#include <vector>

#include "voa/rational.hpp"

namespace voa {

/// Throws std::invalid_argument unless l is a positive even integer.
void require_even_rank(int l);

/// The root eps_i - eps_j, 1 <= i, j <= l+1, i != j.
struct RootIndex {
  int i = 1;
  int j = 2;

  bool positive() const { return i < j; }
  RootIndex negated() const { return {j, i}; }
  /// Number of simple roots in the support, i.e. |j - i|.
  int height() const { return j > i ? j - i : i - j; }

  auto operator<=>(const RootIndex&) const = default;
};

std::string to_string(const RootIndex& a);

/// A weight of sl(l+1), coordinates in the basis omega_1..omega_l.
class Weight {
 public:
  explicit Weight(int rank);
  Weight(int rank, std::vector<Rational> coords);

  int rank() const { return static_cast<int>(coords_.size()); }
  /// 1-based coordinate accessors.
  const Rational& operator[](int p) const { return coords_.at(p - 1); }
  Rational& operator[](int p) { return coords_.at(p - 1); }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Rational& s);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Weight& a, const Weight& b);

 private:
  std::vector<Rational> coords_;
};

std::string to_string(const Weight& w);

/// (1,2), (2,3), ..., (l,l+1).
std::vector<RootIndex> simple_roots(int l);
/// (1, l+1).
RootIndex highest_root(int l);
/// All eps_i - eps_j with i < j, lexicographic in (i, j).
std::vector<RootIndex> positive_roots(int l);

/// <mu, alpha^vee>. For alpha = (i, j), i < j, this is coords[i] + ... + coords[j-1];
/// a negative root gives the negative.
Rational pairing(const Weight& mu, const RootIndex& alpha);

/// Sum of the fundamental weights.
Weight weyl_vector(int l);

/// Fundamental-weight coordinates of the root itself (rows of the Cartan matrix summed).
Weight root_as_weight(int l, const RootIndex& alpha);

bool is_dominant_integral(const Weight& mu);

}  // namespace voa
