#pragma once

// The vacuum module N(k, 0): PBW monomials x_1(n_1) ... x_m(n_m) 1 with all
// n_i <= -1, acted on by the affine algebra.
//
// Canonical order of modes: x(n) precedes y(m) iff n > m, or n == m and x
// comes before y in the SlAlgebra basis order (f < h < e). A monomial is
// canonical when its modes are non-decreasing in that order, so degree -1
// factors stand leftmost.

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "voa/affine_lie.hpp"

namespace voa {

/// Basis element b_generator tensored with t^degree.
struct Mode {
  int generator = 0;
  int degree = -1;
  auto operator<=>(const Mode&) const = default;
};

/// True iff a stands to the left of b in a canonical monomial.
bool mode_precedes(const Mode& a, const Mode& b);

class PBWMonomial {
 public:
  PBWMonomial() = default;
  /// Throws std::invalid_argument unless every degree is <= -1 and the order is canonical.
  explicit PBWMonomial(std::vector<Mode> factors);

  const std::vector<Mode>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  int conformal_degree() const;
  Weight weight(const SlAlgebra& g) const;

  auto operator<=>(const PBWMonomial&) const = default;

 private:
  std::vector<Mode> factors_;
};

class ModuleVector {
 public:
  using Terms = std::map<PBWMonomial, Rational>;

  ModuleVector(int rank, Rational level);
  ModuleVector(int rank, Rational level, Terms terms);

  int rank() const { return rank_; }
  const Rational& level() const { return level_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const PBWMonomial& m) const;

  void add(const PBWMonomial& m, const Rational& c);
  ModuleVector& operator+=(const ModuleVector& other);
  ModuleVector& operator-=(const ModuleVector& other);
  ModuleVector& operator*=(const Rational& s);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const Rational& s, ModuleVector a) { return a *= s; }
  friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
    return a.rank_ == b.rank_ && a.level_ == b.level_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const ModuleVector& other) const;

  int rank_;
  Rational level_;
  Terms terms_;
};

std::string to_string(const PBWMonomial& m, const SlAlgebra& g);
std::string to_string(const ModuleVector& v);

/// The critical level -(l+1)/2.
Rational critical_level(int l);

/// N(k, 0) over sl(l+1). The trivial g-module V(0) sits at the bottom, so all
/// modes of degree >= 0 kill the vacuum.
class VacuumModule {
 public:
  /// Level -(l+1)/2.
  explicit VacuumModule(int l);
  VacuumModule(int l, Rational level);

  int rank() const { return g_->rank(); }
  const Rational& level() const { return level_; }
  const SlAlgebra& algebra() const { return *g_; }

  ModuleVector zero() const { return ModuleVector(rank(), level_); }
  ModuleVector vacuum() const;
  /// The product x_1(n_1) ... x_m(n_m) 1 in any order, rewritten canonically.
  ModuleVector state(const std::vector<Mode>& modes) const;

  ModuleVector act(const Mode& x, const ModuleVector& v) const;
  ModuleVector act(const AffineElement& a, const ModuleVector& v) const;

  /// Level k, finite part the h-weight, delta coefficient minus the conformal degree.
  AffineWeight affine_weight(const PBWMonomial& m) const;

 private:
  using Terms = ModuleVector::Terms;
  const Terms& apply(const Mode& x, std::span<const Mode> monomial) const;
  void check(const ModuleVector& v) const;

  std::shared_ptr<const SlAlgebra> g_;
  Rational level_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<Mode, PBWMonomial>, Terms> cache_;
};

/// sum_i (l-2i+1)/(l+1) h_i(-1) e_theta(-1) 1 - sum_{i<l} e_{eps_1-eps_{i+1}}(-1) e_{eps_{i+1}-eps_{l+1}}(-1) 1
///   - (l-1)/2 e_theta(-2) 1, at level -(l+1)/2.
ModuleVector singular_vector(int l);

struct Annihilation {
  std::string operator_name;
  ModuleVector result;
};

struct SingularityReport {
  std::vector<Annihilation> checks;  // e_1(0), ..., e_l(0), f_theta(1)
  bool singular = false;
};

SingularityReport is_singular(const VacuumModule& module, const ModuleVector& v);

}  // namespace voa
