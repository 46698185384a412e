#pragma once

// Highest weights mu with p(mu) = 0 for all p in the zero-weight polynomial
// set, found by enumerating the support of mu. Every p_i is divisible by h_i,
// so fixing which h_i vanish reduces the system to a chain of linear
// relations and one univariate equation of degree <= 2.

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "voa/cartan_polynomial.hpp"

namespace voa {

struct SupportSet {
  int l = 0;
  std::vector<int> elements;  // strictly increasing, in 1..l

  SupportSet() = default;
  /// Throws std::invalid_argument unless the elements are strictly increasing in 1..l.
  SupportSet(int l, std::vector<int> elements);

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(int i) const;
  std::vector<bool> mask() const;

  auto operator<=>(const SupportSet&) const = default;
};

std::string to_string(const SupportSet& s);
/// Parses "1,3" (or "" for the empty set).
SupportSet parse_support(int l, const std::string& text);
/// All 2^l subsets, sorted lexicographically (empty set first).
std::vector<SupportSet> all_supports(int l);

/// sum_j ( sum_{s>j} (-1)^{s-j} i_s + sum_{s<j} (-1)^{j-s+1} i_s + (-1)^{k-j+1} (l+1)/2 ) omega_{i_j}.
Weight mu_S(int l, const SupportSet& s);

struct SupportSolution {
  SupportSet support;
  /// c_a in h_{i_a} + h_{i_{a+1}} + c_a = 0, a = 1..k-1.
  std::vector<Rational> chain_constants;
  /// Coefficients (t^0, t^1, t^2) of the last equation in t = h_{i_k}.
  std::vector<Rational> final_equation;
  std::vector<Rational> roots;
  std::vector<Weight> solutions;
  std::vector<std::string> notes;
};

struct SystemSolution {
  std::vector<SupportSolution> supports;  // one per subset, sorted
  std::set<Weight> weights;
  /// Every support admits exactly one solution.
  bool unique_per_support = true;
};

/// Common zeros of P. Does not use mu_S: each support is solved from P alone,
/// and each candidate is checked to annihilate every polynomial of P.
/// P may be rescaled by a common nonzero factor without changing the result.
SystemSolution solve_system(int l, const std::vector<CartanPolynomial>& P);

struct ClassificationEntry {
  SupportSet support;
  Weight mu;
  bool matches_solver = false;
  bool dominant_integral = false;
};

struct ClassificationReport {
  int l = 0;
  std::vector<ClassificationEntry> entries;
  SystemSolution system;
  bool sets_equal = false;
  int dominant_count = 0;
  bool only_empty_dominant = false;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

ClassificationReport verify_classification(int l, const std::vector<CartanPolynomial>& P);
/// Uses the polynomials extracted by the adjoint chain.
ClassificationReport verify_classification(int l);

}  // namespace voa
