#pragma once

// Admissibility of -(l+1)/2 Lambda_0 + mu_S, checked over all positive real
// roots alpha + m delta with m up to a cutoff. Pairings grow in m with slope
// (l+1)/2, so a per-root bound on the last nonpositive pairing turns the
// finite check into a statement for every m.

#include <optional>
#include <string>
#include <vector>

#include "voa/affine_lie.hpp"
#include "voa/classification.hpp"

namespace voa {

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

/// -(l+1)/2 Lambda_0 + mu_S.
AffineWeight lambda_S(int l, const SupportSet& S);

struct RootPairing {
  RealRoot root;
  Rational value;
};

struct AdmissibilityReport {
  int l = 0;
  SupportSet S;
  int max_m = 0;
  int checked_roots = 0;
  /// Roots with <lambda_S + rho, root^vee> in -Z_+ (integers <= 0).
  std::vector<RootPairing> violations;
  /// Roots with <lambda_S, root^vee> in Z.
  std::vector<RealRoot> integer_paired;
  /// Rank of the integer-paired coroots in (alpha_1^vee..alpha_l^vee, c) coordinates.
  int rank_of_span = 0;
  /// Largest m at which some finite root has a nonpositive pairing; -1 if none.
  int largest_nonpositive_m = -1;
  /// True when largest_nonpositive_m <= max_m, so no violation exists past the cutoff.
  bool slope_certified = false;

  /// Pass iff no violations and the integer-paired coroots span rank l+1; valid at the cutoff only.
  Verdict verdict() const;
};

/// Requires max_m >= 2.
AdmissibilityReport check_admissible(int l, const SupportSet& S, int max_m);

/// True iff value is an integer <= 0.
bool in_negative_integers(const Rational& value);

struct PiCheckReport {
  int l = 0;
  int max_m = 0;
  std::vector<RealRoot> integer_paired;  // positive coroots with <lambda, .> in Z, m <= max_m
  std::vector<RealRoot> minimal;         // not a sum of several of them
  std::vector<RealRoot> expected;        // (2 delta - theta), alpha_1, ..., alpha_l
  std::vector<RootPairing> rho_pairings; // <lambda + rho, .> on the minimal set
  Rational alpha0_rho_pairing;           // <lambda + rho, alpha_0^vee>
  Rational alpha0_pairing;               // <lambda, alpha_0^vee>
  Verdict verdict = Verdict::fail;
  std::string detail;
};

PiCheckReport pi_check(int l, int max_m);

struct WitnessReport {
  std::vector<RootPairing> witnesses;  // pairing with lambda_S
  std::vector<std::string> failures;
  int rank = 0;
  bool passed() const { return failures.empty(); }
};

/// (delta - alpha_{i_j})^vee for j = 1..k, alpha_{i_j}^vee + ... + alpha_{i_{j+1}}^vee
/// for j < k, alpha_i^vee for i not in S; each must pair integrally with lambda_S.
WitnessReport witness_coroots(int l, const SupportSet& S);

}  // namespace voa
