#include "voa/admissibility.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "voa/linalg.hpp"
#include "voa/verma.hpp"

namespace voa {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "fail";
}

AffineWeight lambda_S(int l, const SupportSet& S) {
  require_even_rank(l);
  return {critical_level(l), mu_S(l, S), 0};
}

bool in_negative_integers(const Rational& value) { return is_integer(value) && sgn(value) <= 0; }

namespace {

std::vector<Rational> as_rational_row(const std::vector<int>& coords) {
  return {coords.begin(), coords.end()};
}

int coroot_rank(int l, const std::vector<RealRoot>& roots) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : roots) rows.push_back(as_rational_row(r.coroot_coords(l)));
  return exact_rank(rows);
}

std::vector<RootIndex> all_finite_roots(int l) {
  std::vector<RootIndex> out = positive_roots(l);
  for (const auto& a : positive_roots(l)) out.push_back(a.negated());
  return out;
}

}  // namespace

Verdict AdmissibilityReport::verdict() const {
  return violations.empty() && rank_of_span == l + 1 ? Verdict::pass : Verdict::fail;
}

AdmissibilityReport check_admissible(int l, const SupportSet& S, int max_m) {
  require_even_rank(l);
  if (max_m < 2) throw std::invalid_argument("admissibility check needs max_m >= 2");
  AdmissibilityReport report;
  report.l = l;
  report.S = S;
  report.max_m = max_m;

  const AffineWeight lambda = lambda_S(l, S);
  const AffineWeight shifted = lambda + affine_weyl_vector(l);
  for (const auto& r : enumerate_positive_real_roots(l, max_m)) {
    ++report.checked_roots;
    const Rational value = affine_pairing(shifted, r);
    if (in_negative_integers(value)) report.violations.push_back({r, value});
    if (is_integer(affine_pairing(lambda, r))) report.integer_paired.push_back(r);
  }
  report.rank_of_span = coroot_rank(l, report.integer_paired);

  // pairing(m) = base + m (l+1)/2 is increasing in m.
  const Rational slope = make_rational(l + 1, 2);
  for (const auto& a : all_finite_roots(l)) {
    const Rational base = pairing(shifted.finite, a);
    const int first_m = a.positive() ? 0 : 1;
    const mpz_class last = floor(-base / slope);
    if (last >= first_m) report.largest_nonpositive_m = std::max(report.largest_nonpositive_m, static_cast<int>(last.get_si()));
  }
  report.slope_certified = report.largest_nonpositive_m <= max_m;
  return report;
}

namespace {

/// Coordinates in the affine simple roots alpha_0..alpha_l: alpha + m delta = m alpha_0 + (alpha + m theta).
std::vector<int> affine_simple_coords(int l, const RealRoot& r) {
  std::vector<int> c = r.coroot_coords(l);
  std::vector<int> out(static_cast<std::size_t>(l + 1));
  out[0] = r.m;
  for (int p = 1; p <= l; ++p) out[static_cast<std::size_t>(p)] = c[static_cast<std::size_t>(p - 1)] + r.m;
  return out;
}

bool nonnegative_nonzero(const std::vector<int>& v) {
  bool nonzero = false;
  for (int x : v) {
    if (x < 0) return false;
    nonzero = nonzero || x != 0;
  }
  return nonzero;
}

std::vector<int> difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) out[t] = a[t] - b[t];
  return out;
}

}  // namespace

PiCheckReport pi_check(int l, int max_m) {
  require_even_rank(l);
  if (max_m < 0) throw std::invalid_argument("max_m must be nonnegative");
  PiCheckReport report;
  report.l = l;
  report.max_m = max_m;

  const AffineWeight lambda(critical_level(l), Weight(l), 0);
  const AffineWeight shifted = lambda + affine_weyl_vector(l);
  const RealRoot alpha0 = affine_simple_root_zero(l);
  report.alpha0_pairing = affine_pairing(lambda, alpha0);
  report.alpha0_rho_pairing = affine_pairing(shifted, alpha0);

  report.expected.push_back({{l + 1, 1}, 2});
  for (const auto& a : simple_roots(l)) report.expected.push_back({a, 0});

  for (const auto& r : enumerate_positive_real_roots(l, max_m))
    if (is_integer(affine_pairing(lambda, r))) report.integer_paired.push_back(r);

  // Summands of a positive element have smaller or equal affine coordinates, so
  // decompositions of anything with m <= max_m stay inside the window.
  std::vector<std::vector<int>> coords;
  std::set<std::vector<int>> members;
  for (const auto& r : report.integer_paired) {
    coords.push_back(affine_simple_coords(l, r));
    members.insert(coords.back());
  }

  std::vector<std::size_t> candidates;
  for (std::size_t b = 0; b < coords.size(); ++b) {
    bool two_sum = false;
    for (std::size_t g = 0; g < coords.size() && !two_sum; ++g) {
      auto rest = difference(coords[b], coords[g]);
      two_sum = nonnegative_nonzero(rest) && members.count(rest) > 0;
    }
    if (!two_sum) candidates.push_back(b);
  }

  // Exact multi-term check on the survivors, with a state budget.
  constexpr std::size_t budget = 2'000'000;
  std::map<std::vector<int>, bool> memo;
  bool exhausted = false;
  std::function<bool(const std::vector<int>&)> is_sum = [&](const std::vector<int>& x) -> bool {
    if (members.count(x)) return true;
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    if (memo.size() > budget) {
      exhausted = true;
      return false;
    }
    bool found = false;
    for (const auto& g : coords) {
      auto rest = difference(x, g);
      if (nonnegative_nonzero(rest) && is_sum(rest)) {
        found = true;
        break;
      }
    }
    memo[x] = found;
    return found;
  };

  for (std::size_t b : candidates) {
    bool decomposable = false;
    for (const auto& g : coords) {
      auto rest = difference(coords[b], g);
      if (nonnegative_nonzero(rest) && is_sum(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) report.minimal.push_back(report.integer_paired[b]);
  }
  for (const auto& r : report.minimal) report.rho_pairings.push_back({r, affine_pairing(shifted, r)});

  std::set<RealRoot> found(report.minimal.begin(), report.minimal.end());
  std::set<RealRoot> expected(report.expected.begin(), report.expected.end());
  if (exhausted) {
    report.verdict = Verdict::inconclusive;
    report.detail = "multi-term decomposition search exceeded its budget";
  } else if (coroot_rank(l, report.minimal) < l + 1) {
    report.verdict = Verdict::inconclusive;
    report.detail = "cutoff m <= " + std::to_string(max_m) + " too small: minimal set spans rank " +
                    std::to_string(coroot_rank(l, report.minimal));
  } else if (found == expected) {
    report.verdict = Verdict::pass;
    report.detail = "minimal set verified within m <= " + std::to_string(max_m);
  } else {
    report.verdict = Verdict::fail;
    report.detail = "minimal set differs from {(2delta-theta), alpha_1, ..., alpha_l}";
  }
  return report;
}

WitnessReport witness_coroots(int l, const SupportSet& S) {
  require_even_rank(l);
  const AffineWeight lambda = lambda_S(l, S);
  WitnessReport report;
  std::vector<RealRoot> roots;
  const auto& idx = S.elements;
  for (int i : idx) roots.push_back({{i + 1, i}, 1});
  for (std::size_t j = 0; j + 1 < idx.size(); ++j) roots.push_back({{idx[j], idx[j + 1] + 1}, 0});
  for (int i = 1; i <= l; ++i)
    if (!S.contains(i)) roots.push_back({{i, i + 1}, 0});
  for (const auto& r : roots) {
    const Rational value = affine_pairing(lambda, r);
    report.witnesses.push_back({r, value});
    if (!is_integer(value)) report.failures.push_back(to_string(r) + " pairs to " + to_string(value) + " with lambda_S");
  }
  report.rank = coroot_rank(l, roots);
  return report;
}

}  // namespace voa
