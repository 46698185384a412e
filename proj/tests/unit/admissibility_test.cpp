#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "voa/admissibility.hpp"
#include "voa/linalg.hpp"

using namespace voa;

namespace {

bool contains(const std::vector<RealRoot>& v, const RealRoot& r) { return std::find(v.begin(), v.end(), r) != v.end(); }

}  // namespace

TEST_CASE("lambda_S") {
  AffineWeight l0 = lambda_S(2, SupportSet(2, {}));
  CHECK(l0.level == make_rational(-3, 2));
  CHECK(l0.finite.is_zero());
  CHECK(l0.delta == 0);
  AffineWeight l1 = lambda_S(2, SupportSet(2, {1}));
  CHECK(l1.finite == Weight(2, {make_rational(-3, 2), Rational(0)}));
  CHECK((l1 + affine_weyl_vector(2)).level == make_rational(3, 2));
}

TEST_CASE("violation predicate") {
  CHECK(in_negative_integers(Rational(0)));
  CHECK(in_negative_integers(Rational(-4)));
  CHECK_FALSE(in_negative_integers(Rational(1)));
  CHECK_FALSE(in_negative_integers(make_rational(-1, 2)));
  CHECK_FALSE(in_negative_integers(make_rational(-7, 3)));
}

TEST_CASE("empty support for l = 2") {
  AdmissibilityReport r = check_admissible(2, SupportSet(2, {}), 10);
  CHECK(r.violations.empty());
  CHECK(r.rank_of_span == 3);
  CHECK(r.verdict() == Verdict::pass);
  CHECK(r.slope_certified);
  AffineWeight shifted = lambda_S(2, SupportSet(2, {})) + affine_weyl_vector(2);
  CHECK(affine_pairing(shifted, affine_simple_root_zero(2)) == make_rational(-1, 2));
  CHECK(contains(r.integer_paired, RealRoot{RootIndex{3, 1}, 2}));
  CHECK(contains(r.integer_paired, RealRoot{RootIndex{1, 2}, 0}));
  CHECK_FALSE(contains(r.integer_paired, affine_simple_root_zero(2)));
  CHECK(exact_rank({{1, 0, 0}, {0, 1, 0}, {-1, -1, 2}}) == 3);
}

TEST_CASE("every support passes at l = 2 and l = 4") {
  for (int l : {2, 4})
    for (const SupportSet& S : all_supports(l)) {
      CAPTURE(to_string(S));
      AdmissibilityReport r = check_admissible(l, S, 20);
      CHECK(r.violations.empty());
      CHECK(r.rank_of_span == l + 1);
      CHECK(r.slope_certified);
      CHECK(r.verdict() == Verdict::pass);
      CHECK(r.checked_roots == static_cast<int>(enumerate_positive_real_roots(l, 20).size()));
    }
}

TEST_CASE("violations are exactly the nonpositive integer pairings") {
  for (const SupportSet& S : all_supports(4)) {
    AdmissibilityReport r = check_admissible(4, S, 6);
    AffineWeight shifted = lambda_S(4, S) + affine_weyl_vector(4);
    for (const RealRoot& root : enumerate_positive_real_roots(4, 6)) {
      Rational v = affine_pairing(shifted, root);
      bool listed = std::any_of(r.violations.begin(), r.violations.end(), [&](const RootPairing& p) { return p.root == root; });
      CHECK(listed == (is_integer(v) && v <= 0));
    }
  }
}

TEST_CASE("rank grows with the cutoff and stops at l + 1") {
  for (const SupportSet& S : all_supports(4)) {
    int previous = 0;
    for (int m = 2; m <= 8; ++m) {
      int rank = check_admissible(4, S, m).rank_of_span;
      CHECK(rank >= previous);
      CHECK(rank <= 5);
      previous = rank;
    }
  }
  CHECK_THROWS_AS(check_admissible(2, SupportSet(2, {}), 1), std::invalid_argument);
}

TEST_CASE("slope certificate") {
  for (const SupportSet& S : all_supports(4)) {
    AdmissibilityReport r = check_admissible(4, S, 10);
    AffineWeight shifted = lambda_S(4, S) + affine_weyl_vector(4);
    // pairing grows by (l+1)/2 per unit of m
    for (const RootIndex& a : positive_roots(4)) {
      RealRoot lo{a.negated(), 3}, hi{a.negated(), 4};
      CHECK(affine_pairing(shifted, hi) - affine_pairing(shifted, lo) == make_rational(5, 2));
    }
    CHECK(r.largest_nonpositive_m <= r.max_m);
    for (const RealRoot& root : enumerate_positive_real_roots(4, 10))
      if (root.m > r.largest_nonpositive_m) CHECK(affine_pairing(shifted, root) > 0);
  }
}

TEST_CASE("simple coroots of the vacuum weight") {
  for (int l : {2, 4}) {
    PiCheckReport r = pi_check(l, 10);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.minimal.size() == static_cast<std::size_t>(l + 1));
    for (const RealRoot& e : r.expected) CHECK(contains(r.minimal, e));
    for (const RootPairing& p : r.rho_pairings) CHECK(p.value == 1);
    CHECK(r.alpha0_rho_pairing == -make_rational(l - 1, 2));
    CHECK(r.alpha0_pairing == -make_rational(l + 1, 2));
  }
}

TEST_CASE("a tiny cutoff cannot certify minimality") {
  PiCheckReport r = pi_check(2, 1);
  CHECK(r.verdict == Verdict::inconclusive);
}

TEST_CASE("witness coroots") {
  WitnessReport empty = witness_coroots(2, SupportSet(2, {}));
  CHECK(empty.passed());
  REQUIRE(empty.witnesses.size() == 2);
  CHECK(empty.witnesses[0].root == RealRoot{RootIndex{1, 2}, 0});
  CHECK(empty.witnesses[1].root == RealRoot{RootIndex{2, 3}, 0});

  // (delta - alpha_1)^vee: level -3/2 plus <mu_S, -alpha_1^vee> = 3/2
  WitnessReport one = witness_coroots(2, SupportSet(2, {1}));
  CHECK(one.passed());
  CHECK(one.witnesses[0].root == RealRoot{RootIndex{2, 1}, 1});
  CHECK(one.witnesses[0].value == 0);
  CHECK(affine_pairing(lambda_S(2, SupportSet(2, {1})), RealRoot{RootIndex{1, 2}, 1}) == -3);

  WitnessReport both = witness_coroots(2, SupportSet(2, {1, 2}));
  CHECK(both.passed());
  bool found = false;
  for (const RootPairing& w : both.witnesses)
    if (w.root == RealRoot{RootIndex{1, 3}, 0}) {
      found = true;
      CHECK(w.value == -1);
    }
  CHECK(found);

  for (int l : {2, 4, 6})
    for (const SupportSet& S : all_supports(l)) CHECK(witness_coroots(l, S).passed());
}
