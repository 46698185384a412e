#include "voa/commands.hpp"

#include <set>

#include "voa/enveloping.hpp"
#include "voa/linalg.hpp"
#include "voa/verma.hpp"

namespace voa {

namespace {

Verdict verdict_of(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

nlohmann::json to_json(const AffineWeight& w) {
  return {{"level", voa::to_json(w.level)}, {"finite", voa::to_json(w.finite)}, {"delta", voa::to_json(w.delta)}};
}

nlohmann::json to_json(const RootPairing& p) {
  return {{"root", to_string(p.root)}, {"value", voa::to_json(p.value)}};
}

SparseEchelon<CartanPolynomial::Exponents>::Vector as_vector(const CartanPolynomial& p) {
  return {p.terms().begin(), p.terms().end()};
}

}  // namespace

Report cmd_verify_singular(int l) {
  require_even_rank(l);
  Report report{"verify-singular", l, std::nullopt, std::nullopt};
  const VacuumModule module(l);
  const ModuleVector v = singular_vector(l);
  const SingularityReport sing = is_singular(module, v);

  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : sing.checks)
    checks.push_back({{"operator", c.operator_name}, {"result", to_string(c.result)}, {"zero", c.result.is_zero()}});

  std::set<int> degrees;
  std::set<Weight> weights;
  std::set<std::string> affine;
  for (const auto& [m, c] : v.terms()) {
    degrees.insert(m.conformal_degree());
    weights.insert(m.weight(module.algebra()));
    affine.insert(to_string(module.affine_weight(m)));
  }
  const AffineWeight lambda(critical_level(l), Weight(l), 0);
  const AffineWeight expected = shifted_reflection(lambda, RealRoot{RootIndex{l + 1, 1}, 2});
  const bool homogeneous = degrees.size() == 1 && affine.size() == 1;

  report.payload = {
      {"level", voa::to_json(module.level())},
      {"singular_vector", to_string(v)},
      {"term_count", v.terms().size()},
      {"annihilations", checks},
      {"conformal_degree", degrees.size() == 1 ? nlohmann::json(*degrees.begin()) : nlohmann::json(nullptr)},
      {"h_weight", weights.size() == 1 ? voa::to_json(*weights.begin()) : nlohmann::json(nullptr)},
      {"affine_weight", homogeneous ? to_json(module.affine_weight(v.terms().begin()->first)) : nlohmann::json(nullptr)},
      {"expected_affine_weight", to_json(expected)},
      {"affine_weight_matches",
       homogeneous && module.affine_weight(v.terms().begin()->first) == expected},
  };
  report.outcome = verdict_of(sing.singular);
  return report;
}

Report cmd_zhu(int l) {
  require_even_rank(l);
  Report report{"zhu", l, std::nullopt, std::nullopt};
  const UEAElement computed = zhu_F(singular_vector(l));
  const UEAElement displayed = v_prime(l);
  const UEAElement unswapped = v_prime_unswapped(l);
  report.payload = {
      {"computed", to_string(computed)},
      {"displayed", to_string(displayed)},
      {"displayed_unswapped", to_string(unswapped)},
      {"equal", computed == displayed},
      {"unswapped_equal", computed == unswapped},
      {"difference", to_string(computed - displayed)},
      {"term_count", computed.terms().size()},
  };
  report.outcome = verdict_of(computed == displayed);
  return report;
}

Report cmd_polynomials(int l) {
  require_even_rank(l);
  Report report{"polynomials", l, std::nullopt, std::nullopt};
  bool ok = true;

  nlohmann::json rows = nlohmann::json::array();
  SparseEchelon<CartanPolynomial::Exponents> span;
  for (int i = 1; i <= l; ++i) {
    const CartanPolynomial computed = adjoint_chain_polynomial(l, i);
    const CartanPolynomial closed = closed_form_polynomial(l, i);
    ok = ok && computed == closed;
    span.insert(as_vector(computed));
    rows.push_back({{"i", i}, {"adjoint_chain", to_string(computed)}, {"closed_form", to_string(closed)},
                    {"equal", computed == closed}});
  }

  const AdjointModule R = generate_R(l);
  auto U = EnvelopingAlgebra::shared(l);
  SparseEchelon<CartanPolynomial::Exponents> projected;
  bool projections_in_span = true;
  for (const auto& r : R.zero_weight_basis) {
    const CartanPolynomial p = U->project_to_polynomial(r);
    projected.insert(as_vector(p));
    projections_in_span = projections_in_span && span.contains(as_vector(p));
  }
  const int dim_g = (l + 1) * (l + 1) - 1;
  const bool spans_equal = projections_in_span && projected.rank() == span.rank();
  ok = ok && span.rank() == l && R.dimension() == dim_g && R.zero_weight_dimension() == l && spans_equal &&
       R.highest_weight == root_as_weight(l, {1, l + 1});

  report.payload = {
      {"polynomials", rows},
      {"span_dimension", span.rank()},
      {"R",
       {{"dimension", R.dimension()},
        {"expected_dimension", dim_g},
        {"zero_weight_dimension", R.zero_weight_dimension()},
        {"highest_weight", voa::to_json(R.highest_weight)},
        {"zero_weight_projection_rank", projected.rank()},
        {"projection_span_equals_P0", spans_equal}}},
  };
  report.outcome = verdict_of(ok);
  return report;
}

Report cmd_classify(int l) {
  require_even_rank(l);
  Report report{"classify", l, std::nullopt, std::nullopt};
  const ClassificationReport c = verify_classification(l);
  nlohmann::json table = nlohmann::json::array();
  nlohmann::json dominant = nlohmann::json::array();
  for (std::size_t t = 0; t < c.entries.size(); ++t) {
    const auto& e = c.entries[t];
    const auto& sol = c.system.supports[t];
    nlohmann::json chain = nlohmann::json::array();
    for (const auto& x : sol.chain_constants) chain.push_back(voa::to_json(x));
    nlohmann::json final_eq = nlohmann::json::array();
    for (const auto& x : sol.final_equation) final_eq.push_back(voa::to_json(x));
    table.push_back({{"S", to_string(e.support)},
                     {"mu", voa::to_json(e.mu)},
                     {"dominant_integral", e.dominant_integral},
                     {"solver_match", e.matches_solver},
                     {"chain_constants", chain},
                     {"final_equation", final_eq}});
    if (e.dominant_integral) dominant.push_back(to_string(e.support));
  }
  report.payload = {
      {"count", c.system.weights.size()},
      {"expected_count", 1ul << l},
      {"sets_equal", c.sets_equal},
      {"unique_per_support", c.system.unique_per_support},
      {"dominant_integral_supports", dominant},
      {"failures", c.failures},
      {"table", table},
  };
  report.outcome = verdict_of(c.passed());
  return report;
}

Report cmd_admissible(int l, int max_m, const std::optional<std::string>& subset) {
  require_even_rank(l);
  if (max_m < 2) throw std::invalid_argument("--max-m must be at least 2");
  Report report{"admissible", l, max_m, subset};

  std::vector<SupportSet> supports;
  if (subset)
    supports.push_back(parse_support(l, *subset));
  else
    supports = all_supports(l);

  Verdict outcome = Verdict::pass;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& S : supports) {
    const AdmissibilityReport a = check_admissible(l, S, max_m);
    const WitnessReport w = witness_coroots(l, S);
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : a.violations) violations.push_back(to_json(v));
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& x : w.witnesses) witnesses.push_back(to_json(x));
    Verdict v = a.verdict();
    if (!a.slope_certified || !w.passed()) v = Verdict::fail;
    outcome = combine(outcome, v);
    rows.push_back({{"S", to_string(S)},
                    {"lambda_S", to_json(lambda_S(l, S))},
                    {"checked_roots", a.checked_roots},
                    {"violations", violations},
                    {"integer_paired_count", a.integer_paired.size()},
                    {"rank_of_span", a.rank_of_span},
                    {"largest_nonpositive_m", a.largest_nonpositive_m},
                    {"slope_certified", a.slope_certified},
                    {"witnesses", witnesses},
                    {"witness_rank", w.rank},
                    {"witness_failures", w.failures},
                    {"verdict", to_string(v)}});
  }

  const PiCheckReport pi = pi_check(l, max_m);
  nlohmann::json minimal = nlohmann::json::array();
  for (const auto& p : pi.rho_pairings) minimal.push_back(to_json(p));
  nlohmann::json expected = nlohmann::json::array();
  for (const auto& r : pi.expected) expected.push_back(to_string(r));
  outcome = combine(outcome, pi.verdict);

  report.payload = {
      {"subsets", rows},
      {"pi_check",
       {{"integer_paired_count", pi.integer_paired.size()},
        {"minimal", minimal},
        {"expected", expected},
        {"alpha0_pairing", voa::to_json(pi.alpha0_pairing)},
        {"alpha0_rho_pairing", voa::to_json(pi.alpha0_rho_pairing)},
        {"verdict", to_string(pi.verdict)},
        {"detail", pi.detail}}},
  };
  report.outcome = outcome;
  return report;
}

Report cmd_all(int l, int max_m) {
  require_even_rank(l);
  if (max_m < 2) throw std::invalid_argument("--max-m must be at least 2");
  Report report{"all", l, max_m, std::nullopt};
  Verdict outcome = Verdict::pass;
  for (const Report& sub : {cmd_verify_singular(l), cmd_zhu(l), cmd_polynomials(l), cmd_classify(l),
                            cmd_admissible(l, max_m, std::nullopt)}) {
    outcome = combine(outcome, sub.outcome);
    report.payload[sub.command] = {{"outcome", to_string(sub.outcome)}, {"payload", sub.payload}};
  }
  report.outcome = outcome;
  return report;
}

}  // namespace voa
