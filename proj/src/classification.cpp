#include "voa/classification.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "voa/enveloping.hpp"

namespace voa {

SupportSet::SupportSet(int l_, std::vector<int> elements_) : l(l_), elements(std::move(elements_)) {
  for (std::size_t t = 0; t < elements.size(); ++t) {
    if (elements[t] < 1 || elements[t] > l) throw std::invalid_argument("support element out of range");
    if (t > 0 && elements[t] <= elements[t - 1]) throw std::invalid_argument("support must be strictly increasing");
  }
}

bool SupportSet::contains(int i) const { return std::binary_search(elements.begin(), elements.end(), i); }

std::vector<bool> SupportSet::mask() const {
  std::vector<bool> m(static_cast<std::size_t>(l), false);
  for (int i : elements) m[static_cast<std::size_t>(i - 1)] = true;
  return m;
}

std::string to_string(const SupportSet& s) {
  std::string out = "{";
  for (std::size_t t = 0; t < s.elements.size(); ++t) {
    if (t > 0) out += ",";
    out += std::to_string(s.elements[t]);
  }
  return out + "}";
}

SupportSet parse_support(int l, const std::string& text) {
  std::vector<int> elements;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    std::size_t used = 0;
    int value = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad support element: " + item);
    elements.push_back(value);
  }
  std::sort(elements.begin(), elements.end());
  return SupportSet(l, std::move(elements));
}

std::vector<SupportSet> all_supports(int l) {
  if (l < 1 || l > 30) throw std::invalid_argument("support enumeration needs 1 <= l <= 30");
  std::vector<SupportSet> out;
  for (unsigned long mask = 0; mask < (1ul << l); ++mask) {
    std::vector<int> elements;
    for (int i = 1; i <= l; ++i)
      if (mask & (1ul << (i - 1))) elements.push_back(i);
    out.emplace_back(l, std::move(elements));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Weight mu_S(int l, const SupportSet& s) {
  require_even_rank(l);
  if (s.l != l) throw std::invalid_argument("support rank mismatch");
  const int k = s.size();
  const Rational half = make_rational(l + 1, 2);
  auto idx = [&](int t) { return Rational(s.elements[static_cast<std::size_t>(t - 1)]); };
  auto sign = [](int e) { return e % 2 == 0 ? 1 : -1; };
  Weight mu(l);
  for (int j = 1; j <= k; ++j) {
    Rational c = 0;
    for (int t = j + 1; t <= k; ++t) c += sign(t - j) * idx(t);
    for (int t = 1; t <= j - 1; ++t) c += sign(j - t + 1) * idx(t);
    c += sign(k - j + 1) * half;
    mu[s.elements[static_cast<std::size_t>(j - 1)]] = c;
  }
  return mu;
}

namespace {

/// Coefficients of an affine-linear polynomial: (constant, coefficient of h_p for p = 1..l).
std::pair<Rational, std::vector<Rational>> linear_coefficients(const CartanPolynomial& p) {
  if (p.degree() > 1) throw AlgebraError("expected an affine-linear polynomial, got " + to_string(p));
  const int l = p.rank();
  std::vector<Rational> coeffs(static_cast<std::size_t>(l));
  Rational constant = 0;
  for (const auto& [e, c] : p.terms()) {
    auto it = std::find(e.begin(), e.end(), 1);
    if (it == e.end())
      constant = c;
    else
      coeffs[static_cast<std::size_t>(it - e.begin())] = c;
  }
  return {constant, coeffs};
}

std::vector<Rational> rational_roots(const std::vector<Rational>& poly, std::vector<std::string>& notes) {
  switch (poly.size()) {
    case 0:
      notes.push_back("final equation vanishes identically");
      return {};
    case 1:
      return {};
    case 2:
      return {-poly[0] / poly[1]};
    case 3: {
      const Rational& a = poly[2];
      const Rational& b = poly[1];
      const Rational& c = poly[0];
      Rational disc = b * b - 4 * a * c;
      Rational root;
      if (!exact_sqrt(disc, root)) {
        notes.push_back("final equation has no rational roots (discriminant " + to_string(disc) + ")");
        return {};
      }
      Rational r1 = (-b - root) / (2 * a);
      Rational r2 = (-b + root) / (2 * a);
      if (r1 == r2) return {r1};
      return {std::min(r1, r2), std::max(r1, r2)};
    }
    default:
      notes.push_back("final equation has degree " + std::to_string(poly.size() - 1));
      return {};
  }
}

SupportSolution solve_support(int l, const std::vector<CartanPolynomial>& P, const SupportSet& S) {
  SupportSolution out;
  out.support = S;
  auto vanishes_everywhere = [&](const Weight& mu) {
    return std::all_of(P.begin(), P.end(), [&](const CartanPolynomial& p) { return sgn(p.evaluate(mu)) == 0; });
  };

  const int k = S.size();
  if (k == 0) {
    Weight zero(l);
    if (vanishes_everywhere(zero))
      out.solutions.push_back(zero);
    else
      out.notes.push_back("zero weight does not annihilate the system");
    return out;
  }

  const auto mask = S.mask();
  auto at = [&](int a) { return S.elements[static_cast<std::size_t>(a - 1)]; };
  // h_i L_i = p_i restricted to the support.
  std::vector<CartanPolynomial> factors;
  for (int a = 1; a <= k; ++a)
    factors.push_back(P[static_cast<std::size_t>(at(a) - 1)].restrict_to(mask).divide_by_variable(at(a)));

  // The combination x L_{i_a} + y L_{i_{a+1}} of the form h_{i_a} + h_{i_{a+1}} + c.
  // Choosing (x, y) from the equations themselves keeps the relation
  // independent of how each p_i is scaled.
  for (int a = 1; a < k; ++a) {
    auto [u0, u] = linear_coefficients(factors[static_cast<std::size_t>(a - 1)]);
    auto [w0, w] = linear_coefficients(factors[static_cast<std::size_t>(a)]);
    const auto lo = static_cast<std::size_t>(at(a) - 1), hi = static_cast<std::size_t>(at(a + 1) - 1);
    // conditions: every other coefficient vanishes and the two leading ones agree
    std::vector<std::pair<Rational, Rational>> conditions{{u[lo] - u[hi], w[lo] - w[hi]}};
    for (std::size_t p = 0; p < static_cast<std::size_t>(l); ++p)
      if (p != lo && p != hi) conditions.emplace_back(u[p], w[p]);
    std::optional<std::pair<Rational, Rational>> ratio;
    bool consistent = true;
    for (const auto& [cu, cw] : conditions) {
      if (sgn(cu) == 0 && sgn(cw) == 0) continue;
      std::pair<Rational, Rational> r{cw, -cu};  // annihilates this condition
      if (!ratio)
        ratio = r;
      else if (ratio->first * r.second != ratio->second * r.first)
        consistent = false;
    }
    Rational lead, constant;
    if (ratio && consistent) {
      lead = ratio->first * u[lo] + ratio->second * w[lo];
      constant = ratio->first * u0 + ratio->second * w0;
    }
    if (!ratio || !consistent || sgn(lead) == 0) {
      out.notes.push_back("pair relation for (" + std::to_string(at(a)) + "," + std::to_string(at(a + 1)) +
                          ") is not of the form h_i + h_j + c");
      return out;
    }
    out.chain_constants.push_back(constant / lead);
  }

  // Back-substitute along the chain: h_{i_a} = offset + slope * t, t = h_{i_k}.
  std::vector<Rational> offsets(static_cast<std::size_t>(l)), slopes(static_cast<std::size_t>(l));
  slopes[static_cast<std::size_t>(at(k) - 1)] = 1;
  for (int a = k - 1; a >= 1; --a) {
    const auto next = static_cast<std::size_t>(at(a + 1) - 1);
    const auto self = static_cast<std::size_t>(at(a) - 1);
    offsets[self] = -offsets[next] - out.chain_constants[static_cast<std::size_t>(a - 1)];
    slopes[self] = -slopes[next];
  }
  out.final_equation = P[static_cast<std::size_t>(at(k) - 1)].restrict_to(mask).substitute_affine(offsets, slopes);
  out.roots = rational_roots(out.final_equation, out.notes);

  for (const auto& t : out.roots) {
    Weight mu(l);
    bool nonzero = true;
    for (int a = 1; a <= k; ++a) {
      const auto self = static_cast<std::size_t>(at(a) - 1);
      mu[at(a)] = offsets[self] + slopes[self] * t;
      nonzero = nonzero && sgn(mu[at(a)]) != 0;
    }
    if (!nonzero) continue;
    if (vanishes_everywhere(mu))
      out.solutions.push_back(mu);
    else
      out.notes.push_back("candidate " + to_string(mu) + " does not annihilate the system");
  }
  return out;
}

}  // namespace

SystemSolution solve_system(int l, const std::vector<CartanPolynomial>& P) {
  require_even_rank(l);
  if (static_cast<int>(P.size()) != l) throw std::invalid_argument("need exactly l polynomials");
  for (const auto& p : P)
    if (p.rank() != l) throw std::invalid_argument("polynomial rank mismatch");
  SystemSolution out;
  for (const auto& S : all_supports(l)) {
    SupportSolution s = solve_support(l, P, S);
    if (s.solutions.size() != 1) out.unique_per_support = false;
    out.weights.insert(s.solutions.begin(), s.solutions.end());
    out.supports.push_back(std::move(s));
  }
  return out;
}

ClassificationReport verify_classification(int l, const std::vector<CartanPolynomial>& P) {
  ClassificationReport report;
  report.l = l;
  report.system = solve_system(l, P);
  std::set<Weight> closed_form;
  for (const auto& sol : report.system.supports) {
    const SupportSet& S = sol.support;
    ClassificationEntry entry{S, mu_S(l, S)};
    entry.matches_solver = sol.solutions.size() == 1 && sol.solutions.front() == entry.mu;
    entry.dominant_integral = is_dominant_integral(entry.mu);
    if (!entry.matches_solver) {
      std::string found;
      for (const auto& w : sol.solutions) found += (found.empty() ? "" : ", ") + to_string(w);
      report.failures.push_back("S=" + to_string(S) + ": closed form " + to_string(entry.mu) + ", solver found [" +
                                found + "]");
    }
    if (entry.dominant_integral) {
      ++report.dominant_count;
      if (S.size() != 0) report.failures.push_back("S=" + to_string(S) + ": nonempty support gives a dominant integral weight");
    }
    closed_form.insert(entry.mu);
    report.entries.push_back(std::move(entry));
  }
  report.sets_equal = closed_form == report.system.weights;
  if (!report.sets_equal) report.failures.push_back("solver weight set differs from the closed-form set");
  if (report.system.weights.size() != (std::size_t{1} << l))
    report.failures.push_back("expected " + std::to_string(1ul << l) + " weights, solver found " +
                              std::to_string(report.system.weights.size()));
  report.only_empty_dominant = report.dominant_count == 1 && report.entries.front().support.size() == 0 &&
                               report.entries.front().dominant_integral;
  if (!report.only_empty_dominant) report.failures.push_back("dominant integral weights are not exactly {mu_empty}");
  return report;
}

ClassificationReport verify_classification(int l) { return verify_classification(l, polynomials_P0(l)); }

}  // namespace voa
