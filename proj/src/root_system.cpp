#include "voa/root_system.hpp"

#include <stdexcept>

namespace voa {

void require_even_rank(int l) {
  if (l < 2 || l % 2 != 0)
    throw std::invalid_argument("rank must be a positive even integer, got " + std::to_string(l));
}

namespace {

void check_root(int l, const RootIndex& a) {
  if (a.i < 1 || a.j < 1 || a.i > l + 1 || a.j > l + 1 || a.i == a.j)
    throw std::invalid_argument("invalid root " + to_string(a) + " for rank " + std::to_string(l));
}

}  // namespace

std::string to_string(const RootIndex& a) {
  return "eps" + std::to_string(a.i) + "-eps" + std::to_string(a.j);
}

Weight::Weight(int rank) : coords_(static_cast<std::size_t>(rank)) {
  if (rank < 1) throw std::invalid_argument("weight rank must be positive");
}

Weight::Weight(int rank, std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (rank < 1 || static_cast<int>(coords_.size()) != rank)
    throw std::invalid_argument("weight needs exactly rank coordinates");
}

bool Weight::is_zero() const {
  for (const auto& c : coords_)
    if (sgn(c) != 0) return false;
  return true;
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t p = 0; p < coords_.size(); ++p) coords_[p] += other.coords_[p];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t p = 0; p < coords_.size(); ++p) coords_[p] -= other.coords_[p];
  return *this;
}

Weight& Weight::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

bool operator<(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  for (int p = 1; p <= a.rank(); ++p) {
    if (a[p] < b[p]) return true;
    if (b[p] < a[p]) return false;
  }
  return false;
}

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (int p = 1; p <= w.rank(); ++p) {
    if (p > 1) out += ", ";
    out += to_string(w[p]);
  }
  return out + ")";
}

std::vector<RootIndex> simple_roots(int l) {
  require_even_rank(l);
  std::vector<RootIndex> out;
  for (int p = 1; p <= l; ++p) out.push_back({p, p + 1});
  return out;
}

RootIndex highest_root(int l) {
  require_even_rank(l);
  return {1, l + 1};
}

std::vector<RootIndex> positive_roots(int l) {
  std::vector<RootIndex> out;
  for (int i = 1; i <= l + 1; ++i)
    for (int j = i + 1; j <= l + 1; ++j) out.push_back({i, j});
  return out;
}

Rational pairing(const Weight& mu, const RootIndex& alpha) {
  check_root(mu.rank(), alpha);
  if (!alpha.positive()) return -pairing(mu, alpha.negated());
  Rational sum = 0;
  for (int t = alpha.i; t < alpha.j; ++t) sum += mu[t];
  return sum;
}

Weight weyl_vector(int l) { return Weight(l, std::vector<Rational>(static_cast<std::size_t>(l), 1)); }

Weight root_as_weight(int l, const RootIndex& alpha) {
  check_root(l, alpha);
  // <eps_i - eps_j, alpha_p^vee> with alpha_p^vee = eps_p - eps_{p+1}.
  Weight w(l);
  for (int p = 1; p <= l; ++p) {
    int v = 0;
    if (alpha.i == p) v += 1;
    if (alpha.i == p + 1) v -= 1;
    if (alpha.j == p) v -= 1;
    if (alpha.j == p + 1) v += 1;
    w[p] = v;
  }
  return w;
}

bool is_dominant_integral(const Weight& mu) {
  for (const auto& c : mu.coords())
    if (!is_integer(c) || sgn(c) < 0) return false;
  return true;
}

}  // namespace voa
