#pragma once

// sl(l+1) as traceless (l+1)x(l+1) rational matrices, with the Chevalley
// generators, the nested-bracket root vectors and the trace form.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "voa/rational.hpp"
#include "voa/root_system.hpp"

namespace voa {

/// A traceless matrix, stored sparsely with 1-based (row, column) keys.
class LieElement {
 public:
  using Entries = std::map<std::pair<int, int>, Rational>;

  explicit LieElement(int rank);
  /// Throws std::invalid_argument if the trace is nonzero or an index is out of range.
  LieElement(int rank, const Entries& entries);

  /// The matrix unit E_{ij}, i != j.
  static LieElement unit(int rank, int i, int j);

  int rank() const { return rank_; }
  int size() const { return rank_ + 1; }
  const Entries& entries() const { return entries_; }
  Rational entry(int row, int col) const;
  bool is_zero() const { return entries_.empty(); }

  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  LieElement& operator*=(const Rational& s);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& s, LieElement a) { return a *= s; }
  friend LieElement operator-(LieElement a) { return a *= Rational(-1); }
  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.rank_ == b.rank_ && a.entries_ == b.entries_;
  }

 private:
  friend Rational invariant_form(const LieElement& x, const LieElement& y);
  friend LieElement bracket(const LieElement& x, const LieElement& y);
  static Entries product(const LieElement& x, const LieElement& y);
  void add_entry(int row, int col, const Rational& value);

  int rank_;
  Entries entries_;
};

std::string to_string(const LieElement& x);

/// xy - yx. Throws std::invalid_argument on rank mismatch.
LieElement bracket(const LieElement& x, const LieElement& y);

/// tr(xy); for sl(l+1) this is the invariant form with (theta, theta) = 2.
Rational invariant_form(const LieElement& x, const LieElement& y);

LieElement chevalley_e(int l, int p);
LieElement chevalley_f(int l, int p);
LieElement chevalley_h(int l, int p);

/// A root vector together with its sign relative to the matrix unit it occupies.
struct RootVector {
  LieElement element;
  int sign;  // element == sign * E_{ij} (raising) or sign * E_{ji} (lowering)
};

/// e_{eps_i - eps_j} = [e_{j-1}, [e_{j-2}, [ ... [e_{i+1}, e_i] ... ]]], i < j.
RootVector root_vector_e(int l, int i, int j);
/// f_{eps_i - eps_j} = [f_i, [f_{i+1}, [ ... [f_{j-2}, f_{j-1}] ... ]]], i < j.
RootVector root_vector_f(int l, int i, int j);

/// h_alpha = [e_alpha, f_alpha] for a positive root.
LieElement coroot(int l, const RootIndex& alpha);

/// The ad(h)-weight of x, or nullopt if x is zero or not a weight vector.
std::optional<Weight> weight_of(const LieElement& x);

enum class BasisKind { lowering, cartan, raising };

struct BasisElement {
  BasisKind kind;
  RootIndex root;     // positive root of e/f; (p, p+1) for h_p
  int cartan = 0;     // p for h_p, 0 otherwise
  LieElement matrix;
  int sign = 1;       // matrix = sign * (matrix unit) for e/f
  Weight weight;
  std::string name;   // "f[i,j]", "h[p]", "e[i,j]"
};

/// Structure data of sl(l+1) in the ordered basis
///   f_(i,j) lexicographic, then h_1..h_l, then e_(i,j) lexicographic,
/// so that comparing basis indices is the PBW order f < h < e.
/// Root vectors are the nested-bracket ones above.
class SlAlgebra {
 public:
  using Sparse = std::vector<std::pair<int, Rational>>;

  explicit SlAlgebra(int l);

  /// Shared instance per rank; construction is done once and is thread-safe.
  static std::shared_ptr<const SlAlgebra> shared(int l);

  int rank() const { return rank_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const BasisElement& basis(int a) const { return basis_.at(static_cast<std::size_t>(a)); }

  int e_index(int i, int j) const;
  int f_index(int i, int j) const;
  int h_index(int p) const;
  int e_index(const RootIndex& a) const { return e_index(a.i, a.j); }
  int f_index(const RootIndex& a) const { return f_index(a.i, a.j); }

  bool is_lowering(int a) const { return basis(a).kind == BasisKind::lowering; }
  bool is_cartan(int a) const { return basis(a).kind == BasisKind::cartan; }
  bool is_raising(int a) const { return basis(a).kind == BasisKind::raising; }

  /// [b_a, b_b] expanded in the basis.
  const Sparse& bracket(int a, int b) const { return brackets_[flat(a, b)]; }
  /// (b_a, b_b).
  const Rational& form(int a, int b) const { return forms_[flat(a, b)]; }

  Sparse decompose(const LieElement& x) const;
  LieElement compose(const Sparse& coords) const;

 private:
  std::size_t flat(int a, int b) const {
    return static_cast<std::size_t>(a) * basis_.size() + static_cast<std::size_t>(b);
  }

  int rank_;
  std::vector<BasisElement> basis_;
  std::map<std::pair<int, int>, int> e_lookup_;
  std::map<std::pair<int, int>, int> f_lookup_;
  std::vector<Sparse> brackets_;
  std::vector<Rational> forms_;
};

}  // namespace voa
