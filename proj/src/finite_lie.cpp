#include "voa/finite_lie.hpp"

#include <mutex>
#include <stdexcept>

namespace voa {

namespace {

void check_rank(int a, int b) {
  if (a != b) throw std::invalid_argument("Lie element rank mismatch");
}

}  // namespace

LieElement::LieElement(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("Lie algebra rank must be positive");
}

LieElement::LieElement(int rank, const Entries& entries) : LieElement(rank) {
  Rational trace = 0;
  for (const auto& [pos, value] : entries) {
    auto [row, col] = pos;
    if (row < 1 || col < 1 || row > size() || col > size())
      throw std::invalid_argument("matrix index out of range");
    if (row == col) trace += value;
    add_entry(row, col, value);
  }
  if (sgn(trace) != 0) throw std::invalid_argument("sl(l+1) elements must be traceless");
}

LieElement LieElement::unit(int rank, int i, int j) {
  if (i == j) throw std::invalid_argument("diagonal matrix unit is not traceless");
  return LieElement(rank, {{{i, j}, Rational(1)}});
}

Rational LieElement::entry(int row, int col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Rational(0) : it->second;
}

void LieElement::add_entry(int row, int col, const Rational& value) {
  if (sgn(value) == 0) return;
  auto [it, inserted] = entries_.try_emplace({row, col}, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) entries_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& other) {
  check_rank(rank_, other.rank_);
  for (const auto& [pos, value] : other.entries_) add_entry(pos.first, pos.second, value);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
  check_rank(rank_, other.rank_);
  for (const auto& [pos, value] : other.entries_) add_entry(pos.first, pos.second, -value);
  return *this;
}

LieElement& LieElement::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [pos, value] : entries_) value *= s;
  return *this;
}

LieElement::Entries LieElement::product(const LieElement& x, const LieElement& y) {
  // Row-indexed view of y keeps this O(nnz(x) * row length).
  std::map<int, std::vector<std::pair<int, const Rational*>>> y_rows;
  for (const auto& [pos, value] : y.entries_) y_rows[pos.first].push_back({pos.second, &value});
  Entries out;
  for (const auto& [pos, value] : x.entries_) {
    auto row = y_rows.find(pos.second);
    if (row == y_rows.end()) continue;
    for (const auto& [col, yv] : row->second) {
      Rational& slot = out[{pos.first, col}];
      slot += value * *yv;
    }
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  check_rank(x.rank_, y.rank_);
  LieElement out(x.rank_);
  for (const auto& [pos, value] : LieElement::product(x, y)) out.add_entry(pos.first, pos.second, value);
  for (const auto& [pos, value] : LieElement::product(y, x)) out.add_entry(pos.first, pos.second, -value);
  return out;
}

Rational invariant_form(const LieElement& x, const LieElement& y) {
  check_rank(x.rank_, y.rank_);
  Rational trace = 0;
  for (const auto& [pos, value] : x.entries_) trace += value * y.entry(pos.second, pos.first);
  return trace;
}

std::string to_string(const LieElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [pos, value] : x.entries()) {
    if (!out.empty()) out += " + ";
    out += to_string(value) + "*E[" + std::to_string(pos.first) + "," + std::to_string(pos.second) + "]";
  }
  return out;
}

LieElement chevalley_e(int l, int p) { return LieElement::unit(l, p, p + 1); }
LieElement chevalley_f(int l, int p) { return LieElement::unit(l, p + 1, p); }
LieElement chevalley_h(int l, int p) {
  return LieElement(l, {{{p, p}, Rational(1)}, {{p + 1, p + 1}, Rational(-1)}});
}

namespace {

void check_positive(int l, int i, int j) {
  if (i < 1 || j > l + 1 || i >= j)
    throw std::invalid_argument("root vector needs 1 <= i < j <= l+1");
}

RootVector as_root_vector(LieElement x, int row, int col) {
  // The nested brackets always land on one matrix unit; anything else is a defect.
  if (x.entries().size() != 1 || x.entries().begin()->first != std::pair{row, col})
    throw AlgebraError("nested bracket did not produce a single matrix unit");
  const Rational& v = x.entries().begin()->second;
  if (v != 1 && v != -1) throw AlgebraError("nested bracket produced a non-unit coefficient");
  int sign = v > 0 ? 1 : -1;
  return {std::move(x), sign};
}

}  // namespace

RootVector root_vector_e(int l, int i, int j) {
  check_positive(l, i, j);
  LieElement cur = chevalley_e(l, i);
  for (int m = i + 1; m <= j - 1; ++m) cur = bracket(chevalley_e(l, m), cur);
  return as_root_vector(std::move(cur), i, j);
}

RootVector root_vector_f(int l, int i, int j) {
  check_positive(l, i, j);
  LieElement cur = chevalley_f(l, j - 1);
  for (int m = j - 2; m >= i; --m) cur = bracket(chevalley_f(l, m), cur);
  return as_root_vector(std::move(cur), j, i);
}

LieElement coroot(int l, const RootIndex& alpha) {
  if (!alpha.positive()) throw std::invalid_argument("coroot needs a positive root");
  return bracket(root_vector_e(l, alpha.i, alpha.j).element, root_vector_f(l, alpha.i, alpha.j).element);
}

std::optional<Weight> weight_of(const LieElement& x) {
  if (x.is_zero()) return std::nullopt;
  const int l = x.rank();
  Weight w(l);
  const auto& [pos, value] = *x.entries().begin();
  for (int p = 1; p <= l; ++p) {
    LieElement y = bracket(chevalley_h(l, p), x);
    Rational eigen = y.entry(pos.first, pos.second) / value;
    if (!(y == eigen * x)) return std::nullopt;
    w[p] = eigen;
  }
  return w;
}

SlAlgebra::SlAlgebra(int l) : rank_(l) {
  if (l < 1) throw std::invalid_argument("Lie algebra rank must be positive");
  const auto roots = positive_roots(l);
  for (const auto& a : roots) {
    RootVector f = root_vector_f(l, a.i, a.j);
    f_lookup_[{a.i, a.j}] = dim();
    basis_.push_back({BasisKind::lowering, a, 0, f.element, f.sign, root_as_weight(l, a.negated()),
                      "f[" + std::to_string(a.i) + "," + std::to_string(a.j) + "]"});
  }
  for (int p = 1; p <= l; ++p)
    basis_.push_back({BasisKind::cartan, {p, p + 1}, p, chevalley_h(l, p), 1, Weight(l),
                      "h[" + std::to_string(p) + "]"});
  for (const auto& a : roots) {
    RootVector e = root_vector_e(l, a.i, a.j);
    e_lookup_[{a.i, a.j}] = dim();
    basis_.push_back({BasisKind::raising, a, 0, e.element, e.sign, root_as_weight(l, a),
                      "e[" + std::to_string(a.i) + "," + std::to_string(a.j) + "]"});
  }

  const auto n = basis_.size();
  brackets_.resize(n * n);
  forms_.resize(n * n);
  for (int a = 0; a < dim(); ++a)
    for (int b = 0; b < dim(); ++b) {
      brackets_[flat(a, b)] = decompose(voa::bracket(basis_[a].matrix, basis_[b].matrix));
      forms_[flat(a, b)] = invariant_form(basis_[a].matrix, basis_[b].matrix);
    }
}

std::shared_ptr<const SlAlgebra> SlAlgebra::shared(int l) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const SlAlgebra>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[l];
  if (!slot) slot = std::make_shared<const SlAlgebra>(l);
  return slot;
}

int SlAlgebra::e_index(int i, int j) const {
  auto it = e_lookup_.find({i, j});
  if (it == e_lookup_.end()) throw std::invalid_argument("no raising root vector (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return it->second;
}

int SlAlgebra::f_index(int i, int j) const {
  auto it = f_lookup_.find({i, j});
  if (it == f_lookup_.end()) throw std::invalid_argument("no lowering root vector (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return it->second;
}

int SlAlgebra::h_index(int p) const {
  if (p < 1 || p > rank_) throw std::invalid_argument("no Cartan generator h_" + std::to_string(p));
  return static_cast<int>(f_lookup_.size()) + p - 1;
}

SlAlgebra::Sparse SlAlgebra::decompose(const LieElement& x) const {
  check_rank(rank_, x.rank());
  std::map<int, Rational> coords;
  std::vector<Rational> diag(static_cast<std::size_t>(rank_ + 2));
  for (const auto& [pos, value] : x.entries()) {
    auto [row, col] = pos;
    if (row < col) {
      int a = e_index(row, col);
      coords[a] += value * basis_[a].sign;
    } else if (row > col) {
      int a = f_index(col, row);
      coords[a] += value * basis_[a].sign;
    } else {
      diag[static_cast<std::size_t>(row)] = value;
    }
  }
  Rational running = 0;
  for (int p = 1; p <= rank_; ++p) {
    running += diag[static_cast<std::size_t>(p)];
    if (sgn(running) != 0) coords[h_index(p)] = running;
  }
  Sparse out;
  for (auto& [a, c] : coords)
    if (sgn(c) != 0) out.emplace_back(a, c);
  return out;
}

LieElement SlAlgebra::compose(const Sparse& coords) const {
  LieElement out(rank_);
  for (const auto& [a, c] : coords) out += c * basis(a).matrix;
  return out;
}

}  // namespace voa
