#include "nlomni/multilinear.hpp"

#include <algorithm>

namespace nlomni {

DimensionMismatch::DimensionMismatch(const std::string& what, int expected, int actual)
    : std::invalid_argument(what + ": dimension mismatch (expected " + std::to_string(expected) + ", got " +
                            std::to_string(actual) + ")"),
      expected_(expected),
      actual_(actual) {}

int sort_with_sign(WedgeIndex& idx) {
  int sign = 1;
  // insertion sort; tuples are short
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  return sign;
}

bool is_increasing(const WedgeIndex& idx) {
  return std::adjacent_find(idx.begin(), idx.end(), [](int a, int b) { return a >= b; }) == idx.end();
}

std::vector<WedgeIndex> wedge_basis(int dim, int grade) {
  std::vector<WedgeIndex> out;
  if (grade < 0 || grade > dim) return out;
  WedgeIndex cur(static_cast<std::size_t>(grade));
  for (int i = 0; i < grade; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int pos = grade - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == dim - grade + pos) --pos;
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < grade; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

WedgeIndex drop_slot(const WedgeIndex& idx, std::size_t slot) {
  WedgeIndex out;
  out.reserve(idx.size() - 1);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i != slot) out.push_back(idx[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// WedgeVector

WedgeVector::WedgeVector(int dim, int grade) : dim_(dim), grade_(grade) {
  if (dim < 0 || grade < 0) throw std::invalid_argument("WedgeVector: negative dimension or grade");
}

WedgeVector WedgeVector::basis(int dim, WedgeIndex idx) {
  WedgeVector w(dim, static_cast<int>(idx.size()));
  w.add_term(std::move(idx), 1);
  return w;
}

WedgeVector WedgeVector::from_vector(const Vector& v) {
  WedgeVector w(static_cast<int>(v.size()), 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) w.terms_.emplace(WedgeIndex{static_cast<int>(i)}, v[i]);
  }
  return w;
}

Scalar WedgeVector::coeff(const WedgeIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void WedgeVector::add_term(WedgeIndex idx, const Scalar& c) {
  if (static_cast<int>(idx.size()) != grade_) throw DimensionMismatch("WedgeVector::add_term grade", grade_, static_cast<int>(idx.size()));
  for (int i : idx) {
    if (i < 0 || i >= dim_) throw std::out_of_range("WedgeVector::add_term: index " + std::to_string(i) + " outside 0.." + std::to_string(dim_ - 1));
  }
  if (sgn(c) == 0) return;
  const int sign = sort_with_sign(idx);
  if (sign == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(idx), 0);
  if (sign > 0) it->second += c; else it->second -= c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

void WedgeVector::require_compatible(const WedgeVector& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch("WedgeVector", dim_, other.dim_);
  if (grade_ != other.grade_) throw DimensionMismatch("WedgeVector grade", grade_, other.grade_);
}

WedgeVector& WedgeVector::operator+=(const WedgeVector& other) {
  require_compatible(other);
  for (const auto& [idx, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(idx, 0);
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
  return *this;
}

WedgeVector& WedgeVector::operator-=(const WedgeVector& other) {
  require_compatible(other);
  for (const auto& [idx, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(idx, 0);
    it->second -= c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
  return *this;
}

WedgeVector& WedgeVector::operator*=(const Scalar& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, x] : terms_) x *= c;
  return *this;
}

WedgeVector wedge(const WedgeVector& u, const WedgeVector& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch("wedge", u.dim(), v.dim());
  WedgeVector out(u.dim(), u.grade() + v.grade());
  if (u.grade() + v.grade() > u.dim()) return out;
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      WedgeIndex idx = a;
      idx.insert(idx.end(), b.begin(), b.end());
      out.add_term(std::move(idx), ca * cb);
    }
  }
  return out;
}

WedgeVector wedge_of(std::span<const Vector> factors, int dim) {
  WedgeVector acc(dim, 0);
  acc.add_term({}, 1);
  for (const auto& f : factors) {
    if (static_cast<int>(f.size()) != dim) throw DimensionMismatch("wedge_of", dim, static_cast<int>(f.size()));
    acc = wedge(acc, WedgeVector::from_vector(f));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Endo

Endo::Endo(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
  if (dim < 0) throw std::invalid_argument("Endo: negative dimension");
}

Endo Endo::identity(int dim) {
  Endo e(dim);
  for (int i = 0; i < dim; ++i) e(i, i) = 1;
  return e;
}

Endo Endo::unit(int dim, int row, int col) {
  Endo e(dim);
  e(row, col) = 1;
  return e;
}

Endo Endo::diagonal(const Vector& d) {
  Endo e(static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) e(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return e;
}

Endo Endo::from_columns(const std::vector<Vector>& columns) {
  const int dim = static_cast<int>(columns.size());
  Endo e(dim);
  for (int j = 0; j < dim; ++j) {
    const auto& col = columns[static_cast<std::size_t>(j)];
    if (static_cast<int>(col.size()) != dim) throw DimensionMismatch("Endo::from_columns", dim, static_cast<int>(col.size()));
    for (int i = 0; i < dim; ++i) e(i, j) = col[static_cast<std::size_t>(i)];
  }
  return e;
}

Vector Endo::column(int j) const {
  Vector v = zero_vector(dim_);
  for (int i = 0; i < dim_; ++i) v[static_cast<std::size_t>(i)] = (*this)(i, j);
  return v;
}

Vector Endo::apply(const Vector& v) const {
  if (static_cast<int>(v.size()) != dim_) throw DimensionMismatch("Endo::apply", dim_, static_cast<int>(v.size()));
  Vector r = zero_vector(dim_);
  for (int j = 0; j < dim_; ++j) {
    const auto& vj = v[static_cast<std::size_t>(j)];
    if (sgn(vj) == 0) continue;
    for (int i = 0; i < dim_; ++i) {
      const auto& a = (*this)(i, j);
      if (sgn(a) != 0) r[static_cast<std::size_t>(i)] += a * vj;
    }
  }
  return r;
}

bool Endo::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Endo Endo::transpose() const {
  Endo t(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Endo& Endo::operator+=(const Endo& other) {
  if (dim_ != other.dim_) throw DimensionMismatch("Endo +", dim_, other.dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Endo& Endo::operator-=(const Endo& other) {
  if (dim_ != other.dim_) throw DimensionMismatch("Endo -", dim_, other.dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Endo& Endo::operator*=(const Scalar& c) {
  for (auto& x : entries_) x *= c;
  return *this;
}

Endo operator*(const Endo& a, const Endo& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("Endo *", a.dim_, b.dim_);
  Endo r(a.dim_);
  for (int i = 0; i < a.dim_; ++i) {
    for (int k = 0; k < a.dim_; ++k) {
      const auto& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < a.dim_; ++j) {
        const auto& bkj = b(k, j);
        if (sgn(bkj) != 0) r(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

Endo commutator(const Endo& a, const Endo& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("commutator", a.dim(), b.dim());
  return a * b - b * a;
}

namespace {

// Gauss-Jordan to reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<Vector>& rows, int cols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][static_cast<std::size_t>(c)]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Scalar inv = 1 / rows[r][static_cast<std::size_t>(c)];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const Scalar f = rows[i][static_cast<std::size_t>(c)];
      if (sgn(f) != 0) axpy(rows[i], -f, rows[r]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<Endo> inverse(const Endo& a) {
  const int n = a.dim();
  std::vector<Vector> rows(static_cast<std::size_t>(n), zero_vector(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j);
    rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
  }
  const auto pivots = rref(rows, n);
  if (static_cast<int>(pivots.size()) != n) return std::nullopt;
  Endo inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
  return inv;
}

std::vector<Vector> nullspace(std::vector<Vector> rows, int cols) {
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols) throw DimensionMismatch("nullspace", cols, static_cast<int>(r.size()));
  }
  const auto pivots = rref(rows, cols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector x = zero_vector(cols);
    x[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      x[static_cast<std::size_t>(pivots[r])] = -rows[r][static_cast<std::size_t>(free)];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// TensorPairValue

TensorPairValue::TensorPairValue(int dim, int wedge_grade) : dim_(dim), wedge_grade_(wedge_grade) {
  if (dim < 0 || wedge_grade < 0) throw std::invalid_argument("TensorPairValue: negative dimension or grade");
}

TensorPairValue TensorPairValue::basis(int dim, int v_index, WedgeIndex idx) {
  TensorPairValue t(dim, static_cast<int>(idx.size()));
  t.add_term(v_index, std::move(idx), 1);
  return t;
}

std::vector<TensorPairValue> TensorPairValue::basis_of(int dim, int wedge_grade) {
  std::vector<TensorPairValue> out;
  for (int i = 0; i < dim; ++i) {
    for (auto& idx : wedge_basis(dim, wedge_grade)) out.push_back(basis(dim, i, idx));
  }
  return out;
}

void TensorPairValue::add_term(int v_index, WedgeIndex idx, const Scalar& c) {
  if (static_cast<int>(idx.size()) != wedge_grade_) throw DimensionMismatch("TensorPairValue::add_term grade", wedge_grade_, static_cast<int>(idx.size()));
  if (v_index < 0 || v_index >= dim_) throw std::out_of_range("TensorPairValue::add_term: V index out of range");
  if (sgn(c) == 0) return;
  const int sign = sort_with_sign(idx);
  if (sign == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{v_index, std::move(idx)}, 0);
  if (sign > 0) it->second += c; else it->second -= c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

void TensorPairValue::add_product(const Vector& v, WedgeIndex idx, const Scalar& c) {
  if (static_cast<int>(v.size()) != dim_) throw DimensionMismatch("TensorPairValue::add_product", dim_, static_cast<int>(v.size()));
  for (int i = 0; i < dim_; ++i) {
    const auto& vi = v[static_cast<std::size_t>(i)];
    if (sgn(vi) != 0) add_term(i, idx, c * vi);
  }
}

void TensorPairValue::require_compatible(const TensorPairValue& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch("TensorPairValue", dim_, other.dim_);
  if (wedge_grade_ != other.wedge_grade_) throw DimensionMismatch("TensorPairValue grade", wedge_grade_, other.wedge_grade_);
}

TensorPairValue& TensorPairValue::operator+=(const TensorPairValue& other) {
  require_compatible(other);
  for (const auto& [k, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, 0);
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
  return *this;
}

TensorPairValue& TensorPairValue::operator-=(const TensorPairValue& other) {
  require_compatible(other);
  for (const auto& [k, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, 0);
    it->second -= c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
  return *this;
}

// ---------------------------------------------------------------------------
// derivation actions

WedgeVector endo_derivation(const Endo& a, const WedgeVector& u) {
  if (a.dim() != u.dim()) throw DimensionMismatch("endo_derivation", a.dim(), u.dim());
  WedgeVector out(u.dim(), u.grade());
  for (const auto& [idx, c] : u.terms()) {
    for (std::size_t slot = 0; slot < idx.size(); ++slot) {
      const int src = idx[slot];
      for (int row = 0; row < a.dim(); ++row) {
        const auto& entry = a(row, src);
        if (sgn(entry) == 0) continue;
        WedgeIndex replaced = idx;
        replaced[slot] = row;
        out.add_term(std::move(replaced), c * entry);
      }
    }
  }
  return out;
}

TensorPairValue endo_derivation_tensor(const Endo& a, const TensorPairValue& w) {
  if (a.dim() != w.dim()) throw DimensionMismatch("endo_derivation_tensor", a.dim(), w.dim());
  TensorPairValue out(w.dim(), w.wedge_grade());
  for (const auto& [key, c] : w.terms()) {
    const auto& [vi, idx] = key;
    for (int row = 0; row < a.dim(); ++row) {
      const auto& entry = a(row, vi);
      if (sgn(entry) != 0) out.add_term(row, idx, c * entry);
    }
    for (std::size_t slot = 0; slot < idx.size(); ++slot) {
      const int src = idx[slot];
      for (int row = 0; row < a.dim(); ++row) {
        const auto& entry = a(row, src);
        if (sgn(entry) == 0) continue;
        WedgeIndex replaced = idx;
        replaced[slot] = row;
        out.add_term(vi, std::move(replaced), c * entry);
      }
    }
  }
  return out;
}

}  // namespace nlomni
