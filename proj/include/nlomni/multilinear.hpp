#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nlomni/scalar.hpp"

namespace nlomni {

/// Basis label of ∧^k V: strictly increasing 0-based indices.
using WedgeIndex = std::vector<int>;

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(const std::string& what, int expected, int actual);
  int expected() const { return expected_; }
  int actual() const { return actual_; }

 private:
  int expected_;
  int actual_;
};

/// Sorts `idx` ascending and returns the sign of the sorting permutation,
/// or 0 when an index repeats (the wedge monomial vanishes).
int sort_with_sign(WedgeIndex& idx);

bool is_increasing(const WedgeIndex& idx);

/// All strictly increasing k-tuples in 0..dim-1, lexicographic.
std::vector<WedgeIndex> wedge_basis(int dim, int grade);

/// `idx` with the entry at `slot` removed.
WedgeIndex drop_slot(const WedgeIndex& idx, std::size_t slot);

/// Element of ∧^k V stored sparsely on the canonical basis.
class WedgeVector {
 public:
  using Terms = std::map<WedgeIndex, Scalar>;

  WedgeVector(int dim, int grade);

  static WedgeVector basis(int dim, WedgeIndex idx);
  static WedgeVector from_vector(const Vector& v);

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  const Terms& terms() const { return terms_; }
  Scalar coeff(const WedgeIndex& idx) const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds c · e_{idx[0]} ∧ ... in any index order; the permutation sign is
  /// folded into the coefficient and repeated indices contribute nothing.
  void add_term(WedgeIndex idx, const Scalar& c);

  WedgeVector& operator+=(const WedgeVector& other);
  WedgeVector& operator-=(const WedgeVector& other);
  WedgeVector& operator*=(const Scalar& c);

  friend WedgeVector operator+(WedgeVector a, const WedgeVector& b) { return a += b; }
  friend WedgeVector operator-(WedgeVector a, const WedgeVector& b) { return a -= b; }
  friend WedgeVector operator*(const Scalar& c, WedgeVector a) { return a *= c; }
  friend bool operator==(const WedgeVector& a, const WedgeVector& b) = default;

 private:
  void require_compatible(const WedgeVector& other) const;

  int dim_;
  int grade_;
  Terms terms_;
};

WedgeVector wedge(const WedgeVector& u, const WedgeVector& v);
WedgeVector wedge_of(std::span<const Vector> factors, int dim);

/// Linear endomorphism of V. Column j holds the image of e_j.
class Endo {
 public:
  explicit Endo(int dim);

  static Endo identity(int dim);
  /// Matrix unit: 1 at (row, col), i.e. e_col ↦ e_row.
  static Endo unit(int dim, int row, int col);
  static Endo diagonal(const Vector& d);
  static Endo from_columns(const std::vector<Vector>& columns);

  int dim() const { return dim_; }
  const Scalar& operator()(int row, int col) const { return entries_[index(row, col)]; }
  Scalar& operator()(int row, int col) { return entries_[index(row, col)]; }

  Vector column(int j) const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;
  Endo transpose() const;

  Endo& operator+=(const Endo& other);
  Endo& operator-=(const Endo& other);
  Endo& operator*=(const Scalar& c);

  friend Endo operator+(Endo a, const Endo& b) { return a += b; }
  friend Endo operator-(Endo a, const Endo& b) { return a -= b; }
  friend Endo operator*(const Scalar& c, Endo a) { return a *= c; }
  friend Endo operator*(const Endo& a, const Endo& b);
  friend bool operator==(const Endo& a, const Endo& b) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(col);
  }

  int dim_;
  std::vector<Scalar> entries_;  // row-major
};

Endo commutator(const Endo& a, const Endo& b);

/// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<Endo> inverse(const Endo& a);

/// Basis of {x : rows · x = 0} for a system with `cols` unknowns, in
/// reduced-row-echelon parametrization (one vector per free column).
std::vector<Vector> nullspace(std::vector<Vector> rows, int cols);

/// Element of V ⊗ ∧^k V; keys are (V index, increasing wedge index).
/// For k = 0 the wedge key is empty and the value is simply V-valued.
class TensorPairValue {
 public:
  using Key = std::pair<int, WedgeIndex>;
  using Terms = std::map<Key, Scalar>;

  TensorPairValue(int dim, int wedge_grade);

  static TensorPairValue basis(int dim, int v_index, WedgeIndex idx);
  /// All basis tensors e_i ⊗ e_J in key order.
  static std::vector<TensorPairValue> basis_of(int dim, int wedge_grade);

  int dim() const { return dim_; }
  int wedge_grade() const { return wedge_grade_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int v_index, WedgeIndex idx, const Scalar& c);
  /// Adds v ⊗ (c · e_idx) for a dense vector v.
  void add_product(const Vector& v, WedgeIndex idx, const Scalar& c);

  TensorPairValue& operator+=(const TensorPairValue& other);
  TensorPairValue& operator-=(const TensorPairValue& other);

  friend TensorPairValue operator+(TensorPairValue a, const TensorPairValue& b) { return a += b; }
  friend TensorPairValue operator-(TensorPairValue a, const TensorPairValue& b) { return a -= b; }
  friend bool operator==(const TensorPairValue& a, const TensorPairValue& b) = default;

 private:
  void require_compatible(const TensorPairValue& other) const;

  int dim_;
  int wedge_grade_;
  Terms terms_;
};

/// L_A u = Σ_i u_1 ∧ ... ∧ A u_i ∧ ... ∧ u_k.
WedgeVector endo_derivation(const Endo& a, const WedgeVector& u);

/// L_A on V ⊗ ∧^k V: acts on the V slot and on each wedge slot.
TensorPairValue endo_derivation_tensor(const Endo& a, const TensorPairValue& w);

}  // namespace nlomni
