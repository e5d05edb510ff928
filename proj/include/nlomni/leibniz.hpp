#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "nlomni/multilinear.hpp"

namespace nlomni {

/// Sparse coordinates: (basis index, nonzero coefficient), ascending index.
using SparseVector = std::vector<std::pair<int, Scalar>>;

SparseVector sparsify(const Vector& v);
Vector densify(const SparseVector& s, int dim);

/// Bilinear map on a finite-dimensional carrier, given on basis pairs.
/// No symmetry is assumed; [e_i, e_j] and [e_j, e_i] are independent.
class BracketTable {
 public:
  explicit BracketTable(int dim);

  /// Tabulates f(i, j) for every basis pair.
  static BracketTable tabulate(int dim, const std::function<Vector(int, int)>& f);

  int dim() const { return dim_; }
  const SparseVector& product(int i, int j) const { return products_[slot(i, j)]; }
  Vector product_dense(int i, int j) const { return densify(product(i, j), dim_); }
  void set_product(int i, int j, const Vector& value);
  Scalar at(int i, int j, int k) const;

  /// Bilinear extension to arbitrary vectors.
  Vector apply(const Vector& x, const Vector& y) const;
  /// [e_i, y] and [x, e_j] for dense y / x.
  Vector apply_left_basis(int i, const Vector& y) const;
  Vector apply_right_basis(const Vector& x, int j) const;

  bool is_zero() const;

  friend BracketTable operator+(const BracketTable& a, const BracketTable& b);
  friend bool operator==(const BracketTable& a, const BracketTable& b) = default;

 private:
  std::size_t slot(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j); }

  int dim_;
  std::vector<SparseVector> products_;
};

/// Endomorphism of a Leibniz carrier; same dense exact matrix as gl(V).
using EndoOnLeibniz = Endo;

struct LeibnizWitness {
  int x, y, z;
  Vector defect;  // x∘(y∘z) − y∘(x∘z) − (x∘y)∘z
};

struct LeibnizResult {
  std::optional<LeibnizWitness> witness;
  std::uint64_t triples = 0;
  bool ok() const { return !witness.has_value(); }
};

/// Left Leibniz identity on all basis triples, lexicographic; stops at
/// the first violation.
LeibnizResult leibniz_check(const BracketTable& table);

/// [x, y]_N = [Nx, y] + [x, Ny] − N[x, y]
BracketTable deformed_bracket(const BracketTable& table, const EndoOnLeibniz& n);

/// TN(x, y) = [Nx, Ny] − N[x, y]_N, tabulated on basis pairs.
BracketTable nijenhuis_torsion(const BracketTable& table, const EndoOnLeibniz& n);

struct PairWitness {
  int x, y;
  Vector value;
};

/// First basis pair (lexicographic) where a tabulated bilinear map is nonzero.
std::optional<PairWitness> first_nonzero(const BracketTable& table);

struct NijenhuisConsequences {
  std::optional<PairWitness> torsion;     // precondition violation
  LeibnizResult deformed;                 // (1) [·,·]_N is Leibniz
  std::optional<PairWitness> morphism;    // (2) N[x,y]_N − [Nx,Ny]
  LeibnizResult sum;                      // (3) [·,·] + [·,·]_N is Leibniz

  bool precondition_holds() const { return !torsion.has_value(); }
  bool ok() const { return precondition_holds() && deformed.ok() && !morphism && sum.ok(); }
};

/// Verifies the three consequences of a vanishing torsion separately. The
/// torsion is always evaluated and reported; the items are evaluated even
/// when it does not vanish so that the report is complete.
NijenhuisConsequences nijenhuis_consequences_check(const BracketTable& table, const EndoOnLeibniz& n);

}  // namespace nlomni
