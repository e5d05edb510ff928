#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlomni/leibniz.hpp"
#include "nlomni/multilinear.hpp"

namespace nlomni {

/// Fully skew n-ary bracket on a dim-dimensional space, stored by its
/// structure constants on strictly increasing basis tuples only. Nothing
/// about the Fundamental Identity is assumed at construction; see fi_check.
class NLieAlgebra {
 public:
  NLieAlgebra(int arity, int dim);

  int arity() const { return arity_; }
  int dim() const { return dim_; }
  const std::map<WedgeIndex, Vector>& constants() const { return constants_; }
  bool is_abelian() const { return constants_.empty(); }

  /// Sets [e_{i_1}, ..., e_{i_n}] for a strictly increasing tuple. A zero
  /// value erases the entry.
  void set_bracket(const WedgeIndex& args, const Vector& value);

  /// Bracket of basis vectors in any order: sign of the sorting
  /// permutation times the stored value, zero on a repeated index.
  Vector bracket_basis(WedgeIndex args) const;

  /// Multilinear evaluation on arbitrary vectors.
  Vector bracket(std::span<const Vector> args) const;

  std::vector<std::string> basis_names;

  friend bool operator==(const NLieAlgebra& a, const NLieAlgebra& b) {
    return a.arity_ == b.arity_ && a.dim_ == b.dim_ && a.constants_ == b.constants_;
  }

 private:
  int arity_;
  int dim_;
  std::map<WedgeIndex, Vector> constants_;
};

/// A linear map ∧^n V → V with the same storage; only the name differs.
using SkewMap = NLieAlgebra;
using FundamentalObject = WedgeVector;

struct FIWitness {
  WedgeIndex u;   // n−1 increasing indices
  WedgeIndex v;   // n increasing indices
  Vector defect;  // [u, [v]] − Σ_i [v_1, ..., [u, v_i], ..., v_n]
};

struct FIResult {
  std::vector<FIWitness> violations;
  std::uint64_t cases = 0;
  bool ok() const { return violations.empty(); }
};

enum class FIMode { first_witness, exhaustive };

/// Fundamental Identity on all increasing basis tuples (u, v), in
/// lexicographic order. Skew-symmetry in each group makes increasing
/// tuples sufficient.
FIResult fi_check(const NLieAlgebra& g, FIMode mode = FIMode::first_witness);

class FundamentalIdentityError : public std::runtime_error {
 public:
  explicit FundamentalIdentityError(FIWitness w);
  const FIWitness& witness() const { return witness_; }

 private:
  FIWitness witness_;
};

/// Throws FundamentalIdentityError carrying the first witness.
void require_fi(const NLieAlgebra& g);

/// ad_u v = [u_1, ..., u_{n−1}, v], extended linearly in u.
Endo ad(const NLieAlgebra& g, const FundamentalObject& u);

/// u∘v = Σ_i v_1 ∧ ... ∧ ad_u v_i ∧ ... ∧ v_{n−1}.
FundamentalObject fo_compose(const NLieAlgebra& g, const FundamentalObject& u, const FundamentalObject& v);

/// Table of ∘ on the canonical basis of ∧^{n−1}g. Requires the Fundamental
/// Identity; throws FundamentalIdentityError otherwise.
BracketTable induced_leibniz(const NLieAlgebra& g);
/// Same table without the precondition.
BracketTable induced_leibniz_unchecked(const NLieAlgebra& g);

/// Basis of Der(g) = {A : A[x_1..x_n] = Σ [x_1..A x_i..x_n]}.
std::vector<Endo> derivation_basis(const NLieAlgebra& g);
bool is_derivation(const NLieAlgebra& g, const Endo& a);

/// Transported bracket P⁻¹[P x_1, ..., P x_n]; P must be invertible.
NLieAlgebra change_basis(const NLieAlgebra& g, const Endo& p);

}  // namespace nlomni
