#pragma once

#include <functional>
#include <map>
#include <vector>

#include "nlomni/check.hpp"
#include "nlomni/leibniz.hpp"
#include "nlomni/multilinear.hpp"
#include "nlomni/nlie.hpp"

namespace nlomni {

/// A + u in gl(V) ⊕ ∧^{n−1}V.
struct OmniElement {
  Endo endo;
  WedgeVector wedge;

  OmniElement(Endo a, WedgeVector u);
  static OmniElement zero(int dim, int arity);

  int dim() const { return endo.dim(); }
  int arity() const { return wedge.grade() + 1; }

  friend OmniElement operator+(const OmniElement& x, const OmniElement& y) { return {x.endo + y.endo, x.wedge + y.wedge}; }
  friend OmniElement operator-(const OmniElement& x, const OmniElement& y) { return {x.endo - y.endo, x.wedge - y.wedge}; }
  friend bool operator==(const OmniElement& x, const OmniElement& y) = default;
};

nlohmann::json to_json(const OmniElement& x);

/// {A + u, B + v} = [A, B] + L_A v
OmniElement omni_bracket(const OmniElement& x, const OmniElement& y);

/// (A + u, B + v)_+ with values in V ⊗ ∧^{n−2}V.
TensorPairValue omni_pairing(const OmniElement& x, const OmniElement& y);

/// ρ_V(A + u)(w) = L_A w
TensorPairValue rho_v(const OmniElement& x, const TensorPairValue& w);

using OmniBracketFn = std::function<OmniElement(const OmniElement&, const OmniElement&)>;

/// Basis {E_ij} (row-major) followed by the lexicographic basis of ∧^{n−1}V.
class OmniCarrier {
 public:
  OmniCarrier(int dim, int arity);

  int dim() const { return dim_; }
  int arity() const { return arity_; }
  int size() const { return dim_ * dim_ + static_cast<int>(wedges_.size()); }
  int endo_count() const { return dim_ * dim_; }
  const std::vector<WedgeIndex>& wedge_basis() const { return wedges_; }

  OmniElement element(int k) const;
  std::vector<OmniElement> basis() const;
  Vector coordinates(const OmniElement& x) const;
  OmniElement from_coordinates(const Vector& c) const;
  /// Coordinates of an endomorphism placed in the gl part.
  Vector endo_coordinates(const Endo& a) const;

  BracketTable table(const OmniBracketFn& bracket) const;

 private:
  int dim_;
  int arity_;
  std::vector<WedgeIndex> wedges_;
  std::map<WedgeIndex, int> position_;
};

/// Left Leibniz identity of a bracket on the omni carrier.
Check omni_leibniz_check(int dim, int arity, const OmniBracketFn& bracket = omni_bracket);

/// ({e1,e2}, e3)_+ + (e2, {e1,e3})_+ = ρ_V(e1)(e2, e3)_+ on all basis
/// triples (exhaustive) or config.samples random triples.
Check omni_compat_check(int dim, int arity, const SuiteConfig& config = {}, const OmniBracketFn& bracket = omni_bracket);

/// Closure of the graph of F♯ under the omni bracket:
/// F♯(L_{F♯(u)} v) = [F♯(u), F♯(v)] on all basis pairs (u, v).
Check graph_test(const SkewMap& f);

/// Nonabelian omni n-Lie algebra over an n-Lie algebra g. Construction
/// validates the Fundamental Identity once (FundamentalIdentityError).
class NonabelianOmni {
 public:
  explicit NonabelianOmni(NLieAlgebra g);

  const NLieAlgebra& algebra() const { return g_; }
  const OmniCarrier& carrier() const { return carrier_; }
  int dim() const { return g_.dim(); }
  int arity() const { return g_.arity(); }

  Endo ad(const WedgeVector& u) const;
  WedgeVector compose(const WedgeVector& u, const WedgeVector& v) const;

  /// {A+u, B+v}_g = [A,B] + [A,ad_v] + [ad_u,B] − ad_{L_A v} + L_A v + u∘v
  OmniElement bracket(const OmniElement& x, const OmniElement& y) const;
  /// ρ_g(A+u)(w) = L_{A + ad_u} w
  TensorPairValue rho(const OmniElement& x, const TensorPairValue& w) const;

  BracketTable omni_table() const;
  BracketTable nonabelian_table() const;

 private:
  NLieAlgebra g_;
  OmniCarrier carrier_;
  std::vector<Endo> basis_ad_;  // ad of each wedge basis element
};

OmniElement nonabelian_bracket(const NonabelianOmni& omni, const OmniElement& x, const OmniElement& y);

/// Compatibility with the correction terms [A, ad_v] − ad_{L_A v} removed,
/// exhaustively on basis triples; and the uncorrected identity on
/// Der(g) ⊕ ∧^{n−1}g together with the vanishing of the correction there.
std::vector<Check> nonabelian_compat_check(const NonabelianOmni& omni);

/// N(A + u) = ad_u as a matrix on the carrier.
EndoOnLeibniz omni_nijenhuis(const NonabelianOmni& omni);

/// Torsion of N against the omni table, the N-image identity, and the
/// three consequences of a vanishing torsion.
std::vector<Check> nijenhuis_suite(const NonabelianOmni& omni);

/// nonabelian table = omni table + deformed(omni table, N), and the
/// nonabelian table satisfies the left Leibniz identity.
std::vector<Check> deformation_identity_check(const NonabelianOmni& omni);

}  // namespace nlomni
