#include "nlomni/omni.hpp"

#include "nlomni/random.hpp"
#include "nlomni/serialize.hpp"

namespace nlomni {

OmniElement::OmniElement(Endo a, WedgeVector u) : endo(std::move(a)), wedge(std::move(u)) {
  if (endo.dim() != wedge.dim()) throw DimensionMismatch("OmniElement", endo.dim(), wedge.dim());
}

OmniElement OmniElement::zero(int dim, int arity) { return {Endo(dim), WedgeVector(dim, arity - 1)}; }

nlohmann::json to_json(const OmniElement& x) { return {{"endo", to_json(x.endo)}, {"wedge", to_json(x.wedge)}}; }

namespace {

void require_same_shape(const OmniElement& x, const OmniElement& y, const char* what) {
  if (x.dim() != y.dim()) throw DimensionMismatch(what, x.dim(), y.dim());
  if (x.arity() != y.arity()) throw DimensionMismatch(std::string(what) + " arity", x.arity(), y.arity());
}

// Σ_i (−1)^{i+1} A v_i ⊗ v_1 ∧ .. v̂_i .. ∧ v_{n−1}
void add_half_pairing(TensorPairValue& out, const Endo& a, const WedgeVector& v) {
  for (const auto& [idx, c] : v.terms()) {
    for (std::size_t s = 0; s < idx.size(); ++s) {
      out.add_product(a.column(idx[s]), drop_slot(idx, s), s % 2 == 0 ? c : Scalar(-c));
    }
  }
}

OmniElement random_element(int dim, int arity, SeededRng& rng) {
  OmniElement x = OmniElement::zero(dim, arity);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) x.endo(i, j) = rng.coefficient();
  for (const auto& idx : wedge_basis(dim, arity - 1)) x.wedge.add_term(idx, rng.coefficient());
  return x;
}

}  // namespace

OmniElement omni_bracket(const OmniElement& x, const OmniElement& y) {
  require_same_shape(x, y, "omni_bracket");
  return {commutator(x.endo, y.endo), endo_derivation(x.endo, y.wedge)};
}

TensorPairValue omni_pairing(const OmniElement& x, const OmniElement& y) {
  require_same_shape(x, y, "omni_pairing");
  TensorPairValue out(x.dim(), x.arity() - 2);
  add_half_pairing(out, x.endo, y.wedge);
  add_half_pairing(out, y.endo, x.wedge);
  return out;
}

TensorPairValue rho_v(const OmniElement& x, const TensorPairValue& w) { return endo_derivation_tensor(x.endo, w); }

// ---------------------------------------------------------------------------
// OmniCarrier

OmniCarrier::OmniCarrier(int dim, int arity) : dim_(dim), arity_(arity), wedges_(nlomni::wedge_basis(dim, arity - 1)) {
  if (arity < 2) throw std::invalid_argument("OmniCarrier: arity must be at least 2");
  for (std::size_t i = 0; i < wedges_.size(); ++i) position_[wedges_[i]] = static_cast<int>(i);
}

OmniElement OmniCarrier::element(int k) const {
  OmniElement x = OmniElement::zero(dim_, arity_);
  if (k < endo_count()) {
    x.endo(k / dim_, k % dim_) = 1;
  } else {
    x.wedge.add_term(wedges_.at(static_cast<std::size_t>(k - endo_count())), 1);
  }
  return x;
}

std::vector<OmniElement> OmniCarrier::basis() const {
  std::vector<OmniElement> out;
  for (int k = 0; k < size(); ++k) out.push_back(element(k));
  return out;
}

Vector OmniCarrier::endo_coordinates(const Endo& a) const {
  if (a.dim() != dim_) throw DimensionMismatch("OmniCarrier::endo_coordinates", dim_, a.dim());
  Vector c = zero_vector(size());
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) c[static_cast<std::size_t>(i * dim_ + j)] = a(i, j);
  return c;
}

Vector OmniCarrier::coordinates(const OmniElement& x) const {
  if (x.dim() != dim_) throw DimensionMismatch("OmniCarrier::coordinates", dim_, x.dim());
  if (x.arity() != arity_) throw DimensionMismatch("OmniCarrier::coordinates arity", arity_, x.arity());
  Vector c = endo_coordinates(x.endo);
  for (const auto& [idx, v] : x.wedge.terms()) c[static_cast<std::size_t>(endo_count() + position_.at(idx))] = v;
  return c;
}

OmniElement OmniCarrier::from_coordinates(const Vector& c) const {
  if (static_cast<int>(c.size()) != size()) throw DimensionMismatch("OmniCarrier::from_coordinates", size(), static_cast<int>(c.size()));
  OmniElement x = OmniElement::zero(dim_, arity_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) x.endo(i, j) = c[static_cast<std::size_t>(i * dim_ + j)];
  for (std::size_t k = 0; k < wedges_.size(); ++k) x.wedge.add_term(wedges_[k], c[static_cast<std::size_t>(endo_count()) + k]);
  return x;
}

BracketTable OmniCarrier::table(const OmniBracketFn& bracket) const {
  const auto b = basis();
  return BracketTable::tabulate(size(), [&](int i, int j) {
    return coordinates(bracket(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]));
  });
}

// ---------------------------------------------------------------------------
// checks on the omni n-Lie algebra

Check omni_leibniz_check(int dim, int arity, const OmniBracketFn& bracket) {
  Check check("omni.leibniz");
  const OmniCarrier carrier(dim, arity);
  const auto r = leibniz_check(carrier.table(bracket));
  check.cases = r.triples;
  if (!r.ok()) {
    const auto& w = *r.witness;
    check.fail({{"x", to_json(carrier.element(w.x))},
                {"y", to_json(carrier.element(w.y))},
                {"z", to_json(carrier.element(w.z))},
                {"defect", to_json(carrier.from_coordinates(w.defect))}});
  }
  return check;
}

Check omni_compat_check(int dim, int arity, const SuiteConfig& config, const OmniBracketFn& bracket) {
  Check check("omni.pairing_compat");
  const OmniCarrier carrier(dim, arity);
  auto test = [&](const OmniElement& e1, const OmniElement& e2, const OmniElement& e3) {
    ++check.cases;
    const auto lhs = omni_pairing(bracket(e1, e2), e3) + omni_pairing(e2, bracket(e1, e3));
    const auto rhs = rho_v(e1, omni_pairing(e2, e3));
    if (lhs == rhs) return true;
    check.fail({{"e1", to_json(e1)}, {"e2", to_json(e2)}, {"e3", to_json(e3)}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
    return false;
  };
  if (config.mode == SuiteConfig::Mode::exhaustive) {
    const auto b = carrier.basis();
    for (const auto& e1 : b)
      for (const auto& e2 : b)
        for (const auto& e3 : b)
          if (!test(e1, e2, e3)) return check;
  } else {
    SeededRng rng(config.seed, "omni.pairing_compat");
    for (int s = 0; s < config.samples; ++s) {
      const auto e1 = random_element(dim, arity, rng);
      const auto e2 = random_element(dim, arity, rng);
      const auto e3 = random_element(dim, arity, rng);
      if (!test(e1, e2, e3)) return check;
    }
  }
  return check;
}

Check graph_test(const SkewMap& f) {
  Check check("omni.graph_closure");
  const int m = f.dim();
  const auto basis = wedge_basis(m, f.arity() - 1);
  std::vector<Endo> sharp;
  for (const auto& idx : basis) sharp.push_back(ad(f, WedgeVector::basis(m, idx)));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      ++check.cases;
      const Endo lhs = ad(f, endo_derivation(sharp[i], WedgeVector::basis(m, basis[j])));
      const Endo rhs = commutator(sharp[i], sharp[j]);
      if (lhs != rhs) {
        check.fail({{"u", index_json(basis[i])}, {"v", index_json(basis[j])}, {"defect", to_json(lhs - rhs)}});
        return check;
      }
    }
  }
  return check;
}

// ---------------------------------------------------------------------------
// nonabelian omni n-Lie algebra

NonabelianOmni::NonabelianOmni(NLieAlgebra g) : g_(std::move(g)), carrier_(g_.dim(), g_.arity()) {
  require_fi(g_);
  for (const auto& idx : carrier_.wedge_basis()) basis_ad_.push_back(nlomni::ad(g_, WedgeVector::basis(g_.dim(), idx)));
}

Endo NonabelianOmni::ad(const WedgeVector& u) const {
  if (u.dim() != dim()) throw DimensionMismatch("NonabelianOmni::ad", dim(), u.dim());
  Endo a(dim());
  const auto& wb = carrier_.wedge_basis();
  for (std::size_t k = 0; k < wb.size(); ++k) {
    const Scalar c = u.coeff(wb[k]);
    if (sgn(c) != 0) a += c * basis_ad_[k];
  }
  return a;
}

WedgeVector NonabelianOmni::compose(const WedgeVector& u, const WedgeVector& v) const { return endo_derivation(ad(u), v); }

OmniElement NonabelianOmni::bracket(const OmniElement& x, const OmniElement& y) const {
  require_same_shape(x, y, "nonabelian_bracket");
  if (x.dim() != dim()) throw DimensionMismatch("nonabelian_bracket", dim(), x.dim());
  if (x.arity() != arity()) throw DimensionMismatch("nonabelian_bracket arity", arity(), x.arity());
  const Endo& a = x.endo;
  const Endo& b = y.endo;
  const Endo ad_u = ad(x.wedge);
  const Endo ad_v = ad(y.wedge);
  const WedgeVector la_v = endo_derivation(a, y.wedge);
  Endo endo = commutator(a, b) + commutator(a, ad_v) + commutator(ad_u, b) - ad(la_v);
  WedgeVector wedge = la_v + endo_derivation(ad_u, y.wedge);
  return {std::move(endo), std::move(wedge)};
}

TensorPairValue NonabelianOmni::rho(const OmniElement& x, const TensorPairValue& w) const {
  return endo_derivation_tensor(x.endo + ad(x.wedge), w);
}

BracketTable NonabelianOmni::omni_table() const { return carrier_.table(omni_bracket); }

BracketTable NonabelianOmni::nonabelian_table() const {
  return carrier_.table([this](const OmniElement& x, const OmniElement& y) { return bracket(x, y); });
}

OmniElement nonabelian_bracket(const NonabelianOmni& omni, const OmniElement& x, const OmniElement& y) {
  return omni.bracket(x, y);
}

std::vector<Check> nonabelian_compat_check(const NonabelianOmni& omni) {
  const auto basis = omni.carrier().basis();
  const std::size_t d = basis.size();

  // [A, ad_v] − ad_{L_A v}, the terms removed from the bracket
  auto correction = [&](const Endo& a, const WedgeVector& v) {
    return commutator(a, omni.ad(v)) - omni.ad(endo_derivation(a, v));
  };

  std::vector<OmniElement> corrected;  // index i*d + j
  corrected.reserve(d * d);
  for (const auto& e1 : basis) {
    for (const auto& e2 : basis) {
      OmniElement b = omni.bracket(e1, e2);
      b.endo -= correction(e1.endo, e2.wedge);
      corrected.push_back(std::move(b));
    }
  }

  Check corrected_check("nonabelian.pairing_compat");
  corrected_check.note = "pairing takes values in g (x) wedge^{n-2} g";
  [&] {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
          ++corrected_check.cases;
          const auto lhs = omni.rho(basis[i], omni_pairing(basis[j], basis[k]));
          const auto rhs = omni_pairing(corrected[i * d + j], basis[k]) + omni_pairing(basis[j], corrected[i * d + k]);
          if (lhs != rhs) {
            corrected_check.fail({{"e1", to_json(basis[i])}, {"e2", to_json(basis[j])}, {"e3", to_json(basis[k])},
                                  {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
            return;
          }
        }
      }
    }
  }();

  // Der(g) ⊕ ∧^{n−1}g
  const auto ders = derivation_basis(omni.algebra());
  Check der_basis_check("nonabelian.derivation_basis");
  for (const auto& a : ders) {
    ++der_basis_check.cases;
    if (!is_derivation(omni.algebra(), a)) {
      der_basis_check.fail({{"endo", to_json(a)}});
      break;
    }
  }
  der_basis_check.note = "dim Der(g) = " + std::to_string(ders.size());

  std::vector<OmniElement> restricted;
  for (const auto& a : ders) restricted.emplace_back(a, WedgeVector(omni.dim(), omni.arity() - 1));
  for (const auto& idx : omni.carrier().wedge_basis()) restricted.emplace_back(Endo(omni.dim()), WedgeVector::basis(omni.dim(), idx));

  Check vanish_check("nonabelian.derivation_correction_vanishes");
  [&] {
    for (const auto& a : ders) {
      for (const auto& idx : omni.carrier().wedge_basis()) {
        ++vanish_check.cases;
        const Endo c = correction(a, WedgeVector::basis(omni.dim(), idx));
        if (!c.is_zero()) {
          vanish_check.fail({{"endo", to_json(a)}, {"v", index_json(idx)}, {"correction", to_json(c)}});
          return;
        }
      }
    }
  }();

  Check clean_check("nonabelian.pairing_compat_derivations");
  [&] {
    const std::size_t r = restricted.size();
    std::vector<OmniElement> br;
    br.reserve(r * r);
    for (const auto& e1 : restricted)
      for (const auto& e2 : restricted) br.push_back(omni.bracket(e1, e2));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t k = 0; k < r; ++k) {
          ++clean_check.cases;
          const auto lhs = omni.rho(restricted[i], omni_pairing(restricted[j], restricted[k]));
          const auto rhs = omni_pairing(br[i * r + j], restricted[k]) + omni_pairing(restricted[j], br[i * r + k]);
          if (lhs != rhs) {
            clean_check.fail({{"e1", to_json(restricted[i])}, {"e2", to_json(restricted[j])}, {"e3", to_json(restricted[k])},
                              {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
            return;
          }
        }
      }
    }
  }();

  Check self_check("nonabelian.self_bracket");
  [&] {
    // {x,x}_g is quadratic in x; basis elements and pairwise sums determine it.
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i; j < d; ++j) {
        ++self_check.cases;
        const OmniElement x = i == j ? basis[i] : basis[i] + basis[j];
        const WedgeVector la_u = endo_derivation(x.endo, x.wedge);
        const OmniElement expected{Scalar(-1) * omni.ad(la_u), la_u + omni.compose(x.wedge, x.wedge)};
        const OmniElement got = omni.bracket(x, x);
        if (got != expected) {
          self_check.fail({{"x", to_json(x)}, {"bracket", to_json(got)}, {"expected", to_json(expected)}});
          return;
        }
      }
    }
  }();

  return {std::move(corrected_check), std::move(der_basis_check), std::move(vanish_check), std::move(clean_check),
          std::move(self_check)};
}

EndoOnLeibniz omni_nijenhuis(const NonabelianOmni& omni) {
  const auto& carrier = omni.carrier();
  std::vector<Vector> columns;
  for (int k = 0; k < carrier.size(); ++k) {
    if (k < carrier.endo_count()) {
      columns.push_back(zero_vector(carrier.size()));
    } else {
      const auto& idx = carrier.wedge_basis()[static_cast<std::size_t>(k - carrier.endo_count())];
      columns.push_back(carrier.endo_coordinates(omni.ad(WedgeVector::basis(omni.dim(), idx))));
    }
  }
  return Endo::from_columns(columns);
}

namespace {

nlohmann::json pair_witness(const OmniCarrier& carrier, const PairWitness& w) {
  return {{"x", to_json(carrier.element(w.x))}, {"y", to_json(carrier.element(w.y))}, {"value", to_json(carrier.from_coordinates(w.value))}};
}

nlohmann::json triple_witness(const OmniCarrier& carrier, const LeibnizWitness& w) {
  return {{"x", to_json(carrier.element(w.x))},
          {"y", to_json(carrier.element(w.y))},
          {"z", to_json(carrier.element(w.z))},
          {"defect", to_json(carrier.from_coordinates(w.defect))}};
}

}  // namespace

std::vector<Check> nijenhuis_suite(const NonabelianOmni& omni) {
  const auto& carrier = omni.carrier();
  const EndoOnLeibniz n = omni_nijenhuis(omni);
  const BracketTable table = omni.omni_table();
  const auto consequences = nijenhuis_consequences_check(table, n);
  const auto d = static_cast<std::uint64_t>(carrier.size());

  Check torsion("nijenhuis.torsion");
  torsion.cases = d * d;
  if (consequences.torsion) torsion.fail(pair_witness(carrier, *consequences.torsion));

  // Element-level route, independent of the tabulated torsion:
  // N({x,y}_N) = {Nx, Ny} with N(A+u) = ad_u.
  Check image("nijenhuis.image_identity");
  [&] {
    auto apply_n = [&](const OmniElement& x) { return OmniElement(omni.ad(x.wedge), WedgeVector(omni.dim(), omni.arity() - 1)); };
    const auto basis = carrier.basis();
    for (const auto& x : basis) {
      for (const auto& y : basis) {
        ++image.cases;
        const OmniElement deformed = omni_bracket(apply_n(x), y) + omni_bracket(x, apply_n(y)) - apply_n(omni_bracket(x, y));
        const OmniElement lhs = apply_n(deformed);
        const OmniElement rhs = omni_bracket(apply_n(x), apply_n(y));
        if (lhs != rhs) {
          image.fail({{"x", to_json(x)}, {"y", to_json(y)}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
          return;
        }
      }
    }
  }();

  Check deformed("nijenhuis.deformed_leibniz");
  deformed.cases = consequences.deformed.triples;
  if (!consequences.deformed.ok()) deformed.fail(triple_witness(carrier, *consequences.deformed.witness));

  Check morphism("nijenhuis.morphism");
  morphism.cases = d * d;
  if (consequences.morphism) morphism.fail(pair_witness(carrier, *consequences.morphism));

  Check sum("nijenhuis.sum_leibniz");
  sum.cases = consequences.sum.triples;
  if (!consequences.sum.ok()) sum.fail(triple_witness(carrier, *consequences.sum.witness));

  return {std::move(torsion), std::move(image), std::move(deformed), std::move(morphism), std::move(sum)};
}

std::vector<Check> deformation_identity_check(const NonabelianOmni& omni) {
  const auto& carrier = omni.carrier();
  const BracketTable omni_t = omni.omni_table();
  const BracketTable nonab_t = omni.nonabelian_table();
  const BracketTable sum_t = omni_t + deformed_bracket(omni_t, omni_nijenhuis(omni));

  Check sum("nonabelian.trivial_deformation");
  [&] {
    for (int i = 0; i < carrier.size(); ++i) {
      for (int j = 0; j < carrier.size(); ++j) {
        ++sum.cases;
        if (nonab_t.product(i, j) != sum_t.product(i, j)) {
          sum.fail({{"x", to_json(carrier.element(i))},
                    {"y", to_json(carrier.element(j))},
                    {"nonabelian", to_json(carrier.from_coordinates(nonab_t.product_dense(i, j)))},
                    {"omni_plus_deformed", to_json(carrier.from_coordinates(sum_t.product_dense(i, j)))}});
          return;
        }
      }
    }
  }();

  Check leib("nonabelian.leibniz");
  const auto r = leibniz_check(nonab_t);
  leib.cases = r.triples;
  if (!r.ok()) leib.fail(triple_witness(carrier, *r.witness));

  return {std::move(sum), std::move(leib)};
}

}  // namespace nlomni
