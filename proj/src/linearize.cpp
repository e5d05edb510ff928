#include "nlomni/linearize.hpp"

#include "nlomni/serialize.hpp"

namespace nlomni {

PolyVecField hat_endo(const Endo& a) {
  PolyVecField x(a.dim());
  for (int i = 0; i < a.dim(); ++i) x[i] = Poly::linear(a.column(i));
  return x;
}

PolyForm hat_wedge(const WedgeVector& u) {
  PolyForm w(u.dim(), u.grade());
  for (const auto& [idx, c] : u.terms()) w.add_term(idx, Poly::constant(u.dim(), c));
  return w;
}

PolyForm bar_tensor(const TensorPairValue& t) {
  PolyForm w(t.dim(), t.wedge_grade());
  for (const auto& [key, c] : t.terms()) w.add_term(key.second, c * Poly::variable(t.dim(), key.first));
  return w;
}

GenSection phi(const OmniElement& x) { return {hat_endo(x.endo), hat_wedge(x.wedge)}; }

std::optional<OmniElement> phi_inverse(const GenSection& s) {
  const int m = s.dim();
  Endo a(m);
  for (int i = 0; i < m; ++i) {
    for (const auto& [e, c] : s.vec[i].terms()) {
      int k = -1;
      int degree = 0;
      for (int v = 0; v < m; ++v) {
        degree += e[static_cast<std::size_t>(v)];
        if (e[static_cast<std::size_t>(v)] == 1) k = v;
      }
      if (degree != 1) return std::nullopt;
      a(k, i) = c.to_scalar();
    }
  }
  WedgeVector u(m, s.form.grade());
  for (const auto& [idx, p] : s.form.terms()) {
    if (p.degree() != 0) return std::nullopt;
    u.add_term(idx, p.terms().begin()->second.to_scalar());
  }
  return OmniElement(std::move(a), std::move(u));
}

PolyMultiVec linear_np(const NLieAlgebra& g) {
  require_fi(g);
  PolyMultiVec pi(g.dim(), g.arity());
  for (const auto& [idx, v] : g.constants()) pi.add_term(idx, Poly::linear(v));
  return pi;
}

namespace {

bool hat_exhaustive(int dim, int arity, const SuiteConfig& config) {
  return config.mode == SuiteConfig::Mode::exhaustive && dim <= 4 && arity <= 3;
}

bool linearization_exhaustive(int dim, int arity, const SuiteConfig& config) {
  if (config.mode != SuiteConfig::Mode::exhaustive) return false;
  return (arity == 3 && dim <= 4) || (arity == 2 && dim <= 3);
}

// Visits index pairs (i, j) in [0, a) × [0, b): all of them in order, or
// config.samples seeded draws. Stops when visit returns false.
template <class Visit>
void for_pairs(int a, int b, bool exhaustive, const SuiteConfig& config, std::string_view stream, Visit visit) {
  if (exhaustive) {
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j)
        if (!visit(i, j)) return;
    return;
  }
  SeededRng rng(config.seed, stream);
  for (int s = 0; s < config.samples; ++s) {
    const int i = rng.uniform(0, a - 1);
    const int j = rng.uniform(0, b - 1);
    if (!visit(i, j)) return;
  }
}

GenSection vector_only(PolyVecField x, int arity) {
  const int m = x.dim();
  return {std::move(x), PolyForm(m, arity - 1)};
}

GenSection form_only(PolyForm w) {
  const int m = w.dim();
  return {PolyVecField(m), std::move(w)};
}

// Gate shared by the Nambu-Poisson suites. Returns the structure, or fills
// `out` with the skipped checks.
std::optional<NambuPoisson> gate(const NLieAlgebra& g, const SuiteConfig& config, const std::string& prefix,
                                 const std::vector<std::string>& ids, std::vector<Check>& out) {
  auto result = nambu_poisson_check(linear_np(g), config);
  Check np(prefix + ".nambu_poisson");
  np.cases = result.check.cases;
  if (result.structure) {
    np.note = result.check.note;
    out.push_back(std::move(np));
    return std::move(result.structure);
  }
  const std::string reason = "linear n-vector field of the algebra is not Nambu-Poisson";
  np.skip(reason + "; witness " + result.check.witness.dump());
  out.push_back(std::move(np));
  for (const auto& id : ids) {
    Check c(id);
    c.skip(reason);
    out.push_back(std::move(c));
  }
  return std::nullopt;
}

}  // namespace

std::vector<Check> standard_hat_identities(int dim, int arity, const SuiteConfig& config, const HatEndoFn& hat) {
  const bool exhaustive = hat_exhaustive(dim, arity, config);
  const auto wedges = wedge_basis(dim, arity - 1);
  const int endos = dim * dim;
  const int nw = static_cast<int>(wedges.size());
  auto endo = [&](int k) { return Endo::unit(dim, k / dim, k % dim); };
  auto wedge_el = [&](int k) { return WedgeVector::basis(dim, wedges[static_cast<std::size_t>(k)]); };

  Check pairing("hat.pairing");
  Check dpair("hat.pairing_differential");
  Check lie("hat.lie_derivative");
  for_pairs(endos, nw, exhaustive, config, "hat.endo_wedge", [&](int i, int j) {
    const Endo a = endo(i);
    const WedgeVector u = wedge_el(j);
    const GenSection sa = vector_only(hat(a), arity);
    const GenSection su = form_only(hat_wedge(u));
    const PolyForm geometric = std_pairing(sa, su);
    const WedgeVector la_u = endo_derivation(a, u);
    const nlohmann::json where{{"A", to_json(a)}, {"u", to_json(u)}};

    ++pairing.cases;
    const PolyForm algebraic = bar_tensor(omni_pairing(OmniElement(a, WedgeVector(dim, arity - 1)), OmniElement(Endo(dim), u)));
    if (geometric != algebraic && !pairing.failed()) {
      auto w = where;
      w["geometric"] = to_json(geometric);
      w["algebraic"] = to_json(algebraic);
      pairing.fail(w);
    }
    ++dpair.cases;
    if (ext_d(geometric) != hat_wedge(la_u) && !dpair.failed()) {
      auto w = where;
      w["d_pairing"] = to_json(ext_d(geometric));
      w["hat_L_A_u"] = to_json(la_u);
      dpair.fail(w);
    }
    ++lie.cases;
    const PolyForm l = lie_form(hat(a), hat_wedge(u));
    if (l != hat_wedge(la_u) && !lie.failed()) {
      auto w = where;
      w["lie_derivative"] = to_json(l);
      w["hat_L_A_u"] = to_json(la_u);
      lie.fail(w);
    }
    return !(pairing.failed() && dpair.failed() && lie.failed());
  });

  Check vb("hat.vector_bracket");
  for_pairs(endos, endos, exhaustive, config, "hat.endo_endo", [&](int i, int j) {
    ++vb.cases;
    const Endo a = endo(i), b = endo(j);
    const PolyVecField lhs = vf_bracket(hat(a), hat(b));
    const PolyVecField rhs = hat(commutator(a, b));
    if (lhs == rhs) return true;
    vb.fail({{"A", to_json(a)}, {"B", to_json(b)}, {"bracket_of_hats", to_json(lhs)}, {"hat_of_commutator", to_json(rhs)}});
    return false;
  });
  return {std::move(pairing), std::move(dpair), std::move(lie), std::move(vb)};
}

std::vector<Check> standard_linearization_suite(int dim, int arity, const SuiteConfig& config, const SectionBracketFn& bracket) {
  const SectionBracketFn br = bracket ? bracket : SectionBracketFn([](const GenSection& s, const GenSection& t) { return std_courant(s, t); });
  const bool exhaustive = linearization_exhaustive(dim, arity, config);
  const OmniCarrier carrier(dim, arity);
  const auto basis = carrier.basis();
  const int d = carrier.size();

  Check round("linearization.roundtrip");
  {
    // Basis elements, then one element with distinct coefficients everywhere.
    std::vector<OmniElement> probes = basis;
    Vector c(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) c[static_cast<std::size_t>(k)] = k + 1;
    probes.push_back(carrier.from_coordinates(c));
    for (const auto& x : probes) {
      ++round.cases;
      const auto back = phi_inverse(phi(x));
      if (!back || *back != x) {
        round.fail({{"x", to_json(x)}, {"image", to_json(phi(x))}});
        break;
      }
    }
  }

  Check pairing("linearization.pairing");
  Check brk("linearization.bracket");
  for_pairs(d, d, exhaustive, config, "linearization.pairs", [&](int i, int j) {
    const auto& x = basis[static_cast<std::size_t>(i)];
    const auto& y = basis[static_cast<std::size_t>(j)];
    const GenSection px = phi(x), py = phi(y);
    ++pairing.cases;
    const PolyForm gp = std_pairing(px, py);
    const PolyForm ap = bar_tensor(omni_pairing(x, y));
    if (gp != ap && !pairing.failed()) {
      pairing.fail({{"x", to_json(x)}, {"y", to_json(y)}, {"geometric", to_json(gp)}, {"algebraic", to_json(ap)}});
    }
    ++brk.cases;
    const GenSection gb = br(px, py);
    const GenSection ab = phi(omni_bracket(x, y));
    if (gb != ab && !brk.failed()) {
      brk.fail({{"x", to_json(x)}, {"y", to_json(y)}, {"geometric", to_json(gb)}, {"algebraic", to_json(ab)}});
    }
    return !(pairing.failed() && brk.failed());
  });

  Check anchor("linearization.anchor");
  const auto tensors = TensorPairValue::basis_of(dim, arity - 2);
  for_pairs(d, static_cast<int>(tensors.size()), exhaustive, config, "linearization.anchor", [&](int i, int j) {
    ++anchor.cases;
    const auto& x = basis[static_cast<std::size_t>(i)];
    const auto& w = tensors[static_cast<std::size_t>(j)];
    const PolyForm lhs = lie_form(phi(x).vec, bar_tensor(w));
    const PolyForm rhs = bar_tensor(rho_v(x, w));
    if (lhs == rhs) return true;
    anchor.fail({{"x", to_json(x)}, {"w", to_json(w)}, {"geometric", to_json(lhs)}, {"algebraic", to_json(rhs)}});
    return false;
  });
  return {std::move(round), std::move(pairing), std::move(brk), std::move(anchor)};
}

std::vector<Check> linear_np_identities(const NLieAlgebra& g, const SuiteConfig& config) {
  std::vector<Check> out;
  const auto np = gate(g, config, "linear_np", {"linear_np.sharp", "linear_np.form_bracket", "linear_np.sharp_lie"}, out);
  if (!np) return out;
  const PolyMultiVec& pi = np->tensor();
  const int m = g.dim();
  const auto wedges = wedge_basis(m, g.arity() - 1);

  Check sh("linear_np.sharp");
  for (const auto& idx : wedges) {
    ++sh.cases;
    const auto u = WedgeVector::basis(m, idx);
    const PolyVecField lhs = sharp(pi, hat_wedge(u));
    const PolyVecField rhs = hat_endo(ad(g, u));
    if (lhs != rhs) {
      sh.fail({{"u", to_json(u)}, {"sharp", to_json(lhs)}, {"hat_ad", to_json(rhs)}});
      break;
    }
  }
  out.push_back(std::move(sh));

  Check fb("linear_np.form_bracket");
  [&] {
    for (const auto& i : wedges) {
      for (const auto& j : wedges) {
        ++fb.cases;
        const auto u = WedgeVector::basis(m, i), v = WedgeVector::basis(m, j);
        const PolyForm lhs = np_form_bracket(*np, hat_wedge(u), hat_wedge(v));
        const PolyForm rhs = hat_wedge(fo_compose(g, u, v));
        if (lhs != rhs) {
          fb.fail({{"u", to_json(u)}, {"v", to_json(v)}, {"form_bracket", to_json(lhs)}, {"hat_compose", to_json(rhs)}});
          return;
        }
      }
    }
  }();
  out.push_back(std::move(fb));

  Check sl("linear_np.sharp_lie");
  [&] {
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) {
        const Endo a = Endo::unit(m, r, c);
        for (const auto& idx : wedges) {
          ++sl.cases;
          const auto u = WedgeVector::basis(m, idx);
          const PolyVecField lhs = sharp(pi, lie_form(hat_endo(a), hat_wedge(u)));
          const PolyVecField rhs = hat_endo(ad(g, endo_derivation(a, u)));
          if (lhs != rhs) {
            sl.fail({{"A", to_json(a)}, {"u", to_json(u)}, {"sharp_lie", to_json(lhs)}, {"hat_ad", to_json(rhs)}});
            return;
          }
        }
      }
    }
  }();
  out.push_back(std::move(sl));
  return out;
}

std::vector<Check> nambu_linearization_suite(const NLieAlgebra& g, const SuiteConfig& config, const OmniBracketOnG& bracket) {
  const NonabelianOmni omni(g);
  std::vector<Check> out;
  const auto np = gate(g, config, "nambu_linearization",
                       {"nambu_linearization.pairing", "nambu_linearization.bracket", "nambu_linearization.anchor"}, out);
  if (!np) return out;
  const OmniBracketOnG br = bracket ? bracket : OmniBracketOnG(nonabelian_bracket);
  const PolyMultiVec& pi = np->tensor();
  const auto basis = omni.carrier().basis();

  Check pairing("nambu_linearization.pairing");
  Check brk("nambu_linearization.bracket");
  [&] {
    for (const auto& x : basis) {
      for (const auto& y : basis) {
        const GenSection px = phi(x), py = phi(y);
        ++pairing.cases;
        const PolyForm gp = std_pairing(px, py);
        const PolyForm ap = bar_tensor(omni_pairing(x, y));
        if (gp != ap && !pairing.failed()) {
          pairing.fail({{"x", to_json(x)}, {"y", to_json(y)}, {"geometric", to_json(gp)}, {"algebraic", to_json(ap)}});
        }
        ++brk.cases;
        const GenSection gb = pi_courant(*np, px, py);
        const GenSection ab = phi(br(omni, x, y));
        if (gb != ab && !brk.failed()) {
          brk.fail({{"x", to_json(x)}, {"y", to_json(y)}, {"geometric", to_json(gb)}, {"algebraic", to_json(ab)}});
        }
        if (pairing.failed() && brk.failed()) return;
      }
    }
  }();
  out.push_back(std::move(pairing));
  out.push_back(std::move(brk));

  Check anchor("nambu_linearization.anchor");
  [&] {
    for (const auto& x : basis) {
      for (const auto& w : TensorPairValue::basis_of(g.dim(), g.arity() - 2)) {
        ++anchor.cases;
        const PolyForm lhs = lie_form(rho_pi(pi, phi(x)), bar_tensor(w));
        const PolyForm rhs = bar_tensor(omni.rho(x, w));
        if (lhs != rhs) {
          anchor.fail({{"x", to_json(x)}, {"w", to_json(w)}, {"geometric", to_json(lhs)}, {"algebraic", to_json(rhs)}});
          return;
        }
      }
    }
  }();
  out.push_back(std::move(anchor));
  return out;
}

}  // namespace nlomni
