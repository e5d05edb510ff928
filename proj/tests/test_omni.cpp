#include <doctest.h>

#include "nlomni/fixtures.hpp"
#include "nlomni/omni.hpp"
#include "nlomni/random.hpp"

using namespace nlomni;

namespace {

WedgeVector e(int dim, WedgeIndex idx) { return WedgeVector::basis(dim, std::move(idx)); }

bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.passed()) {
      MESSAGE(c.id << ": " << c.witness.dump());
      return false;
    }
  }
  return true;
}

Endo random_endo(int dim, SeededRng& rng) {
  Endo a(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = rng.coefficient();
  return a;
}

SkewMap random_skew(int arity, int dim, SeededRng& rng) {
  SkewMap f(arity, dim);
  for (const auto& args : wedge_basis(dim, arity)) {
    if (!rng.coin()) continue;
    Vector v = zero_vector(dim);
    v[static_cast<std::size_t>(rng.uniform(0, dim - 1))] = rng.coefficient();
    f.set_bracket(args, v);
  }
  return f;
}

}  // namespace

TEST_CASE("omni bracket for n = 2 is [A,B] + Av") {
  SeededRng rng(1, "omni-n2");
  const Endo a = random_endo(3, rng), b = random_endo(3, rng);
  const Vector u{1, -2, 3}, v{0, 2, -1};
  const OmniElement x{a, WedgeVector::from_vector(u)}, y{b, WedgeVector::from_vector(v)};
  const auto r = omni_bracket(x, y);
  CHECK(r.endo == a * b - b * a);
  CHECK(r.wedge == WedgeVector::from_vector(a.apply(v)));

  TensorPairValue expected(3, 0);
  expected.add_product(a.apply(v) + b.apply(u), {}, 1);
  CHECK(omni_pairing(x, y) == expected);
}

TEST_CASE("omni bracket examples") {
  const OmniElement u{Endo(3), e(3, {0, 1})}, v{Endo(3), e(3, {1, 2})};
  CHECK(omni_bracket(u, v) == OmniElement::zero(3, 3));
  const OmniElement a{Endo::identity(2), WedgeVector(2, 2)}, w{Endo(2), e(2, {0, 1})};
  CHECK(omni_bracket(a, w) == OmniElement{Endo(2), Scalar(2) * e(2, {0, 1})});
  CHECK_THROWS_AS(omni_bracket(a, OmniElement::zero(3, 3)), DimensionMismatch);
}

TEST_CASE("omni pairing examples") {
  const OmniElement x{Endo(3), e(3, {0, 1})};
  CHECK(omni_pairing(x, x).is_zero());
  const OmniElement a{Endo::diagonal({5, 7, 11}), WedgeVector(3, 2)};
  TensorPairValue expected(3, 1);
  expected.add_term(0, {1}, 5);
  expected.add_term(1, {0}, -7);
  CHECK(omni_pairing(a, x) == expected);
  CHECK(omni_pairing(x, a) == expected);
}

TEST_CASE("carrier coordinates round-trip") {
  const OmniCarrier c(3, 3);
  CHECK(c.size() == 12);
  for (int k = 0; k < c.size(); ++k) CHECK(c.coordinates(c.element(k)) == unit_vector(c.size(), k));
  CHECK(c.element(1).endo == Endo::unit(3, 0, 1));
  CHECK(c.element(9).wedge == e(3, {0, 1}));
}

TEST_CASE("omni Leibniz and compatibility, exhaustive") {
  for (auto [dim, n] : {std::pair{2, 2}, {3, 2}, {3, 3}, {2, 3}}) {
    CAPTURE(dim);
    CAPTURE(n);
    CHECK(omni_leibniz_check(dim, n).passed());
    CHECK(omni_compat_check(dim, n).passed());
  }
  SuiteConfig random;
  random.mode = SuiteConfig::Mode::random;
  random.samples = 20;
  CHECK(omni_compat_check(4, 3, random).passed());
}

TEST_CASE("dropping the derivation term breaks compatibility") {
  const OmniBracketFn broken = [](const OmniElement& x, const OmniElement& y) {
    return OmniElement{commutator(x.endo, y.endo), WedgeVector(y.dim(), y.arity() - 1)};
  };
  const auto c = omni_compat_check(3, 3, {}, broken);
  CHECK(c.failed());
  CHECK(c.witness.contains("lhs"));
}

TEST_CASE("graph criterion matches the Fundamental Identity") {
  CHECK(graph_test(SkewMap(3, 4)).passed());
  for (const auto& [name, g] : fixtures::corpus()) {
    CAPTURE(name);
    CHECK(graph_test(g).passed());
  }
  CHECK(graph_test(fixtures::fix_c_corrupted()).failed());
  CHECK_FALSE(fi_check(fixtures::fix_c_corrupted()).ok());

  SeededRng rng(42, "graph");
  int pass = 0, fail = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.uniform(2, 3);
    const int dim = rng.uniform(n, 4);
    const auto f = random_skew(n, dim, rng);
    const bool graph = graph_test(f).passed();
    CHECK(graph == fi_check(f).ok());
    (graph ? pass : fail) += 1;
  }
  CHECK(pass > 0);
  CHECK(fail > 0);
}

TEST_CASE("nonabelian bracket examples") {
  const NonabelianOmni ab(fixtures::abelian(3, 4));
  SeededRng rng(2, "nonabelian");
  const OmniElement x{random_endo(4, rng), e(4, {0, 2})}, y{random_endo(4, rng), e(4, {1, 3})};
  CHECK(ab.bracket(x, y) == omni_bracket(x, y));

  const NonabelianOmni b(fixtures::fix_b());
  const OmniElement p{Endo(4), e(4, {0, 1})}, q{Endo(4), e(4, {0, 2})};
  CHECK(b.bracket(p, q) == OmniElement{Endo(4), e(4, {0, 3})});

  // {x, x}_g = −ad_{L_A u} + L_A u + u∘u
  const OmniElement z{random_endo(4, rng), e(4, {0, 1}) + e(4, {2, 3})};
  const auto la_u = endo_derivation(z.endo, z.wedge);
  const auto r = b.bracket(z, z);
  CHECK(r.endo == Scalar(-1) * ad(fixtures::fix_b(), la_u));
  CHECK(r.wedge == la_u + fo_compose(fixtures::fix_b(), z.wedge, z.wedge));

  CHECK_THROWS_AS(NonabelianOmni{fixtures::fix_c_corrupted()}, FundamentalIdentityError);
}

TEST_CASE("nonabelian suites on the corpus") {
  for (const auto& [name, g] : fixtures::corpus()) {
    if (g.dim() > 4) continue;
    CAPTURE(name);
    const NonabelianOmni omni(g);
    CHECK(all_pass(nonabelian_compat_check(omni)));
    CHECK(all_pass(nijenhuis_suite(omni)));
    CHECK(all_pass(deformation_identity_check(omni)));
  }
}

TEST_CASE("Nijenhuis operator") {
  CHECK(omni_nijenhuis(NonabelianOmni(fixtures::abelian(2, 3))).is_zero());
  const NonabelianOmni b(fixtures::fix_b());
  const auto n = omni_nijenhuis(b);
  CHECK(first_nonzero(nijenhuis_torsion(b.omni_table(), n)) == std::nullopt);
  // N(e1∧e2) = ad_{e1∧e2} = E_43
  const int k = b.carrier().endo_count();
  CHECK(b.carrier().from_coordinates(n.column(k)).endo == Endo::unit(4, 3, 2));
}

TEST_CASE("correction terms cancel for n = 2") {
  // (C(A,v), w)_+ + (v, C(A,w))_+ = C(A,v)w + C(A,w)v vanishes by skew-symmetry.
  const NonabelianOmni omni(fixtures::sl2());
  const auto basis = omni.carrier().basis();
  for (const auto& e1 : basis)
    for (const auto& e2 : basis)
      for (const auto& e3 : basis) {
        const auto lhs = omni.rho(e1, omni_pairing(e2, e3));
        const auto rhs = omni_pairing(omni.bracket(e1, e2), e3) + omni_pairing(e2, omni.bracket(e1, e3));
        REQUIRE(lhs == rhs);
      }
}

TEST_CASE("uncorrected compatibility fails outside Der(g) for n = 3") {
  const NonabelianOmni omni(fixtures::fix_c());
  const auto basis = omni.carrier().basis();
  bool broken = false;
  for (const auto& e1 : basis) {
    for (const auto& e2 : basis) {
      for (const auto& e3 : basis) {
        const auto lhs = omni.rho(e1, omni_pairing(e2, e3));
        const auto rhs = omni_pairing(omni.bracket(e1, e2), e3) + omni_pairing(e2, omni.bracket(e1, e3));
        if (lhs != rhs) broken = true;
      }
    }
    if (broken) break;
  }
  CHECK(broken);
}
