#include <doctest.h>

#include "nlomni/fixtures.hpp"
#include "nlomni/nlie.hpp"
#include "nlomni/random.hpp"

using namespace nlomni;

namespace {

WedgeVector e(int dim, WedgeIndex idx) { return WedgeVector::basis(dim, std::move(idx)); }

std::vector<Vector> units(int dim, const WedgeIndex& idx) {
  std::vector<Vector> out;
  for (int i : idx) out.push_back(unit_vector(dim, i));
  return out;
}

// FI over all ordered basis tuples (no skew-symmetry shortcut).
bool oracle_fi(const NLieAlgebra& g) {
  const int m = g.dim();
  const int n = g.arity();
  std::vector<int> u(static_cast<std::size_t>(n - 1)), v(static_cast<std::size_t>(n));
  const auto total_u = static_cast<long>(std::pow(m, n - 1));
  const auto total_v = static_cast<long>(std::pow(m, n));
  for (long a = 0; a < total_u; ++a) {
    long t = a;
    for (auto& x : u) x = static_cast<int>(t % m), t /= m;
    for (long b = 0; b < total_v; ++b) {
      long s = b;
      for (auto& x : v) x = static_cast<int>(s % m), s /= m;
      auto args = units(m, u);
      args.push_back(g.bracket(units(m, v)));
      Vector lhs = g.bracket(args);
      for (std::size_t i = 0; i < v.size(); ++i) {
        auto inner = units(m, u);
        inner.push_back(unit_vector(m, v[i]));
        auto outer = units(m, v);
        outer[i] = g.bracket(inner);
        lhs = lhs - g.bracket(outer);
      }
      if (!is_zero(lhs)) return false;
    }
  }
  return true;
}

NLieAlgebra fix_c_flipped() {
  auto g = fixtures::fix_c();
  g.set_bracket({1, 2, 3}, unit_vector(4, 0));
  return g;
}

NLieAlgebra fix_c_bad() { return fixtures::fix_c_corrupted(); }

NLieAlgebra perturb(const NLieAlgebra& g, SeededRng& rng) {
  NLieAlgebra out = g;
  const auto tuples = wedge_basis(g.dim(), g.arity());
  const auto& args = tuples[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(tuples.size()) - 1))];
  Vector v = g.bracket_basis(args);
  v[static_cast<std::size_t>(rng.uniform(0, g.dim() - 1))] += rng.uniform(1, 3);
  out.set_bracket(args, v);
  return out;
}

bool action_identity(const NLieAlgebra& g) {
  const auto basis = wedge_basis(g.dim(), g.arity() - 1);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      const auto u = e(g.dim(), a), v = e(g.dim(), b);
      if (commutator(ad(g, u), ad(g, v)) != ad(g, fo_compose(g, u, v))) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("bracket evaluation") {
  const auto g = fixtures::fix_b();
  CHECK(g.bracket_basis({0, 1, 2}) == unit_vector(4, 3));
  CHECK(g.bracket_basis({1, 0, 2}) == Scalar(-1) * unit_vector(4, 3));
  CHECK(is_zero(g.bracket_basis({0, 0, 2})));
  const std::vector<Vector> args{unit_vector(4, 0) + unit_vector(4, 1), unit_vector(4, 1), Scalar(3) * unit_vector(4, 2)};
  CHECK(g.bracket(args) == Scalar(3) * unit_vector(4, 3));
  CHECK_THROWS_AS(g.bracket_basis({0, 1}), DimensionMismatch);
  NLieAlgebra h(3, 4);
  CHECK_THROWS_AS(h.set_bracket({1, 0, 2}, unit_vector(4, 0)), std::invalid_argument);
}

TEST_CASE("fi_check examples") {
  CHECK(fi_check(fixtures::abelian(3, 4)).ok());
  CHECK(fi_check(fixtures::fix_c()).ok());
  CHECK(oracle_fi(fixtures::fix_c()));
  const auto r = fi_check(fix_c_bad());
  REQUIRE_FALSE(r.ok());
  CHECK(!is_zero(r.violations.front().defect));
  CHECK_FALSE(oracle_fi(fix_c_bad()));
  CHECK(fi_check(fix_c_bad(), FIMode::exhaustive).violations.size() > 1);
  CHECK_THROWS_AS(require_fi(fix_c_bad()), FundamentalIdentityError);
}

TEST_CASE("a single sign flip of FIX-C is still a 3-Lie algebra") {
  // Changes the signature of the invariant metric, not the identity.
  CHECK(fi_check(fix_c_flipped()).ok());
  CHECK(oracle_fi(fix_c_flipped()));
}

TEST_CASE("corpus passes the Fundamental Identity") {
  for (const auto& [name, g] : fixtures::corpus()) {
    CAPTURE(name);
    CHECK(fi_check(g).ok());
    CHECK(oracle_fi(g));
  }
  CHECK(fixtures::fix_c() == fixtures::euclidean(3));
}

TEST_CASE("ad examples") {
  const auto b = fixtures::fix_b();
  CHECK(ad(b, e(4, {0, 1})) == Endo::unit(4, 3, 2));
  CHECK(ad(b, e(4, {0, 0})).is_zero());
  const Endo a = ad(fixtures::fix_c(), e(4, {1, 2}));
  CHECK(a.apply(unit_vector(4, 0)) == unit_vector(4, 3));
  CHECK(a.apply(unit_vector(4, 3)) == Scalar(-1) * unit_vector(4, 0));
}

TEST_CASE("fo_compose examples") {
  const auto b = fixtures::fix_b();
  CHECK(fo_compose(b, e(4, {0, 1}), e(4, {0, 2})) == e(4, {0, 3}));
  CHECK(fo_compose(b, e(4, {0, 1}), e(4, {0, 1})).is_zero());
  CHECK(fo_compose(b, e(4, {2, 3}), e(4, {0, 1})).is_zero());
}

TEST_CASE("induced_leibniz examples") {
  CHECK(induced_leibniz(fixtures::abelian(3, 4)).is_zero());
  const auto t = induced_leibniz(fixtures::fix_b());
  // basis of ∧²: 12,13,14,23,24,34 → (e1∧e2)∘(e1∧e3) = e1∧e4
  CHECK(t.product_dense(0, 1) == unit_vector(6, 2));
  CHECK(leibniz_check(induced_leibniz(fixtures::fix_c())).ok());
  CHECK_THROWS_AS(induced_leibniz(fix_c_bad()), FundamentalIdentityError);
}

TEST_CASE("FI holds iff the induced product is Leibniz and acts by derivations") {
  SeededRng rng(42, "fi-leibniz");
  auto corpus = fixtures::corpus();
  int failing = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto& base = corpus[static_cast<std::size_t>(trial) % corpus.size()].algebra;
    const auto g = perturb(base, rng);
    const bool fi = fi_check(g).ok();
    CHECK(fi == oracle_fi(g));
    const bool leib = leibniz_check(induced_leibniz_unchecked(g)).ok();
    const bool act = action_identity(g);
    CHECK(fi == act);
    if (fi) CHECK(leib);
    if (g.arity() == 2) CHECK(fi == leib);
    if (!fi) ++failing;
  }
  CHECK(failing > 0);
  for (const auto& [name, g] : corpus) {
    CAPTURE(name);
    CHECK(leibniz_check(induced_leibniz(g)).ok());
    CHECK(action_identity(g));
  }
}

TEST_CASE("ad is a derivation for every fixture") {
  for (const auto& [name, g] : fixtures::corpus()) {
    CAPTURE(name);
    for (const auto& u : wedge_basis(g.dim(), g.arity() - 1)) CHECK(is_derivation(g, ad(g, e(g.dim(), u))));
  }
}

TEST_CASE("derivation algebras") {
  CHECK(derivation_basis(fixtures::abelian(2, 3)).size() == 9);
  CHECK(derivation_basis(fixtures::sl2()).size() == 3);
  CHECK(derivation_basis(fixtures::heisenberg()).size() == 6);
  CHECK(derivation_basis(fixtures::euclidean(2)).size() == 3);
  CHECK(derivation_basis(fixtures::fix_c()).size() == 6);
  for (const auto& [name, g] : fixtures::corpus()) {
    CAPTURE(name);
    for (const auto& a : derivation_basis(g)) CHECK(is_derivation(g, a));
  }
}

TEST_CASE("change of basis preserves the Fundamental Identity") {
  SeededRng rng(9, "change-basis");
  for (const auto& [name, g] : fixtures::corpus()) {
    Endo p = Endo::identity(g.dim());
    for (int i = 0; i < g.dim(); ++i)
      for (int j = i + 1; j < g.dim(); ++j) p(i, j) = rng.coefficient();
    const auto h = change_basis(g, p);
    CAPTURE(name);
    CHECK(fi_check(h).ok());
    CHECK(change_basis(h, *inverse(p)) == g);
  }
}
