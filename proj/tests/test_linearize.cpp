#include <doctest.h>

#include "nlomni/fixtures.hpp"
#include "nlomni/linearize.hpp"

using namespace nlomni;

namespace {

Poly y(int m, int i) { return Poly::variable(m, i - 1); }

PolyMultiVec multivec(int m, WedgeIndex idx, const Poly& p) {
  PolyMultiVec w(m, static_cast<int>(idx.size()));
  for (int& i : idx) --i;
  w.add_term(std::move(idx), p);
  return w;
}

bool all_pass(const std::vector<Check>& checks) {
  bool ok = true;
  for (const auto& c : checks) {
    if (!c.passed()) {
      MESSAGE(c.id << ": " << c.note << " " << c.witness.dump());
      ok = false;
    }
  }
  return ok;
}

const Check& find(const std::vector<Check>& checks, std::string_view id) {
  for (const auto& c : checks)
    if (c.id == id) return c;
  FAIL("missing check " << id);
  return checks.front();
}

PolyVecField transposed_hat(const Endo& a) {
  Endo t(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) t(i, j) = a(j, i);
  return hat_endo(t);
}

}  // namespace

TEST_CASE("hat and bar maps") {
  CHECK(hat_endo(Endo(3)).is_zero());
  const auto euler = hat_endo(Endo::identity(3));
  for (int i = 0; i < 3; ++i) CHECK(euler[i] == y(3, i + 1));
  // Column j of A is the image of e_j: Â = Σ_i l_{A e_i} ∂_i.
  CHECK(hat_endo(Endo::unit(3, 1, 0))[0] == y(3, 2));

  CHECK(hat_wedge(WedgeVector(3, 2)).is_zero());
  const auto u = WedgeVector::basis(3, {0, 1});
  PolyForm dy12(3, 2);
  dy12.add_term({0, 1}, Poly::constant(3, 1));
  CHECK(hat_wedge(u) == dy12);
  CHECK(ext_d(hat_wedge(u)).is_zero());

  CHECK(bar_tensor(TensorPairValue(3, 1)).is_zero());
  PolyForm y1dy2(3, 1);
  y1dy2.add_term({1}, y(3, 1));
  CHECK(bar_tensor(TensorPairValue::basis(3, 0, {1})) == y1dy2);
}

TEST_CASE("phi round-trips and rejects non-linear sections") {
  const OmniCarrier carrier(3, 3);
  for (const auto& x : carrier.basis()) CHECK(phi_inverse(phi(x)) == x);
  auto s = phi(carrier.element(0));
  s.vec[0] = s.vec[0] * y(3, 2);
  CHECK_FALSE(phi_inverse(s).has_value());
  auto t = phi(carrier.element(0));
  t.vec[1] = t.vec[1] + Poly::constant(3, 1);
  CHECK_FALSE(phi_inverse(t).has_value());
  auto f = phi(carrier.element(carrier.size() - 1));
  f.form.add_term({0, 1}, y(3, 1));
  CHECK_FALSE(phi_inverse(f).has_value());
}

TEST_CASE("linear Nambu-Poisson tensor") {
  CHECK(linear_np(fixtures::abelian(3, 4)).is_zero());
  CHECK(linear_np(fixtures::fix_b()) == multivec(4, {1, 2, 3}, y(4, 4)));
  CHECK(linear_np(fixtures::heisenberg()) == multivec(3, {1, 2}, y(3, 3)));
  CHECK_THROWS_AS(linear_np(fixtures::fix_c_corrupted()), FundamentalIdentityError);
}

TEST_CASE("hat identities") {
  CHECK(all_pass(standard_hat_identities(2, 2)));
  CHECK(all_pass(standard_hat_identities(3, 3)));
  CHECK(all_pass(standard_hat_identities(4, 3)));
  for (const auto& c : standard_hat_identities(3, 3)) CHECK(c.cases > 0);

  SuiteConfig random;
  random.mode = SuiteConfig::Mode::random;
  random.samples = 50;
  CHECK(all_pass(standard_hat_identities(5, 4, random)));
}

TEST_CASE("transposed hat fails the vector bracket identity") {
  const auto checks = standard_hat_identities(3, 3, {}, transposed_hat);
  CHECK(find(checks, "hat.vector_bracket").failed());
}

TEST_CASE("standard linearization") {
  CHECK(all_pass(standard_linearization_suite(2, 2)));
  CHECK(all_pass(standard_linearization_suite(3, 2)));
  CHECK(all_pass(standard_linearization_suite(3, 3)));
  CHECK(all_pass(standard_linearization_suite(4, 3)));

  SuiteConfig random;
  random.mode = SuiteConfig::Mode::random;
  random.samples = 60;
  CHECK(all_pass(standard_linearization_suite(5, 3, random)));
}

TEST_CASE("linearization bracket detects a dropped Lie derivative term") {
  const auto checks = standard_linearization_suite(3, 3, {}, [](const GenSection& s, const GenSection& t) {
    return std_courant(s, t, 1u << 1);
  });
  CHECK(find(checks, "linearization.bracket").failed());
}

TEST_CASE("dropping i_Y dα is invisible on images of phi") {
  // Images of Φ carry constant forms, so dα = 0 and the term never fires.
  const auto checks = standard_linearization_suite(3, 3, {}, [](const GenSection& s, const GenSection& t) {
    return std_courant(s, t, 1u << 2);
  });
  CHECK(find(checks, "linearization.bracket").passed());
}

TEST_CASE("linear Nambu-Poisson identities") {
  for (const auto& g : {fixtures::fix_b(), fixtures::heisenberg(), fixtures::euclidean(3), fixtures::abelian(3, 4)}) {
    const auto checks = linear_np_identities(g);
    CHECK(checks.size() == 4);
    CHECK(all_pass(checks));
  }
  for (const auto& c : linear_np_identities(fixtures::fix_b())) CHECK(c.cases > 0);

  const auto g = fixtures::fix_b();
  const auto pi = linear_np(g);
  const OmniCarrier carrier(4, 3);
  for (const auto& x : carrier.basis()) {
    CHECK(rho_pi(pi, phi(x)) == hat_endo(x.endo) + hat_endo(ad(g, x.wedge)));
  }
}

TEST_CASE("nambu linearization") {
  for (const auto& named : fixtures::corpus()) {
    CAPTURE(named.name);
    const auto checks = nambu_linearization_suite(named.algebra);
    CHECK(checks.size() == 4);
    CHECK(all_pass(checks));
  }
}

TEST_CASE("using the omni bracket fails exactly for nonabelian algebras") {
  const OmniBracketOnG plain = [](const NonabelianOmni&, const OmniElement& x, const OmniElement& y) {
    return omni_bracket(x, y);
  };
  for (const auto& named : fixtures::corpus()) {
    CAPTURE(named.name);
    const auto checks = nambu_linearization_suite(named.algebra, {}, plain);
    REQUIRE(find(checks, "nambu_linearization.nambu_poisson").passed());
    CHECK(find(checks, "nambu_linearization.bracket").failed() == !named.algebra.is_abelian());
  }
}

TEST_CASE("abelian nambu linearization matches the standard suite case for case") {
  for (auto [m, n] : {std::pair{2, 2}, {3, 2}, {3, 3}, {4, 3}}) {
    CAPTURE(m);
    CAPTURE(n);
    const auto standard = standard_linearization_suite(m, n);
    const auto nambu = nambu_linearization_suite(fixtures::abelian(n, m));
    for (const auto* suffix : {"pairing", "bracket", "anchor"}) {
      const auto& a = find(standard, std::string("linearization.") + suffix);
      const auto& b = find(nambu, std::string("nambu_linearization.") + suffix);
      CHECK(a.status == b.status);
      CHECK(a.cases == b.cases);
    }
  }
}

TEST_CASE("non Nambu-Poisson linear tensors are skipped with a reason") {
  const auto g = fixtures::two_block();
  REQUIRE(fi_check(g).ok());
  for (const auto& checks : {linear_np_identities(g), nambu_linearization_suite(g)}) {
    CHECK(checks.size() == 4);
    CHECK(combined_status(checks) == Status::skip);
    for (const auto& c : checks) {
      CHECK(c.status == Status::skip);
      CHECK(c.note.find("not Nambu-Poisson") != std::string::npos);
    }
  }
  CHECK(linear_np_identities(g).front().note.find("witness") != std::string::npos);
}

TEST_CASE("every corpus algebra yields a Nambu-Poisson linear tensor") {
  for (const auto& named : fixtures::corpus()) {
    CAPTURE(named.name);
    CHECK(linear_np_identities(named.algebra).front().passed());
  }
}
