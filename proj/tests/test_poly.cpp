#include <doctest.h>

#include "nlomni/poly.hpp"
#include "nlomni/polycalc.hpp"
#include "nlomni/random.hpp"

using namespace nlomni;

namespace {

Poly y(int m, int i) { return Poly::variable(m, i - 1); }
Poly c(int m, const Scalar& v) { return Poly::constant(m, v); }

}  // namespace

TEST_CASE("poly arithmetic and printing") {
  const Poly p = Scalar(2) * (y(3, 1) * y(3, 1) * y(3, 3)) - c(3, Scalar(1, 2));
  CHECK(to_string(p) == "2*y1^2*y3 - 1/2");
  CHECK(p.degree() == 3);
  CHECK(to_string(Poly(3)) == "0");
  CHECK(Poly(3).degree() == -1);
  CHECK((p - p).is_zero());
  CHECK(c(2, 0).is_zero());
  CHECK(Poly::linear({1, 0, -2}) == y(3, 1) - Scalar(2) * y(3, 3));
}

TEST_CASE("poly derivative is the coordinate product rule") {
  const int m = 3;
  const Poly p = y(m, 1) * y(m, 1) * y(m, 2) + Scalar(3) * y(m, 3);
  CHECK(p.derivative(0) == Scalar(2) * (y(m, 1) * y(m, 2)));
  CHECK(p.derivative(1) == y(m, 1) * y(m, 1));
  CHECK(p.derivative(2) == c(m, 3));
}

TEST_CASE("random polys form a commutative ring with Leibniz derivatives") {
  SeededRng rng(7, "poly-ring");
  for (int s = 0; s < 50; ++s) {
    const Poly a = random_poly(3, 2, rng), b = random_poly(3, 2, rng), d = random_poly(3, 2, rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    for (int i = 0; i < 3; ++i) CHECK((a * b).derivative(i) == a.derivative(i) * b + a * b.derivative(i));
  }
}

TEST_CASE("degree guard throws past the cap") {
  const int m = 2;
  Poly p = y(m, 1);
  for (int k = 1; k < 12; ++k) p = p * y(m, 1);
  CHECK(p.degree() == 12);
  CHECK_THROWS_AS(p * y(m, 2), DegreeOverflow);
  {
    DegreeCap cap(3);
    CHECK(max_degree() == 3);
    CHECK_NOTHROW(y(m, 1) * y(m, 1) * y(m, 2));
    try {
      (void)(y(m, 1) * y(m, 1) * y(m, 1) * y(m, 2));
      FAIL("expected DegreeOverflow");
    } catch (const DegreeOverflow& e) {
      CHECK(e.degree() == 4);
      CHECK(e.cap() == 3);
    }
  }
  CHECK(max_degree() == 12);
}

TEST_CASE("mismatched variable counts are rejected") {
  CHECK_THROWS_AS(y(2, 1) + y(3, 1), std::invalid_argument);
}
