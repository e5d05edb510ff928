#include <doctest.h>

#include <limits>

#include "nlomni/coef.hpp"
#include "nlomni/random.hpp"

using namespace nlomni;

namespace {

constexpr std::int64_t max64 = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t min64 = std::numeric_limits<std::int64_t>::min();

// Values straddling the inline range, with and without denominators.
std::vector<Scalar> edge_values() {
  std::vector<Scalar> out;
  for (long v : {0L, 1L, -1L, 2L, -3L, 7L, max64, min64, max64 - 1, min64 + 1}) out.emplace_back(v);
  out.emplace_back(1, 3);
  out.emplace_back(-5, 7);
  out.emplace_back(mpz_class(max64), mpz_class(2));
  out.emplace_back(mpz_class(1), mpz_class(max64));
  out.emplace_back(mpz_class(min64), mpz_class(3));
  Scalar huge(mpz_class(max64) * mpz_class(max64), mpz_class(5));
  huge.canonicalize();
  out.push_back(huge);
  out.push_back(-huge);
  return out;
}

}  // namespace

TEST_CASE("coef arithmetic on small values") {
  const Coef a(3), b(Scalar(1, 2));
  CHECK((a + b).to_scalar() == Scalar(7, 2));
  CHECK((a * b).to_scalar() == Scalar(3, 2));
  CHECK((b - b).is_zero());
  CHECK((-b).sign() == -1);
  CHECK(Coef(Scalar(6, 4)) == Coef(Scalar(3, 2)));
  CHECK(Coef(Scalar(4, 2)) == Coef(2));
  CHECK(Coef().is_zero());
}

TEST_CASE("coef overflow promotes and cancellation demotes") {
  const Coef big = Coef(max64) + Coef(1);
  CHECK(big.to_scalar() == Scalar(mpz_class(max64) + 1));
  const Coef back = big - Coef(1);
  CHECK(back == Coef(max64));
  CHECK((Coef(min64) * Coef(-1)).to_scalar() == -Scalar(mpz_class(min64)));
  CHECK((-Coef(min64)).to_scalar() == -Scalar(mpz_class(min64)));
  const Coef sq = Coef(max64) * Coef(max64);
  CHECK((sq * Coef(Scalar(mpz_class(1), mpz_class(max64)))) == Coef(max64));
  const Coef frac(Scalar(mpz_class(1), mpz_class(max64)));
  CHECK((frac * frac).to_scalar() == Scalar(mpz_class(1), mpz_class(max64) * mpz_class(max64)));
}

TEST_CASE("coef agrees with GMP rationals on random edge combinations") {
  const auto pool = edge_values();
  SeededRng rng(11, "coef");
  const int last = static_cast<int>(pool.size()) - 1;
  for (int s = 0; s < 2000; ++s) {
    const Scalar& x = pool[static_cast<std::size_t>(rng.uniform(0, last))];
    const Scalar& y = pool[static_cast<std::size_t>(rng.uniform(0, last))];
    const Coef a(x), b(y);
    CHECK((a + b).to_scalar() == x + y);
    CHECK((a - b).to_scalar() == x - y);
    CHECK((a * b).to_scalar() == x * y);
    CHECK((a + b == b + a));
    CHECK(((a == b) == (x == y)));
    CHECK((a * b).sign() == sgn(Scalar(x * y)));
    CHECK((a + b) == Coef(Scalar(x + y)));
  }
}
