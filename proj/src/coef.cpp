#include "nlomni/coef.hpp"

#include <limits>

namespace nlomni {

namespace {

using u128 = unsigned __int128;

u128 magnitude(__int128 x) { return x < 0 ? -static_cast<u128>(x) : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 x) {
  return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(__int128 x) {
  const u128 m = magnitude(x);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
  mpz_class out = hi << 64;
  out += mpz_class(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  return x < 0 ? mpz_class(-out) : out;
}

}  // namespace

Coef::Coef(const Scalar& q) {
  Scalar c(q);
  c.canonicalize();
  *this = from_big(std::move(c));
}

Coef Coef::from_big(Scalar q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    Coef c;
    c.num_ = q.get_num().get_si();
    c.den_ = q.get_den().get_si();
    return c;
  }
  Coef c;
  c.big_ = std::make_shared<const Scalar>(std::move(q));
  return c;
}

Coef Coef::from_fraction(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const u128 g = gcd128(magnitude(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
  }
  if (fits64(n) && fits64(d)) {
    Coef c;
    c.num_ = static_cast<std::int64_t>(n);
    c.den_ = static_cast<std::int64_t>(d);
    return c;
  }
  Scalar q(to_mpz(n), to_mpz(d));
  Coef c;
  c.big_ = std::make_shared<const Scalar>(std::move(q));
  return c;
}

Scalar Coef::to_scalar() const {
  if (big_) return *big_;
  return Scalar(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Coef Coef::add_slow(const Coef& a, const Coef& b) {
  if (a.big_ || b.big_) return from_big(a.to_scalar() + b.to_scalar());
  return from_fraction(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                       static_cast<__int128>(a.den_) * b.den_);
}

Coef operator-(const Coef& a) {
  if (a.big_) return Coef::from_big(-*a.big_);
  if (a.num_ == std::numeric_limits<std::int64_t>::min()) return Coef::from_fraction(-static_cast<__int128>(a.num_), a.den_);
  Coef c;
  c.num_ = -a.num_;
  c.den_ = a.den_;
  return c;
}

Coef operator-(const Coef& a, const Coef& b) { return a + (-b); }

Coef Coef::mul_slow(const Coef& a, const Coef& b) {
  if (a.big_ || b.big_) return from_big(a.to_scalar() * b.to_scalar());
  return from_fraction(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

bool operator==(const Coef& a, const Coef& b) {
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  if (a.big_ || b.big_) return false;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

}  // namespace nlomni
