#pragma once

#include <cstdint>
#include <memory>

#include "nlomni/scalar.hpp"

namespace nlomni {

/// Exact rational stored inline as a reduced int64 fraction, falling back to
/// a shared GMP value once a result leaves that range. Values are canonical:
/// a fraction that fits inline is never held in the GMP form.
class Coef {
 public:
  Coef() = default;
  Coef(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integers
  explicit Coef(const Scalar& q);

  Scalar to_scalar() const;
  int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }
  bool is_zero() const { return sign() == 0; }

  Coef& operator+=(const Coef& o) { return *this = *this + o; }
  Coef& operator-=(const Coef& o) { return *this = *this - o; }
  Coef& operator*=(const Coef& o) { return *this = *this * o; }

  friend Coef operator+(const Coef& a, const Coef& b) {
    std::int64_t r;
    if (a.integral() && b.integral() && !__builtin_add_overflow(a.num_, b.num_, &r)) return Coef(r);
    return add_slow(a, b);
  }
  friend Coef operator*(const Coef& a, const Coef& b) {
    std::int64_t r;
    if (a.integral() && b.integral() && !__builtin_mul_overflow(a.num_, b.num_, &r)) return Coef(r);
    return mul_slow(a, b);
  }
  friend Coef operator-(const Coef& a, const Coef& b);
  friend Coef operator-(const Coef& a);
  friend bool operator==(const Coef& a, const Coef& b);

 private:
  bool integral() const { return den_ == 1 && !big_; }
  static Coef add_slow(const Coef& a, const Coef& b);
  static Coef mul_slow(const Coef& a, const Coef& b);
  static Coef from_fraction(__int128 n, __int128 d);
  static Coef from_big(Scalar q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const Scalar> big_;
};

}  // namespace nlomni
