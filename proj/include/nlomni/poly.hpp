#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlomni/coef.hpp"
#include "nlomni/scalar.hpp"

namespace nlomni {

/// Thrown when a product would exceed the active degree cap.
class DegreeOverflow : public std::runtime_error {
 public:
  DegreeOverflow(int degree, int cap);
  int degree() const { return degree_; }
  int cap() const { return cap_; }

 private:
  int degree_;
  int cap_;
};

/// Degree cap for polynomial products on this thread (default 12, at most 255).
int max_degree();

/// Scoped override of max_degree().
class DegreeCap {
 public:
  explicit DegreeCap(int cap);
  ~DegreeCap();
  DegreeCap(const DegreeCap&) = delete;
  DegreeCap& operator=(const DegreeCap&) = delete;

 private:
  int previous_;
};

/// Exponent vector of a monomial in at most Monomial::max_vars variables,
/// one byte per variable packed big-endian into two words so that integer
/// comparison is lexicographic order and addition adds exponents.
struct Monomial {
  static constexpr int max_vars = 16;
  std::array<std::uint64_t, 2> words{};

  int operator[](std::size_t i) const { return static_cast<int>((words[i / 8] >> shift(i)) & 0xff); }
  void set(std::size_t i, int e) {
    words[i / 8] = (words[i / 8] & ~(std::uint64_t{0xff} << shift(i))) | (static_cast<std::uint64_t>(e) << shift(i));
  }
  int degree() const;
  /// Exponent-wise sum; the caller guarantees no exponent exceeds 255.
  friend Monomial operator+(const Monomial& a, const Monomial& b) {
    return {{a.words[0] + b.words[0], a.words[1] + b.words[1]}};
  }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  static int shift(std::size_t i) { return static_cast<int>(56 - 8 * (i % 8)); }
};

/// Sparse polynomial in y_1..y_m with exact rational coefficients; terms are
/// kept sorted by exponent.
class Poly {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::vector<std::pair<Monomial, Coef>>;

  /// Throws std::invalid_argument beyond Monomial::max_vars variables.
  explicit Poly(int nvars);

  static Poly constant(int nvars, const Scalar& c);
  /// y_{i+1} (0-based index).
  static Poly variable(int nvars, int i);
  /// Σ_k c_k y_k
  static Poly linear(const Vector& coeffs);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; −1 for the zero polynomial.
  int degree() const;
  Scalar coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const Scalar& c);

  /// ∂/∂y_{i+1}
  Poly derivative(int i) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Scalar& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Scalar(-1); }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void require_compatible(const Poly& other) const;
  Monomial monomial(const Exponent& e) const;
  void merge(const Poly& other, int sign);

  int nvars_;
  Terms terms_;
};

/// "2*y1^2*y3 - 1/2"; the zero polynomial prints as "0".
std::string to_string(const Poly& p);

}  // namespace nlomni
