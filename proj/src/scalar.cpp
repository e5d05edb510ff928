#include "nlomni/scalar.hpp"

#include <cassert>
#include <cctype>
#include <stdexcept>

namespace nlomni {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num), 10);
  mpz_class q(1);
  if (slash != std::string_view::npos) {
    q = mpz_class(std::string(den), 10);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  if (text.front() == '-') p = -p;
  Scalar x(p, q);
  x.canonicalize();
  return x;
}

std::string to_string(const Scalar& x) { return x.get_str(10); }

Vector zero_vector(int dim) { return Vector(static_cast<std::size_t>(dim)); }

Vector unit_vector(int dim, int i) {
  Vector v = zero_vector(dim);
  v.at(static_cast<std::size_t>(i)) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  assert(y.size() == x.size());
  if (sgn(a) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) != 0) y[i] += a * x[i];
  }
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  axpy(r, 1, b);
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  axpy(r, -1, b);
  return r;
}

Vector operator*(const Scalar& a, const Vector& x) {
  Vector r = zero_vector(static_cast<int>(x.size()));
  axpy(r, a, x);
  return r;
}

}  // namespace nlomni
