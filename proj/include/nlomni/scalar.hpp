#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace nlomni {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Scalar = mpq_class;

/// Dense coordinates of a vector in a fixed ordered basis.
using Vector = std::vector<Scalar>;

/// Parses "p", "-p" or "p/q" (decimal digits only). Throws
/// std::invalid_argument on anything else, including a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical "p" or "p/q" spelling.
std::string to_string(const Scalar& x);

Vector zero_vector(int dim);
Vector unit_vector(int dim, int i);
bool is_zero(const Vector& v);

/// y += a * x
void axpy(Vector& y, const Scalar& a, const Vector& x);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& a, const Vector& x);

}  // namespace nlomni
