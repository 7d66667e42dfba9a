#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace trider {

/// Exact rational scalar. GMP keeps results of arithmetic in lowest terms
/// with a positive denominator; parse_scalar canonicalizes its input.
using Scalar = mpq_class;

/// Dense coordinate vector.
using Vector = std::vector<Scalar>;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string format_scalar(const Scalar& value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t index);
bool is_zero(const Vector& v);

Vector operator+(const Vector& x, const Vector& y);
Vector operator-(const Vector& x, const Vector& y);
Vector operator*(const Scalar& s, const Vector& v);
Vector& operator+=(Vector& x, const Vector& y);
Vector& operator-=(Vector& x, const Vector& y);

/// "(a, b, c)" with every entry formatted by format_scalar.
std::string format_vector(const Vector& v);

}  // namespace trider
