#include "trider/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace trider {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

void require_same_size(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("vector length mismatch: " + std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()));
  }
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  const auto strip_plus = [](std::string_view s) {
    return std::string(s.front() == '+' ? s.substr(1) : s);
  };
  mpz_class n(strip_plus(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string format_scalar(const Scalar& value) { return value.get_str(10); }

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t index) {
  Vector v(n, Scalar(0));
  v.at(index) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vector operator+(const Vector& x, const Vector& y) {
  Vector out = x;
  out += y;
  return out;
}

Vector operator-(const Vector& x, const Vector& y) {
  Vector out = x;
  out -= y;
  return out;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Vector& operator+=(Vector& x, const Vector& y) {
  require_same_size(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}

Vector& operator-=(Vector& x, const Vector& y) {
  require_same_size(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
  return x;
}

std::string format_vector(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_scalar(v[i]);
  }
  return out + ")";
}

}  // namespace trider
