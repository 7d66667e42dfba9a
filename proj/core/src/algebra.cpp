#include "trider/algebra.hpp"

#include <stdexcept>
#include <string>

namespace trider {

std::string describe(const Violation& v) {
  std::string out = v.law + " (";
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v.witness[i]);
  }
  out += ")";
  if (!v.detail.empty()) out += ": " + v.detail;
  return out;
}

Algebra::Algebra(std::size_t dim, std::vector<Scalar> structure_constants, Vector unit)
    : dim_(dim), constants_(std::move(structure_constants)), unit_(std::move(unit)) {
  if (dim_ == 0) throw std::invalid_argument("algebra dimension must be positive");
  if (constants_.size() != dim_ * dim_ * dim_) {
    throw std::invalid_argument("structure constant tensor must have dim^3 = " +
                                std::to_string(dim_ * dim_ * dim_) + " entries, got " +
                                std::to_string(constants_.size()));
  }
  if (unit_.size() != dim_) throw std::invalid_argument("unit has wrong length");
  products_.reserve(dim_ * dim_);
  for (std::size_t ij = 0; ij < dim_ * dim_; ++ij) {
    products_.emplace_back(constants_.begin() + ij * dim_, constants_.begin() + (ij + 1) * dim_);
  }
}

Algebra Algebra::from_products(std::size_t dim, const std::vector<Vector>& products, Vector unit) {
  if (products.size() != dim * dim) throw std::invalid_argument("need dim^2 basis products");
  std::vector<Scalar> constants;
  constants.reserve(dim * dim * dim);
  for (const auto& p : products) {
    if (p.size() != dim) throw std::invalid_argument("basis product has wrong length");
    constants.insert(constants.end(), p.begin(), p.end());
  }
  return Algebra(dim, std::move(constants), std::move(unit));
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) {
    throw std::invalid_argument("multiply: expected vectors of length " + std::to_string(dim_));
  }
  Vector out(dim_, Scalar(0));
  Scalar coeff;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      coeff = x[i] * y[j];
      const auto& p = basis_product(i, j);
      for (std::size_t k = 0; k < dim_; ++k) {
        if (sgn(p[k]) != 0) out[k] += coeff * p[k];
      }
    }
  }
  return out;
}

Vector Algebra::bracket(const Vector& x, const Vector& y) const {
  return multiply(x, y) - multiply(y, x);
}

LinearMap Algebra::left_multiplication(const Vector& x) const {
  LinearMap m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, multiply(x, basis_vector(j)));
  return m;
}

LinearMap Algebra::right_multiplication(const Vector& x) const {
  LinearMap m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, multiply(basis_vector(j), x));
  return m;
}

ValidationReport validate_algebra(const Algebra& alg) {
  ValidationReport report;
  const auto n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          Scalar lhs = 0;
          Scalar rhs = 0;
          for (std::size_t m = 0; m < n; ++m) {
            lhs += alg.constant(i, j, m) * alg.constant(m, k, l);
            rhs += alg.constant(j, k, m) * alg.constant(i, m, l);
          }
          if (lhs != rhs) {
            report.add("associativity", {i, j, k, l},
                       "((b" + std::to_string(i) + " b" + std::to_string(j) + ") b" +
                           std::to_string(k) + ") has coordinate " + format_scalar(lhs) +
                           " but (b" + std::to_string(i) + " (b" + std::to_string(j) + " b" +
                           std::to_string(k) + ")) has " + format_scalar(rhs));
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto b = alg.basis_vector(i);
    if (alg.multiply(alg.unit(), b) != b) report.add("left unit", {i});
    if (alg.multiply(b, alg.unit()) != b) report.add("right unit", {i});
  }
  return report;
}

SubspaceBasis center(const Algebra& alg) {
  const auto n = alg.dim();
  // Stack the maps z -> z b_j - b_j z for every basis b_j.
  Matrix system(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& zb = alg.basis_product(i, j);
      const auto& bz = alg.basis_product(j, i);
      for (std::size_t k = 0; k < n; ++k) system(j * n + k, i) = zb[k] - bz[k];
    }
  }
  return nullspace(system);
}

SubspaceBasis commutator_subspace(const Algebra& alg) {
  std::vector<Vector> generators;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = i + 1; j < alg.dim(); ++j) {
      generators.push_back(alg.basis_product(i, j) - alg.basis_product(j, i));
    }
  }
  return SubspaceBasis::span(alg.dim(), generators);
}

LinearMap inner_derivation(const Algebra& alg, const Vector& x) {
  return alg.left_multiplication(x) - alg.right_multiplication(x);
}

}  // namespace trider
