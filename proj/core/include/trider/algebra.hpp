#pragma once

#include <cstddef>
#include <vector>

#include "trider/linalg.hpp"
#include "trider/report.hpp"

namespace trider {

/// Linear maps are matrices whose columns are the images of the source basis.
using LinearMap = Matrix;

/// Finite-dimensional unital associative algebra over Q given by structure
/// constants: basis_i * basis_j = sum_k c[i][j][k] basis_k.
///
/// The constructor checks shapes only; associativity and the unit axioms are
/// checked by validate_algebra so that broken input can be reported rather
/// than rejected outright.
class Algebra {
 public:
  Algebra() = default;
  /// structure_constants is indexed (i * dim + j) * dim + k.
  Algebra(std::size_t dim, std::vector<Scalar> structure_constants, Vector unit);

  /// products[i * dim + j] is the coordinate vector of basis_i * basis_j.
  static Algebra from_products(std::size_t dim, const std::vector<Vector>& products, Vector unit);

  std::size_t dim() const { return dim_; }
  const Vector& unit() const { return unit_; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Scalar>& structure_constants() const { return constants_; }
  const Vector& basis_product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  Vector basis_vector(std::size_t i) const { return unit_vector(dim_, i); }

  /// Throws std::invalid_argument on a dimension mismatch.
  Vector multiply(const Vector& x, const Vector& y) const;
  /// [x, y] = xy - yx.
  Vector bracket(const Vector& x, const Vector& y) const;

  /// Matrix of y -> x y.
  LinearMap left_multiplication(const Vector& x) const;
  /// Matrix of y -> y x.
  LinearMap right_multiplication(const Vector& x) const;

  bool operator==(const Algebra& other) const {
    return dim_ == other.dim_ && constants_ == other.constants_ && unit_ == other.unit_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> constants_;
  std::vector<Vector> products_;
  Vector unit_;
};

/// Lists every associativity quadruple (i, j, k, l) with
/// ((b_i b_j) b_k)_l != (b_i (b_j b_k))_l and every basis element on which the
/// unit fails.
ValidationReport validate_algebra(const Algebra& alg);

/// Basis of {z : z x = x z for all x}.
SubspaceBasis center(const Algebra& alg);

/// Basis of span{[b_i, b_j]}.
SubspaceBasis commutator_subspace(const Algebra& alg);

/// ad(x): y -> [x, y].
LinearMap inner_derivation(const Algebra& alg, const Vector& x);

}  // namespace trider
