#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trider/triangular.hpp"

namespace trider {

/// A subalgebra of End(M) spanned by a basis of operators. Left-side algebras
/// act as m -> op m and multiply by composition; right-side algebras act as
/// m -> m.op, so their product is composition in the opposite order.
class OperatorAlgebra {
 public:
  OperatorAlgebra() = default;

  /// Smallest unital subalgebra of End(M) containing the generators.
  static OperatorAlgebra closure(std::size_t dim_m, Side side, const std::vector<Matrix>& generators);

  Side side() const { return side_; }
  std::size_t dim() const { return operators_.size(); }
  std::size_t module_dim() const { return dim_m_; }
  const Algebra& algebra() const { return algebra_; }
  /// Basis operators, in the canonical order of the flattened span.
  const std::vector<Matrix>& operators() const { return operators_; }
  /// Canonical span of the flattened basis operators.
  const SubspaceBasis& span() const { return span_; }

  std::optional<Vector> coordinates(const Matrix& op) const;
  Matrix operator_of(const Vector& coords) const;
  /// Applies the element with the given coordinates to m.
  Vector apply(const Vector& coords, const Vector& m) const;

 private:
  Side side_ = Side::left;
  std::size_t dim_m_ = 0;
  std::vector<Matrix> operators_;
  SubspaceBasis span_;
  Algebra algebra_;
};

/// The extended triangular algebra Tri(A0, M, B0). A0 is generated inside
/// End(M) by left multiplications by A and right multiplications by Z(B); B0
/// by right multiplications by B and left multiplications by Z(A).
class ExtendedTriangular {
 public:
  /// Throws std::logic_error if the assembled extension is not a valid
  /// triangular algebra.
  static ExtendedTriangular build(const TriangularAlgebra& T);

  const TriangularAlgebra& base() const { return base_; }
  const TriangularAlgebra& extended() const { return extended_; }
  const OperatorAlgebra& a0() const { return a0_; }
  const OperatorAlgebra& b0() const { return b0_; }
  const SubspaceBasis& center_a() const { return center_a_; }
  const SubspaceBasis& center_b() const { return center_b_; }

  /// dim A0 x dim A matrix of a -> left multiplication by a.
  const Matrix& iota_a() const { return iota_a_; }
  /// dim B0 x dim B matrix of b -> right multiplication by b.
  const Matrix& iota_b() const { return iota_b_; }
  /// Blockwise (iota_a, id_M, iota_b).
  const Matrix& iota() const { return iota_; }

  Vector embed(const Vector& x) const { return iota_ * x; }

  /// The A0 element m -> m.c for c in Z(B). Throws std::invalid_argument if c
  /// is not central.
  Vector tau_r_inv(const Vector& c) const;
  /// The B0 element m -> z.m for z in Z(A). Throws std::invalid_argument if z
  /// is not central.
  Vector tau_ell(const Vector& z) const;

  bool strict_a() const { return a0_.dim() > base_.dim_a(); }
  bool strict_b() const { return b0_.dim() > base_.dim_b(); }
  bool strict() const { return strict_a() || strict_b(); }

 private:
  ExtendedTriangular(TriangularAlgebra base, TriangularAlgebra extended)
      : base_(std::move(base)), extended_(std::move(extended)) {}

  TriangularAlgebra base_;
  TriangularAlgebra extended_;
  OperatorAlgebra a0_;
  OperatorAlgebra b0_;
  SubspaceBasis center_a_;
  SubspaceBasis center_b_;
  Matrix iota_a_;
  Matrix iota_b_;
  Matrix iota_;
};

ExtendedTriangular build_operator_extension(const TriangularAlgebra& T);

}  // namespace trider
