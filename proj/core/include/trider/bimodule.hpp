#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trider/algebra.hpp"

namespace trider {

enum class Side { left, right };

/// An (A, B)-bimodule M given by action tensors.
///
/// left_action is indexed (i * dim_m + j) * dim_m + k and means
/// a_i . m_j = sum_k l[i][j][k] m_k. right_action is indexed
/// (j * dim_b + i) * dim_m + k and means m_j . b_i = sum_k r[j][i][k] m_k.
class Bimodule {
 public:
  Bimodule() = default;
  Bimodule(Algebra left, Algebra right, std::size_t dim, std::vector<Scalar> left_action,
           std::vector<Scalar> right_action);

  const Algebra& left_algebra() const { return left_; }
  const Algebra& right_algebra() const { return right_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Scalar>& left_action() const { return left_action_; }
  const std::vector<Scalar>& right_action() const { return right_action_; }

  Vector act_left(const Vector& a, const Vector& m) const;
  Vector act_right(const Vector& m, const Vector& b) const;
  /// a.m, m.b or a.m.b depending on which sides are given.
  Vector act(const std::optional<Vector>& a, const Vector& m, const std::optional<Vector>& b) const;

  /// dim x dim matrix of m -> a.m.
  Matrix left_operator(const Vector& a) const;
  /// dim x dim matrix of m -> m.b.
  Matrix right_operator(const Vector& b) const;

  /// (dim^2 x dim_side) matrix whose column i is the flattened operator of
  /// the i-th basis element of the acting algebra.
  Matrix representation(Side side) const;

 private:
  Algebra left_;
  Algebra right_;
  std::size_t dim_ = 0;
  std::vector<Scalar> left_action_;
  std::vector<Scalar> right_action_;
};

/// Checks unital, associative actions on both sides and (am)b = a(mb), all on
/// basis tuples.
ValidationReport validate_bimodule(const Bimodule& bm);

/// True iff the representation of the acting algebra on M has trivial kernel.
bool check_faithful(const Bimodule& bm, Side side);

}  // namespace trider
