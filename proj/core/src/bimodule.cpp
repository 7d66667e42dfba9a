#include "trider/bimodule.hpp"

#include <stdexcept>
#include <string>

namespace trider {

Bimodule::Bimodule(Algebra left, Algebra right, std::size_t dim, std::vector<Scalar> left_action,
                   std::vector<Scalar> right_action)
    : left_(std::move(left)),
      right_(std::move(right)),
      dim_(dim),
      left_action_(std::move(left_action)),
      right_action_(std::move(right_action)) {
  if (left_action_.size() != left_.dim() * dim_ * dim_) {
    throw std::invalid_argument("left action tensor must have dim_A * dim_M^2 = " +
                                std::to_string(left_.dim() * dim_ * dim_) + " entries");
  }
  if (right_action_.size() != right_.dim() * dim_ * dim_) {
    throw std::invalid_argument("right action tensor must have dim_M^2 * dim_B = " +
                                std::to_string(right_.dim() * dim_ * dim_) + " entries");
  }
}

Vector Bimodule::act_left(const Vector& a, const Vector& m) const {
  if (a.size() != left_.dim() || m.size() != dim_) {
    throw std::invalid_argument("act_left: dimension mismatch");
  }
  Vector out(dim_, Scalar(0));
  Scalar coeff;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(m[j]) == 0) continue;
      coeff = a[i] * m[j];
      const auto* row = &left_action_[(i * dim_ + j) * dim_];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (sgn(row[k]) != 0) out[k] += coeff * row[k];
      }
    }
  }
  return out;
}

Vector Bimodule::act_right(const Vector& m, const Vector& b) const {
  if (b.size() != right_.dim() || m.size() != dim_) {
    throw std::invalid_argument("act_right: dimension mismatch");
  }
  Vector out(dim_, Scalar(0));
  Scalar coeff;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (sgn(m[j]) == 0) continue;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (sgn(b[i]) == 0) continue;
      coeff = m[j] * b[i];
      const auto* row = &right_action_[(j * right_.dim() + i) * dim_];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (sgn(row[k]) != 0) out[k] += coeff * row[k];
      }
    }
  }
  return out;
}

Vector Bimodule::act(const std::optional<Vector>& a, const Vector& m,
                     const std::optional<Vector>& b) const {
  Vector out = a ? act_left(*a, m) : m;
  if (m.size() != dim_) throw std::invalid_argument("act: dimension mismatch");
  return b ? act_right(out, *b) : out;
}

Matrix Bimodule::left_operator(const Vector& a) const {
  Matrix op(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) op.set_column(j, act_left(a, unit_vector(dim_, j)));
  return op;
}

Matrix Bimodule::right_operator(const Vector& b) const {
  Matrix op(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) op.set_column(j, act_right(unit_vector(dim_, j), b));
  return op;
}

Matrix Bimodule::representation(Side side) const {
  const auto& alg = side == Side::left ? left_ : right_;
  std::vector<Vector> columns;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const auto basis = alg.basis_vector(i);
    columns.push_back(flatten(side == Side::left ? left_operator(basis) : right_operator(basis)));
  }
  return Matrix::from_columns(dim_ * dim_, columns);
}

ValidationReport validate_bimodule(const Bimodule& bm) {
  ValidationReport report;
  const auto& A = bm.left_algebra();
  const auto& B = bm.right_algebra();
  const auto n = bm.dim();
  for (std::size_t j = 0; j < n; ++j) {
    const auto m = unit_vector(n, j);
    if (bm.act_left(A.unit(), m) != m) report.add("left unit action", {j});
    if (bm.act_right(m, B.unit()) != m) report.add("right unit action", {j});
    for (std::size_t i = 0; i < A.dim(); ++i) {
      const auto a = A.basis_vector(i);
      for (std::size_t k = 0; k < A.dim(); ++k) {
        const auto a2 = A.basis_vector(k);
        if (bm.act_left(A.multiply(a, a2), m) != bm.act_left(a, bm.act_left(a2, m))) {
          report.add("left action associativity", {i, k, j});
        }
      }
    }
    for (std::size_t i = 0; i < B.dim(); ++i) {
      const auto b = B.basis_vector(i);
      for (std::size_t k = 0; k < B.dim(); ++k) {
        const auto b2 = B.basis_vector(k);
        if (bm.act_right(m, B.multiply(b, b2)) != bm.act_right(bm.act_right(m, b), b2)) {
          report.add("right action associativity", {j, i, k});
        }
      }
    }
    for (std::size_t i = 0; i < A.dim(); ++i) {
      const auto a = A.basis_vector(i);
      for (std::size_t k = 0; k < B.dim(); ++k) {
        const auto b = B.basis_vector(k);
        if (bm.act_right(bm.act_left(a, m), b) != bm.act_left(a, bm.act_right(m, b))) {
          report.add("bimodule compatibility (a,m,b)", {i, j, k});
        }
      }
    }
  }
  return report;
}

bool check_faithful(const Bimodule& bm, Side side) {
  return nullspace(bm.representation(side)).empty();
}

}  // namespace trider
