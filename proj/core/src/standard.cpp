#include "trider/standard.hpp"

#include <stdexcept>

namespace trider::standard {

namespace {

std::vector<Scalar> flatten_operators(const std::vector<Matrix>& ops, std::size_t dim,
                                      bool right_side) {
  // left: (i * dim + j) * dim + k = (a_i m_j)_k; right: (j * n_b + i) * dim + k = (m_j b_i)_k.
  std::vector<Scalar> out(ops.size() * dim * dim, Scalar(0));
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].rows() != dim || ops[i].cols() != dim) {
      throw std::invalid_argument("operator has wrong shape");
    }
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        const auto index = right_side ? (j * ops.size() + i) * dim + k : (i * dim + j) * dim + k;
        out[index] = ops[i](k, j);
      }
    }
  }
  return out;
}

std::vector<Matrix> scalar_operators(std::size_t dim) { return {Matrix::identity(dim)}; }

std::vector<Matrix> coordinate_projections(std::size_t n) {
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix p(n, n);
    p(i, i) = 1;
    ops.push_back(std::move(p));
  }
  return ops;
}

}  // namespace

Algebra rationals() { return Algebra(1, {Scalar(1)}, {Scalar(1)}); }

Algebra split(std::size_t n) {
  std::vector<Vector> products(n * n, zero_vector(n));
  for (std::size_t i = 0; i < n; ++i) products[i * n + i] = unit_vector(n, i);
  return Algebra::from_products(n, products, Vector(n, Scalar(1)));
}

Algebra dual_numbers() {
  // 1*1 = 1, 1*eps = eps*1 = eps, eps*eps = 0.
  return Algebra::from_products(2, {{1, 0}, {0, 1}, {0, 1}, {0, 0}}, {1, 0});
}

std::size_t upper_triangular_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j || j >= n) throw std::out_of_range("not an upper triangular matrix unit");
  // Rows 0..i-1 contribute n, n-1, ..., n-i+1 units.
  return i * n - i * (i - 1) / 2 + (j - i);
}

Algebra upper_triangular(std::size_t n) {
  const std::size_t dim = n * (n + 1) / 2;
  std::vector<Vector> products(dim * dim, zero_vector(dim));
  Vector unit = zero_vector(dim);
  for (std::size_t i = 0; i < n; ++i) {
    unit[upper_triangular_index(n, i, i)] = 1;
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t l = j; l < n; ++l) {
        // e_ij e_jl = e_il
        products[upper_triangular_index(n, i, j) * dim + upper_triangular_index(n, j, l)] =
            unit_vector(dim, upper_triangular_index(n, i, l));
      }
    }
  }
  return Algebra::from_products(dim, products, unit);
}

Algebra full_matrix(std::size_t n) {
  const std::size_t dim = n * n;
  std::vector<Vector> products(dim * dim, zero_vector(dim));
  Vector unit = zero_vector(dim);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i * n + i] = 1;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) products[(i * n + j) * dim + (j * n + l)] = unit_vector(dim, i * n + l);
  }
  return Algebra::from_products(dim, products, unit);
}

Bimodule from_operators(Algebra left, Algebra right, std::size_t dim,
                        const std::vector<Matrix>& left_ops, const std::vector<Matrix>& right_ops) {
  if (left_ops.size() != left.dim() || right_ops.size() != right.dim()) {
    throw std::invalid_argument("one operator per basis element is required");
  }
  auto l = flatten_operators(left_ops, dim, false);
  auto r = flatten_operators(right_ops, dim, true);
  return Bimodule(std::move(left), std::move(right), dim, std::move(l), std::move(r));
}

Bimodule regular(const Algebra& alg) {
  std::vector<Matrix> left_ops;
  std::vector<Matrix> right_ops;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    left_ops.push_back(alg.left_multiplication(alg.basis_vector(i)));
    right_ops.push_back(alg.right_multiplication(alg.basis_vector(i)));
  }
  return from_operators(alg, alg, alg.dim(), left_ops, right_ops);
}

Bimodule coordinatewise_left(std::size_t n) {
  return from_operators(split(n), rationals(), n, coordinate_projections(n), scalar_operators(n));
}

Bimodule coordinatewise_right(std::size_t n) {
  return from_operators(rationals(), split(n), n, scalar_operators(n), coordinate_projections(n));
}

Bimodule coordinatewise_both(std::size_t n) {
  return from_operators(split(n), split(n), n, coordinate_projections(n), coordinate_projections(n));
}

Bimodule column_vectors(std::size_t n) {
  std::vector<Matrix> left_ops;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Matrix unit(n, n);
      unit(i, j) = 1;
      left_ops.push_back(std::move(unit));
    }
  }
  return from_operators(upper_triangular(n), rationals(), n, left_ops, scalar_operators(n));
}

std::vector<CorpusEntry> seed_corpus() {
  std::vector<CorpusEntry> corpus;
  corpus.push_back({"tri_q_q_q", "Tri(Q, Q, Q): upper triangular 2x2 matrices", "Q", "Q_scalar", "Q",
                    from_operators(rationals(), rationals(), 1, scalar_operators(1), scalar_operators(1))});
  corpus.push_back({"tri_qq_q2_q",
                    "Tri(QxQ, Q^2, Q): A acts coordinatewise; pi_A(Z) is strictly smaller than Z(A)",
                    "QxQ", "Q2_left_coordinatewise", "Q", coordinatewise_left(2)});
  corpus.push_back({"tri_q_q2_qq", "Tri(Q, Q^2, QxQ): B acts coordinatewise; strict extension A0 > A",
                    "Q", "Q2_right_coordinatewise", "QxQ", coordinatewise_right(2)});
  corpus.push_back({"tri_dual_regular", "Tri(D, D, D) with D = Q[eps]/(eps^2) acting regularly", "D",
                    "D_regular", "D", regular(dual_numbers())});
  corpus.push_back({"tri_t2_q2_q", "Tri(T2, Q^2, Q): the 3x3 upper triangular block pattern", "T2",
                    "Q2_column_vectors", "Q", column_vectors(2)});
  corpus.push_back({"tri_qq_q2_qq", "Tri(QxQ, Q^2, QxQ) with coordinatewise actions on both sides",
                    "QxQ", "Q2_both_coordinatewise", "QxQ", coordinatewise_both(2)});
  return corpus;
}

}  // namespace trider::standard
