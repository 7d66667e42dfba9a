#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trider/bimodule.hpp"

namespace trider::standard {

/// Q itself, basis {1}.
Algebra rationals();
/// Q^n with coordinatewise product, basis of orthogonal idempotents.
Algebra split(std::size_t n);
/// Q[eps]/(eps^2), basis {1, eps}.
Algebra dual_numbers();
/// Upper triangular n x n matrices, basis e_ij (i <= j) in row-major order.
Algebra upper_triangular(std::size_t n);
/// All n x n matrices, basis e_ij in row-major order.
Algebra full_matrix(std::size_t n);

/// Index of e_ij in the basis of upper_triangular(n).
std::size_t upper_triangular_index(std::size_t n, std::size_t i, std::size_t j);

/// Bimodule from explicit operators: left_ops[i] is the matrix of m -> a_i m
/// and right_ops[i] the matrix of m -> m b_i.
Bimodule from_operators(Algebra left, Algebra right, std::size_t dim,
                        const std::vector<Matrix>& left_ops, const std::vector<Matrix>& right_ops);

/// A acting on itself from both sides.
Bimodule regular(const Algebra& alg);
/// Q^n acting coordinatewise on the left of Q^n, Q by scalars on the right.
Bimodule coordinatewise_left(std::size_t n);
/// Q by scalars on the left of Q^n, Q^n coordinatewise on the right.
Bimodule coordinatewise_right(std::size_t n);
/// Q^n coordinatewise on both sides of Q^n.
Bimodule coordinatewise_both(std::size_t n);
/// Upper triangular n x n matrices on column vectors Q^n, Q by scalars on the right.
Bimodule column_vectors(std::size_t n);

struct CorpusEntry {
  std::string name;
  std::string description;
  std::string a_name;
  std::string m_name;
  std::string b_name;
  Bimodule module;
};

/// The six seed triangular algebras shipped with the tool.
std::vector<CorpusEntry> seed_corpus();

}  // namespace trider::standard
