#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trider/rational.hpp"

namespace trider {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> row_major);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  /// Entries in row-major order; this is also the flattening used for
  /// matrices that are unknowns of a linear system.
  const std::vector<Scalar>& entries() const { return data_; }

  Matrix transpose() const;
  bool is_zero() const;

  Vector operator*(const Vector& v) const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  friend Matrix operator*(const Scalar& s, const Matrix& m);

  bool operator==(const Matrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Row-major flattening of a matrix into a vector.
Vector flatten(const Matrix& m);
/// Inverse of flatten.
Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Unique reduced row echelon form.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

/// A subspace of Q^n kept in canonical form: the basis vectors, stacked as
/// rows, are the nonzero rows of a reduced row echelon matrix. Equal
/// subspaces therefore compare equal.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  static SubspaceBasis span(std::size_t ambient_dim, const std::vector<Vector>& generators);
  static SubspaceBasis full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const std::vector<Vector>& vectors() const { return vectors_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  /// Coefficients c with v = sum c_k * vectors()[k], or nullopt when v is
  /// outside the span.
  std::optional<Vector> coordinates(const Vector& v) const;
  bool is_subspace_of(const SubspaceBasis& other) const;
  SubspaceBasis sum(const SubspaceBasis& other) const;

  /// Stacked basis vectors, one per row.
  Matrix as_rows() const;

  bool operator==(const SubspaceBasis& other) const = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vector> vectors_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of {v : m v = 0}.
SubspaceBasis nullspace(const Matrix& m);

/// The solutions of m x = b. An inconsistent system is an empty set, not an
/// error.
struct AffineSolutionSet {
  std::optional<Vector> particular;
  SubspaceBasis homogeneous;

  bool empty() const { return !particular.has_value(); }
  bool contains(const Vector& x) const;
  /// True when every member of inner is a member of this set.
  bool contains(const AffineSolutionSet& inner) const;
};

/// Particular solution has every free variable set to zero.
AffineSolutionSet solve_affine(const Matrix& m, const Vector& b);

bool subspace_contains(const SubspaceBasis& s, const Vector& v);

}  // namespace trider
