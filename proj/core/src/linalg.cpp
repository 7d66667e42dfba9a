#include "trider/linalg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace trider {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  require(data_.size() == rows_ * cols_, "matrix entry count does not match its shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == m.cols_, "ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto span = row(r);
  return Vector(span.begin(), span.end());
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  require(v.size() == rows_, "column length does not match row count");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return trider::is_zero(data_); }

Vector Matrix::operator*(const Vector& v) const {
  require(v.size() == cols_, "matrix-vector dimension mismatch");
  Vector out(rows_, Scalar(0));
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(v[c]) == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const auto& a = (*this)(r, c);
      if (sgn(a) != 0) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  require(cols_ == other.rows_, "matrix product dimension mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        const auto& b = other(k, c);
        if (sgn(b) != 0) out(r, c) += a * b;
      }
    }
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix Matrix::operator+(const Matrix& other) const {
  Matrix out = *this;
  out += other;
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  Matrix out = *this;
  out -= other;
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix out = m;
  for (auto& x : out.data_) x *= s;
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << format_scalar((*this)(r, c));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Vector flatten(const Matrix& m) { return m.entries(); }

Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, v);
}

RrefResult rref(Matrix m) {
  RrefResult result;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t pivot_row = 0;
  Scalar factor;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && sgn(m(r, c)) == 0) ++r;
    if (r == rows) continue;
    if (r != pivot_row) {
      for (std::size_t k = c; k < cols; ++k) std::swap(m(r, k), m(pivot_row, k));
    }
    const Scalar inv = 1 / m(pivot_row, c);
    for (std::size_t k = c; k < cols; ++k) {
      if (sgn(m(pivot_row, k)) != 0) m(pivot_row, k) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || sgn(m(i, c)) == 0) continue;
      factor = m(i, c);
      for (std::size_t k = c; k < cols; ++k) {
        const auto& p = m(pivot_row, k);
        if (sgn(p) != 0) m(i, k) -= factor * p;
      }
    }
    result.pivot_columns.push_back(c);
    ++pivot_row;
  }
  result.reduced = std::move(m);
  return result;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, const std::vector<Vector>& generators) {
  SubspaceBasis s(ambient_dim);
  if (generators.empty()) return s;
  Matrix stacked(generators.size(), ambient_dim);
  for (std::size_t r = 0; r < generators.size(); ++r) {
    require(generators[r].size() == ambient_dim, "generator length does not match ambient dimension");
    std::copy(generators[r].begin(), generators[r].end(), stacked.row(r).begin());
  }
  auto reduced = rref(std::move(stacked));
  for (std::size_t r = 0; r < reduced.rank(); ++r) s.vectors_.push_back(reduced.reduced.row_vector(r));
  s.pivots_ = std::move(reduced.pivot_columns);
  return s;
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient_dim) {
  SubspaceBasis s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.vectors_.push_back(unit_vector(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

std::optional<Vector> SubspaceBasis::coordinates(const Vector& v) const {
  require(v.size() == ambient_dim_, "vector length does not match ambient dimension");
  // In reduced echelon form the coefficient of basis vector k is the entry of
  // v at that vector's pivot column.
  Vector coeffs(vectors_.size());
  Vector residual = v;
  for (std::size_t k = 0; k < vectors_.size(); ++k) {
    coeffs[k] = v[pivots_[k]];
    if (sgn(coeffs[k]) == 0) continue;
    for (std::size_t i = 0; i < ambient_dim_; ++i) {
      if (sgn(vectors_[k][i]) != 0) residual[i] -= coeffs[k] * vectors_[k][i];
    }
  }
  if (!trider::is_zero(residual)) return std::nullopt;
  return coeffs;
}

bool SubspaceBasis::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool SubspaceBasis::is_subspace_of(const SubspaceBasis& other) const {
  if (ambient_dim_ != other.ambient_dim_) return false;
  for (const auto& v : vectors_) {
    if (!other.contains(v)) return false;
  }
  return true;
}

SubspaceBasis SubspaceBasis::sum(const SubspaceBasis& other) const {
  require(ambient_dim_ == other.ambient_dim_, "subspace sum of different ambient dimensions");
  auto gens = vectors_;
  gens.insert(gens.end(), other.vectors_.begin(), other.vectors_.end());
  return span(ambient_dim_, gens);
}

Matrix SubspaceBasis::as_rows() const {
  if (vectors_.empty()) return Matrix(0, ambient_dim_);
  return Matrix::from_rows(vectors_);
}

namespace {

// Kernel of the first `cols` columns of an already reduced matrix. The
// reduced form of a column prefix is the prefix of the reduced form, so this
// also serves augmented systems.
SubspaceBasis kernel_of_reduced(const RrefResult& reduced, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  std::size_t rank = 0;
  for (auto c : reduced.pivot_columns) {
    if (c < cols) {
      is_pivot[c] = true;
      ++rank;
    }
  }
  std::vector<Vector> generators;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, Scalar(0));
    v[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) {
      v[reduced.pivot_columns[r]] = -reduced.reduced(r, free);
    }
    generators.push_back(std::move(v));
  }
  return SubspaceBasis::span(cols, generators);
}

}  // namespace

SubspaceBasis nullspace(const Matrix& m) { return kernel_of_reduced(rref(m), m.cols()); }

bool AffineSolutionSet::contains(const Vector& x) const {
  if (empty()) return false;
  return homogeneous.contains(x - *particular);
}

bool AffineSolutionSet::contains(const AffineSolutionSet& inner) const {
  if (inner.empty()) return true;
  if (empty()) return false;
  return contains(*inner.particular) && inner.homogeneous.is_subspace_of(homogeneous);
}

AffineSolutionSet solve_affine(const Matrix& m, const Vector& b) {
  require(b.size() == m.rows(), "right-hand side length does not match row count");
  const std::size_t cols = m.cols();
  Matrix augmented(m.rows(), cols + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto src = m.row(r);
    std::copy(src.begin(), src.end(), augmented.row(r).begin());
    augmented(r, cols) = b[r];
  }
  const auto reduced = rref(std::move(augmented));

  AffineSolutionSet out;
  out.homogeneous = kernel_of_reduced(reduced, cols);
  if (!reduced.pivot_columns.empty() && reduced.pivot_columns.back() == cols) return out;

  Vector x(cols, Scalar(0));
  for (std::size_t r = 0; r < reduced.rank(); ++r) {
    x[reduced.pivot_columns[r]] = reduced.reduced(r, cols);
  }
  out.particular = std::move(x);
  return out;
}

bool subspace_contains(const SubspaceBasis& s, const Vector& v) { return s.contains(v); }

}  // namespace trider
