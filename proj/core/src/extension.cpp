#include "trider/extension.hpp"

#include <stdexcept>

#include "trider/standard.hpp"

namespace trider {

namespace {

Matrix compose(Side side, const Matrix& x, const Matrix& y) { return side == Side::left ? x * y : y * x; }

Vector require_coordinates(const OperatorAlgebra& alg, const Matrix& op, const char* what) {
  auto coords = alg.coordinates(op);
  if (!coords) throw std::logic_error(std::string("operator outside its algebra: ") + what);
  return *coords;
}

}  // namespace

OperatorAlgebra OperatorAlgebra::closure(std::size_t dim_m, Side side,
                                         const std::vector<Matrix>& generators) {
  std::vector<Vector> flat{flatten(Matrix::identity(dim_m))};
  for (const auto& g : generators) flat.push_back(flatten(g));
  auto span = SubspaceBasis::span(dim_m * dim_m, flat);

  // Each pass adds all products of current basis operators; a pass that does
  // not grow the span has reached a subalgebra.
  for (std::size_t pass = 0;; ++pass) {
    if (pass > dim_m * dim_m) throw std::logic_error("operator closure did not stabilize");
    std::vector<Vector> next = span.vectors();
    for (const auto& x : span.vectors()) {
      for (const auto& y : span.vectors()) {
        next.push_back(flatten(unflatten(x, dim_m, dim_m) * unflatten(y, dim_m, dim_m)));
      }
    }
    auto grown = SubspaceBasis::span(dim_m * dim_m, next);
    if (grown.dim() == span.dim()) break;
    span = std::move(grown);
  }

  OperatorAlgebra out;
  out.side_ = side;
  out.dim_m_ = dim_m;
  out.span_ = std::move(span);
  for (const auto& v : out.span_.vectors()) out.operators_.push_back(unflatten(v, dim_m, dim_m));

  const auto n = out.operators_.size();
  std::vector<Vector> products;
  products.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      products.push_back(require_coordinates(out, compose(side, out.operators_[i], out.operators_[j]),
                                             "product of basis operators"));
    }
  }
  auto unit = require_coordinates(out, Matrix::identity(dim_m), "identity");
  out.algebra_ = Algebra::from_products(n, products, std::move(unit));
  return out;
}

std::optional<Vector> OperatorAlgebra::coordinates(const Matrix& op) const {
  if (op.rows() != dim_m_ || op.cols() != dim_m_) return std::nullopt;
  return span_.coordinates(flatten(op));
}

Matrix OperatorAlgebra::operator_of(const Vector& coords) const {
  if (coords.size() != operators_.size()) throw std::invalid_argument("operator_of: wrong length");
  Matrix op(dim_m_, dim_m_);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (sgn(coords[k]) != 0) op += coords[k] * operators_[k];
  }
  return op;
}

Vector OperatorAlgebra::apply(const Vector& coords, const Vector& m) const {
  return operator_of(coords) * m;
}

ExtendedTriangular ExtendedTriangular::build(const TriangularAlgebra& T) {
  const auto& bm = T.bimodule();
  const auto dm = T.dim_m();
  const auto center_a = center(T.a());
  const auto center_b = center(T.b());

  std::vector<Matrix> a_gens;
  for (std::size_t i = 0; i < T.dim_a(); ++i) a_gens.push_back(bm.left_operator(T.a().basis_vector(i)));
  for (const auto& c : center_b.vectors()) a_gens.push_back(bm.right_operator(c));
  std::vector<Matrix> b_gens;
  for (std::size_t i = 0; i < T.dim_b(); ++i) b_gens.push_back(bm.right_operator(T.b().basis_vector(i)));
  for (const auto& z : center_a.vectors()) b_gens.push_back(bm.left_operator(z));

  auto a0 = OperatorAlgebra::closure(dm, Side::left, a_gens);
  auto b0 = OperatorAlgebra::closure(dm, Side::right, b_gens);

  TriangularAlgebra extended = [&] {
    try {
      return TriangularAlgebra::build(
          standard::from_operators(a0.algebra(), b0.algebra(), dm, a0.operators(), b0.operators()));
    } catch (const TriangularError& e) {
      throw std::logic_error(std::string("operator extension is not triangular: ") + e.what());
    }
  }();

  ExtendedTriangular out(T, std::move(extended));
  out.center_a_ = center_a;
  out.center_b_ = center_b;

  std::vector<Vector> ia;
  for (std::size_t i = 0; i < T.dim_a(); ++i) ia.push_back(require_coordinates(a0, a_gens[i], "iota_A"));
  std::vector<Vector> ib;
  for (std::size_t i = 0; i < T.dim_b(); ++i) ib.push_back(require_coordinates(b0, b_gens[i], "iota_B"));
  out.iota_a_ = Matrix::from_columns(a0.dim(), ia);
  out.iota_b_ = Matrix::from_columns(b0.dim(), ib);

  const auto& E = out.extended_;
  out.iota_ = Matrix(E.dim(), T.dim());
  for (std::size_t i = 0; i < T.dim_a(); ++i) {
    for (std::size_t k = 0; k < a0.dim(); ++k) out.iota_(E.offset(Slot::A) + k, T.offset(Slot::A) + i) = ia[i][k];
  }
  for (std::size_t j = 0; j < dm; ++j) out.iota_(E.offset(Slot::M) + j, T.offset(Slot::M) + j) = 1;
  for (std::size_t i = 0; i < T.dim_b(); ++i) {
    for (std::size_t k = 0; k < b0.dim(); ++k) out.iota_(E.offset(Slot::B) + k, T.offset(Slot::B) + i) = ib[i][k];
  }

  out.a0_ = std::move(a0);
  out.b0_ = std::move(b0);
  return out;
}

Vector ExtendedTriangular::tau_r_inv(const Vector& c) const {
  if (!center_b_.contains(c)) throw std::invalid_argument("tau_r_inv: argument is not in Z(B)");
  return require_coordinates(a0_, base_.bimodule().right_operator(c), "tau_r_inv");
}

Vector ExtendedTriangular::tau_ell(const Vector& z) const {
  if (!center_a_.contains(z)) throw std::invalid_argument("tau_ell: argument is not in Z(A)");
  return require_coordinates(b0_, base_.bimodule().left_operator(z), "tau_ell");
}

ExtendedTriangular build_operator_extension(const TriangularAlgebra& T) {
  return ExtendedTriangular::build(T);
}

}  // namespace trider
