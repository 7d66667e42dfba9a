#include "trider/triangular.hpp"

#include <sstream>

namespace trider {

namespace {

// Left-hand side of a m_j - m_j b = 0 over the unknown (a, b).
Matrix center_system(const Bimodule& bm) {
  const auto n = bm.dim();
  const auto dim_a = bm.left_algebra().dim();
  const auto dim_b = bm.right_algebra().dim();
  Matrix system(n * n, dim_a + dim_b);
  const auto left = bm.representation(Side::left);
  const auto right = bm.representation(Side::right);
  for (std::size_t r = 0; r < n * n; ++r) {
    for (std::size_t i = 0; i < dim_a; ++i) system(r, i) = left(r, i);
    for (std::size_t i = 0; i < dim_b; ++i) system(r, dim_a + i) = -right(r, i);
  }
  return system;
}

}  // namespace

const char* to_string(Slot slot) {
  switch (slot) {
    case Slot::A: return "A";
    case Slot::M: return "M";
    case Slot::B: return "B";
  }
  return "?";
}

TriangularAlgebra::TriangularAlgebra(Bimodule module, Algebra total)
    : module_(std::move(module)), total_(std::move(total)) {
  e_ = embed(a().unit(), Slot::A);
  f_ = embed(b().unit(), Slot::B);
}

TriangularAlgebra TriangularAlgebra::build(Bimodule module) {
  if (auto r = validate_algebra(module.left_algebra()); !r.ok()) {
    throw TriangularError("algebra A is invalid: " + describe(r.violations.front()));
  }
  if (auto r = validate_algebra(module.right_algebra()); !r.ok()) {
    throw TriangularError("algebra B is invalid: " + describe(r.violations.front()));
  }
  if (auto r = validate_bimodule(module); !r.ok()) {
    throw TriangularError("bimodule M is invalid: " + describe(r.violations.front()));
  }
  if (!check_faithful(module, Side::left)) {
    throw TriangularError("M is not faithful as a left A-module");
  }
  if (!check_faithful(module, Side::right)) {
    throw TriangularError("M is not faithful as a right B-module");
  }

  const auto& A = module.left_algebra();
  const auto& B = module.right_algebra();
  const std::size_t da = A.dim();
  const std::size_t dm = module.dim();
  const std::size_t db = B.dim();
  const std::size_t dim = da + dm + db;
  const std::size_t om = da;
  const std::size_t ob = da + dm;

  std::vector<Vector> products(dim * dim, zero_vector(dim));
  auto place = [&](std::size_t i, std::size_t j, std::size_t offset, const Vector& v) {
    auto& p = products[i * dim + j];
    for (std::size_t k = 0; k < v.size(); ++k) p[offset + k] = v[k];
  };
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) place(i, j, 0, A.basis_product(i, j));
    for (std::size_t j = 0; j < dm; ++j) {
      place(i, om + j, om, module.act_left(A.basis_vector(i), unit_vector(dm, j)));
    }
  }
  for (std::size_t j = 0; j < dm; ++j) {
    for (std::size_t i = 0; i < db; ++i) {
      place(om + j, ob + i, om, module.act_right(unit_vector(dm, j), B.basis_vector(i)));
    }
  }
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) place(ob + i, ob + j, ob, B.basis_product(i, j));

  Vector unit = zero_vector(dim);
  for (std::size_t k = 0; k < da; ++k) unit[k] = A.unit()[k];
  for (std::size_t k = 0; k < db; ++k) unit[ob + k] = B.unit()[k];

  auto total = Algebra::from_products(dim, products, std::move(unit));
  if (auto r = validate_algebra(total); !r.ok()) {
    throw std::logic_error("assembled triangular algebra fails validation: " +
                           describe(r.violations.front()));
  }
  return TriangularAlgebra(std::move(module), std::move(total));
}

TriangularAlgebra build_triangular(const Algebra& A, const Bimodule& M, const Algebra& B) {
  if (!(M.left_algebra() == A)) throw TriangularError("M is not a left module over the given A");
  if (!(M.right_algebra() == B)) throw TriangularError("M is not a right module over the given B");
  return TriangularAlgebra::build(M);
}

std::size_t TriangularAlgebra::offset(Slot slot) const {
  switch (slot) {
    case Slot::A: return 0;
    case Slot::M: return dim_a();
    case Slot::B: return dim_a() + dim_m();
  }
  return 0;
}

std::size_t TriangularAlgebra::slot_dim(Slot slot) const {
  switch (slot) {
    case Slot::A: return dim_a();
    case Slot::M: return dim_m();
    case Slot::B: return dim_b();
  }
  return 0;
}

Vector TriangularAlgebra::project(const Vector& x, Slot slot) const {
  if (x.size() != dim()) throw std::invalid_argument("project: element has wrong length");
  const auto begin = x.begin() + static_cast<std::ptrdiff_t>(offset(slot));
  return Vector(begin, begin + static_cast<std::ptrdiff_t>(slot_dim(slot)));
}

Vector TriangularAlgebra::embed(const Vector& part, Slot slot) const {
  if (part.size() != slot_dim(slot)) {
    throw std::invalid_argument(std::string("embed: wrong length for slot ") + to_string(slot));
  }
  Vector x = zero_vector(dim());
  std::copy(part.begin(), part.end(), x.begin() + static_cast<std::ptrdiff_t>(offset(slot)));
  return x;
}

Vector TriangularAlgebra::assemble(const Vector& a, const Vector& m, const Vector& b) const {
  return embed(a, Slot::A) + embed(m, Slot::M) + embed(b, Slot::B);
}

std::string TriangularAlgebra::display(const Vector& x) const {
  std::ostringstream os;
  os << "[[" << format_vector(project(x, Slot::A)) << ", " << format_vector(project(x, Slot::M))
     << "], [0, " << format_vector(project(x, Slot::B)) << "]]";
  return os.str();
}

std::vector<CenterElement> center_triangular(const TriangularAlgebra& T) {
  const auto kernel = nullspace(center_system(T.bimodule()));
  std::vector<CenterElement> out;
  const auto da = static_cast<std::ptrdiff_t>(T.dim_a());
  for (const auto& v : kernel.vectors()) {
    out.push_back({Vector(v.begin(), v.begin() + da), Vector(v.begin() + da, v.end())});
  }
  return out;
}

SubspaceBasis center_subspace(const TriangularAlgebra& T) {
  std::vector<Vector> gens;
  for (const auto& c : center_triangular(T)) {
    gens.push_back(T.assemble(c.a_part, zero_vector(T.dim_m()), c.b_part));
  }
  return SubspaceBasis::span(T.dim(), gens);
}

Vector Eta::apply(const Vector& a) const {
  const auto coords = domain.coordinates(a);
  if (!coords) throw std::invalid_argument("eta: argument is not in pi_A(Z)");
  return images * *coords;
}

Eta eta(const TriangularAlgebra& T) {
  const auto& bm = T.bimodule();
  std::vector<Vector> a_parts;
  for (const auto& c : center_triangular(T)) a_parts.push_back(c.a_part);

  Eta out;
  out.domain = SubspaceBasis::span(T.dim_a(), a_parts);
  const auto right = bm.representation(Side::right);
  std::vector<Vector> images;
  for (const auto& a : out.domain.vectors()) {
    const auto solution = solve_affine(right, flatten(bm.left_operator(a)));
    if (solution.empty() || !solution.homogeneous.empty()) {
      throw std::logic_error("eta: no unique b with a m = m b; M must be faithful");
    }
    images.push_back(*solution.particular);
  }
  out.images = Matrix::from_columns(T.dim_b(), images);
  out.codomain = SubspaceBasis::span(T.dim_b(), images);
  return out;
}

}  // namespace trider
