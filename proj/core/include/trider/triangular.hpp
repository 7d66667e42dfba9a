#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "trider/bimodule.hpp"

namespace trider {

enum class Slot { A, M, B };

const char* to_string(Slot slot);

/// Raised when Tri(A, M, B) cannot be formed from the given constituents.
class TriangularError : public std::runtime_error {
 public:
  explicit TriangularError(const std::string& what) : std::runtime_error(what) {}
};

/// Tri(A, M, B) realized as a structure-constant algebra. The basis is the A
/// basis, then the M basis, then the B basis; elements are read as
/// [[a, m], [0, b]].
class TriangularAlgebra {
 public:
  /// Requires validated A, B and M, with M faithful on both sides. Throws
  /// TriangularError naming the failed requirement otherwise.
  static TriangularAlgebra build(Bimodule module);

  const Algebra& algebra() const { return total_; }
  const Algebra& a() const { return module_.left_algebra(); }
  const Algebra& b() const { return module_.right_algebra(); }
  const Bimodule& bimodule() const { return module_; }

  std::size_t dim() const { return total_.dim(); }
  std::size_t dim_a() const { return a().dim(); }
  std::size_t dim_m() const { return module_.dim(); }
  std::size_t dim_b() const { return b().dim(); }
  std::size_t offset(Slot slot) const;
  std::size_t slot_dim(Slot slot) const;

  /// [[1_A, 0], [0, 0]].
  const Vector& e() const { return e_; }
  /// [[0, 0], [0, 1_B]].
  const Vector& f() const { return f_; }

  Vector project(const Vector& x, Slot slot) const;
  Vector embed(const Vector& part, Slot slot) const;
  Vector assemble(const Vector& a, const Vector& m, const Vector& b) const;

  /// "[[a, m], [0, b]]" with each corner printed as a coordinate tuple.
  std::string display(const Vector& x) const;

 private:
  TriangularAlgebra(Bimodule module, Algebra total);

  Bimodule module_;
  Algebra total_;
  Vector e_;
  Vector f_;
};

/// Checks that M's acting algebras are A and B, then builds Tri(A, M, B).
TriangularAlgebra build_triangular(const Algebra& A, const Bimodule& M, const Algebra& B);

/// A center element [[a, 0], [0, b]] with a m = m b for every m.
struct CenterElement {
  Vector a_part;
  Vector b_part;
};

/// Canonical basis of Z(Tri(A, M, B)), found by solving a m_j = m_j b.
std::vector<CenterElement> center_triangular(const TriangularAlgebra& T);
/// The same center as a subspace of the total algebra.
SubspaceBasis center_subspace(const TriangularAlgebra& T);

/// The isomorphism pi_A(Z) -> pi_B(Z) with a m = m eta(a), stored as the
/// images of the canonical basis of its domain.
struct Eta {
  SubspaceBasis domain;
  SubspaceBasis codomain;
  /// Column k is eta(domain.vectors()[k]).
  Matrix images;

  /// Throws std::invalid_argument if a is outside the domain.
  Vector apply(const Vector& a) const;
};

/// Throws std::logic_error if some a has no unique partner, which faithfulness
/// rules out.
Eta eta(const TriangularAlgebra& T);

}  // namespace trider
