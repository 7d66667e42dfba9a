#include "doctest.h"
#include "support.hpp"

using namespace trider;

namespace {

Vector vec(std::vector<int> xs) {
  Vector v;
  for (int x : xs) v.push_back(Scalar(x));
  return v;
}

// Coordinates of a 2x2 upper triangular integer matrix in the basis e11, e12, e22.
Vector t2_coords(const std::vector<std::vector<int>>& m) { return vec({m[0][0], m[0][1], m[1][1]}); }

std::vector<std::vector<int>> matmul(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  std::vector<std::vector<int>> out(2, std::vector<int>(2, 0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// (x y) z = x (y z) on all basis triples, through the oracle product.
bool brute_associative(const Algebra& alg) {
  const oracle::Raw A(alg);
  for (std::size_t i = 0; i < A.d; ++i)
    for (std::size_t j = 0; j < A.d; ++j)
      for (std::size_t k = 0; k < A.d; ++k)
        if (A.mul(A.mul(A.e(i), A.e(j)), A.e(k)) != A.mul(A.e(i), A.mul(A.e(j), A.e(k)))) return false;
  return true;
}

bool brute_unital(const Algebra& alg) {
  const oracle::Raw A(alg);
  for (std::size_t i = 0; i < A.d; ++i)
    if (A.mul(alg.unit(), A.e(i)) != A.e(i) || A.mul(A.e(i), alg.unit()) != A.e(i)) return false;
  return true;
}

}  // namespace

TEST_CASE("multiply examples") {
  const auto t2 = standard::upper_triangular(2);
  const auto y = vec({3, -1, 5});
  CHECK(t2.multiply(t2.unit(), y) == y);

  const auto dual = standard::dual_numbers();
  CHECK(is_zero(dual.multiply(vec({0, 1}), vec({0, 1}))));

  const auto e11 = t2.basis_vector(standard::upper_triangular_index(2, 0, 0));
  const auto e12 = t2.basis_vector(standard::upper_triangular_index(2, 0, 1));
  CHECK(t2.multiply(e11, e12) == e12);
  CHECK(is_zero(t2.multiply(e12, e11)));

  // Every basis product of T2 against honest 2x2 matrix multiplication.
  const auto units = oracle::t2_units();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(t2.multiply(t2.basis_vector(i), t2.basis_vector(j)) == t2_coords(matmul(units[i], units[j])));

  CHECK_THROWS_AS(t2.multiply(vec({1, 0}), y), std::invalid_argument);
}

TEST_CASE("algebra shape checks") {
  CHECK_THROWS(Algebra(2, std::vector<Scalar>(7), vec({1, 0})));
  CHECK_THROWS(Algebra(2, std::vector<Scalar>(8), vec({1})));
}

TEST_CASE("validate_algebra examples") {
  CHECK(validate_algebra(standard::upper_triangular(2)).ok());
  CHECK(validate_algebra(standard::rationals()).ok());

  auto c = standard::split(2).structure_constants();
  c[1] += 1;  // e1 e1 = e1 + e2
  const Algebra broken(2, c, vec({1, 1}));
  const auto report = validate_algebra(broken);
  CHECK_FALSE(report.ok());
  bool quadruple = false;
  for (const auto& v : report.violations)
    if (v.law == "associativity" && v.witness.size() == 4) quadruple = true;
  CHECK(quadruple);
}

TEST_CASE("validate_algebra agrees with a brute-force triple check") {
  std::mt19937_64 rng(5);
  const std::vector<Algebra> seeds{standard::upper_triangular(2), standard::dual_numbers(), standard::split(3),
                                   standard::full_matrix(2)};
  for (const auto& base : seeds) {
    CHECK(validate_algebra(base).ok());
    for (int t = 0; t < 10; ++t) {
      auto c = base.structure_constants();
      c[rng() % c.size()] += Scalar(static_cast<long>(rng() % 5) - 2);
      const Algebra alg(base.dim(), c, base.unit());
      CHECK(validate_algebra(alg).ok() == (brute_associative(alg) && brute_unital(alg)));
    }
  }
}

TEST_CASE("center examples") {
  CHECK(center(standard::split(2)) == SubspaceBasis::full(2));
  const auto t2 = standard::upper_triangular(2);
  CHECK(center(t2) == SubspaceBasis::span(3, {t2.unit()}));
  CHECK(center(t2).dim() == 1);
  CHECK(center(standard::dual_numbers()) == SubspaceBasis::full(2));
}

TEST_CASE("center properties and oracle") {
  const std::vector<Algebra> algs{standard::upper_triangular(2), standard::upper_triangular(3), standard::dual_numbers(),
                                  standard::full_matrix(2), standard::split(3), standard::rationals()};
  for (const auto& alg : algs) {
    const auto z = center(alg);
    CHECK(z.contains(alg.unit()));
    for (const auto& v : z.vectors())
      for (std::size_t j = 0; j < alg.dim(); ++j) CHECK(is_zero(alg.bracket(v, alg.basis_vector(j))));
    CHECK(z.vectors() == oracle::brute_center(oracle::Raw(alg)));
  }
}

TEST_CASE("commutator_subspace examples") {
  CHECK(commutator_subspace(standard::split(3)).empty());
  CHECK(commutator_subspace(standard::dual_numbers()).empty());

  const auto t2 = standard::upper_triangular(2);
  const auto e12 = t2.basis_vector(standard::upper_triangular_index(2, 0, 1));
  CHECK(commutator_subspace(t2) == SubspaceBasis::span(3, {e12}));

  const auto m2 = standard::full_matrix(2);
  const auto comm = commutator_subspace(m2);
  CHECK(comm.dim() == 3);
  // Trace zero: coordinates of e11 and e22 sum to zero.
  for (const auto& v : comm.vectors()) CHECK(v[0] + v[3] == 0);
}

TEST_CASE("commutator_subspace is exactly the span of basis commutators") {
  for (const auto& alg : {standard::upper_triangular(3), standard::full_matrix(2), standard::upper_triangular(2)}) {
    const oracle::Raw A(alg);
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < A.d; ++i)
      for (std::size_t j = 0; j < A.d; ++j) gens.push_back(A.br(A.e(i), A.e(j)));
    const auto comm = commutator_subspace(alg);
    for (const auto& g : gens) CHECK(comm.contains(g));
    CHECK(comm.vectors() == oracle::canonical_span(gens, A.d));
  }
}

TEST_CASE("inner derivations satisfy Leibniz") {
  const auto t2 = standard::upper_triangular(3);
  const oracle::Raw A(t2);
  for (std::size_t x = 0; x < A.d; ++x) {
    const auto ad = inner_derivation(t2, A.e(x));
    for (std::size_t i = 0; i < A.d; ++i)
      for (std::size_t j = 0; j < A.d; ++j)
        CHECK(ad * A.mul(A.e(i), A.e(j)) == A.mul(ad * A.e(i), A.e(j)) + A.mul(A.e(i), ad * A.e(j)));
  }
}
