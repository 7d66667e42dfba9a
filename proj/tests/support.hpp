#pragma once

// Independent oracles. Elimination, products and the linear systems below are
// written against raw structure constants so they share no code path with the
// library solvers they check.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "trider/decomposition.hpp"
#include "trider/standard.hpp"

namespace oracle {

using trider::Scalar;
using trider::Vector;
using Grid = std::vector<std::vector<Scalar>>;

struct Reduced {
  Grid grid;
  std::vector<std::size_t> pivots;
};

inline Reduced gauss_jordan(Grid g, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < g.size(); ++col) {
    std::size_t pick = row;
    while (pick < g.size() && g[pick][col] == 0) ++pick;
    if (pick == g.size()) continue;
    std::swap(g[row], g[pick]);
    const Scalar lead = g[row][col];
    for (auto& x : g[row]) x /= lead;
    for (std::size_t r = 0; r < g.size(); ++r) {
      if (r == row || g[r][col] == 0) continue;
      const Scalar factor = g[r][col];
      for (std::size_t c = 0; c < g[r].size(); ++c) g[r][c] -= factor * g[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(g), pivots};
}

/// Nonzero rows of the reduced echelon form of the stacked generators.
inline std::vector<Vector> canonical_span(const std::vector<Vector>& gens, std::size_t n) {
  if (gens.empty()) return {};
  auto red = gauss_jordan(gens, n);
  red.grid.resize(red.pivots.size());
  return red.grid;
}

/// Canonical basis of {v : g v = 0}; g has `cols` columns.
inline std::vector<Vector> kernel(const Grid& g, std::size_t cols) {
  const auto red = gauss_jordan(g, cols);
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(red.pivots.begin(), red.pivots.end(), free) != red.pivots.end()) continue;
    Vector v(cols, Scalar(0));
    v[free] = 1;
    for (std::size_t k = 0; k < red.pivots.size(); ++k) v[red.pivots[k]] = -red.grid[k][free];
    basis.push_back(std::move(v));
  }
  return canonical_span(basis, cols);
}

/// Determinant by cofactor expansion along the first row.
inline Scalar det(const Grid& g) {
  const std::size_t n = g.size();
  if (n == 0) return 1;
  if (n == 1) return g[0][0];
  Scalar total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (g[0][c] == 0) continue;
    Grid minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Scalar> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(g[r][k]);
      minor.push_back(row);
    }
    const Scalar term = g[0][c] * det(minor);
    total += (c % 2 == 0) ? term : Scalar(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Largest k with a nonzero k x k minor. Exponential; small matrices only.
inline std::size_t rank_by_minors(const Grid& g, std::size_t cols) {
  for (std::size_t k = std::min(g.size(), cols); k > 0; --k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(g.size(), k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        Grid m;
        for (auto i : r) {
          std::vector<Scalar> row;
          for (auto j : c) row.push_back(g[i][j]);
          m.push_back(row);
        }
        if (det(m) != 0) return k;
      }
    }
  }
  return 0;
}

inline Grid to_grid(const trider::Matrix& m) {
  Grid g(m.rows(), std::vector<Scalar>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) g[r][c] = m(r, c);
  return g;
}

/// An algebra seen only through its structure constant tensor.
struct Raw {
  std::size_t d;
  std::vector<Scalar> c;

  explicit Raw(const trider::Algebra& alg) : d(alg.dim()), c(alg.structure_constants()) {}

  Vector mul(const Vector& x, const Vector& y) const {
    Vector out(d, Scalar(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (y[j] == 0) continue;
        for (std::size_t k = 0; k < d; ++k) out[k] += x[i] * y[j] * c[(i * d + j) * d + k];
      }
    }
    return out;
  }
  Vector br(const Vector& x, const Vector& y) const {
    auto a = mul(x, y);
    const auto b = mul(y, x);
    for (std::size_t k = 0; k < d; ++k) a[k] -= b[k];
    return a;
  }
  Vector e(std::size_t i) const {
    Vector v(d, Scalar(0));
    v[i] = 1;
    return v;
  }
};

enum class Law { derivation, lie, lie_triple };

/// Solution space of the level-1 identity for every d x d matrix, built by
/// plugging in each matrix unit E_pq and reading off the residual of the law.
/// Unknown E_pq sits at index p * d + q.
inline std::vector<Vector> brute_space(const Raw& A, Law law) {
  const std::size_t d = A.d;
  std::vector<Vector> columns;
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = 0; q < d; ++q) {
      // E_pq sends b_q to b_p and every other basis vector to 0.
      auto D = [&](const Vector& x) {
        Vector out(d, Scalar(0));
        out[p] = x[q];
        return out;
      };
      Vector col;
      auto push = [&](const Vector& lhs, const std::vector<Vector>& rhs) {
        for (std::size_t k = 0; k < d; ++k) {
          Scalar r = lhs[k];
          for (const auto& t : rhs) r -= t[k];
          col.push_back(r);
        }
      };
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          const auto x = A.e(i), y = A.e(j);
          if (law == Law::derivation) {
            push(D(A.mul(x, y)), {A.mul(D(x), y), A.mul(x, D(y))});
          } else if (law == Law::lie) {
            push(D(A.br(x, y)), {A.br(D(x), y), A.br(x, D(y))});
          } else {
            for (std::size_t k = 0; k < d; ++k) {
              const auto z = A.e(k);
              push(D(A.br(A.br(x, y), z)),
                   {A.br(A.br(D(x), y), z), A.br(A.br(x, D(y)), z), A.br(A.br(x, y), D(z))});
            }
          }
        }
      }
      columns.push_back(std::move(col));
    }
  }
  Grid g(columns.front().size(), std::vector<Scalar>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < columns[c].size(); ++r) g[r][c] = columns[c][r];
  return kernel(g, d * d);
}

inline std::vector<Vector> brute_center(const Raw& A) {
  const std::size_t d = A.d;
  Grid g;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<Scalar> row(d);
      for (std::size_t u = 0; u < d; ++u) row[u] = A.br(A.e(u), A.e(j))[k];
      g.push_back(row);
    }
  }
  return kernel(g, d);
}

/// Matrices of the regular 2 x 2 upper triangular representation of T2,
/// basis e11, e12, e22.
inline std::vector<std::vector<std::vector<int>>> t2_units() {
  return {{{1, 0}, {0, 0}}, {{0, 1}, {0, 0}}, {{0, 0}, {0, 1}}};
}

}  // namespace oracle

namespace fixture {

struct Corpus {
  std::string name;
  trider::TriangularAlgebra T;
};

inline std::vector<Corpus> corpus() {
  std::vector<Corpus> out;
  for (auto& e : trider::standard::seed_corpus()) out.push_back({e.name, trider::TriangularAlgebra::build(e.module)});
  return out;
}

inline trider::Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  trider::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const long num = static_cast<long>(rng() % 7) - 3;
      m(r, c) = trider::Scalar(num) / trider::Scalar(static_cast<long>(rng() % 3) + 1);
    }
  return m;
}

}  // namespace fixture
