#include "trider/derivations.hpp"

#include <random>
#include <stdexcept>

namespace trider {

namespace {

// The multilinear operation whose higher-derivation identity is imposed.
Vector evaluate(const Algebra& alg, DerivationKind kind, std::span<const Vector> args) {
  switch (kind) {
    case DerivationKind::higher: return alg.multiply(args[0], args[1]);
    case DerivationKind::lie_higher: return alg.bracket(args[0], args[1]);
    case DerivationKind::lie_triple_higher: return alg.bracket(alg.bracket(args[0], args[1]), args[2]);
  }
  throw std::logic_error("unknown derivation kind");
}

// Values of the operation on all basis tuples, indexed in lexicographic order.
std::vector<Vector> basis_table(const Algebra& alg, DerivationKind kind) {
  const auto d = alg.dim();
  std::vector<Vector> table;
  if (arity(kind) == 2) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Vector args[] = {alg.basis_vector(i), alg.basis_vector(j)};
        table.push_back(evaluate(alg, kind, args));
      }
  } else {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = 0; l < d; ++l) {
          const Vector args[] = {alg.basis_vector(i), alg.basis_vector(j), alg.basis_vector(l)};
          table.push_back(evaluate(alg, kind, args));
        }
  }
  return table;
}

std::vector<std::size_t> decode_tuple(std::size_t index, std::size_t d, std::size_t k) {
  std::vector<std::size_t> tuple(k);
  for (std::size_t pos = k; pos-- > 0;) {
    tuple[pos] = index % d;
    index /= d;
  }
  return tuple;
}

std::size_t tuple_count(std::size_t d, std::size_t k) { return k == 2 ? d * d : d * d * d; }

// Linear part of L_n(op(b...)) - sum_slots op(..., L_n b_slot, ...).
Matrix coefficient_matrix(const Algebra& alg, DerivationKind kind) {
  const auto d = alg.dim();
  const auto k = arity(kind);
  const auto table = basis_table(alg, kind);
  const auto tuples = tuple_count(d, k);
  Matrix coeffs(tuples * d, d * d);
  for (std::size_t t = 0; t < tuples; ++t) {
    const auto tuple = decode_tuple(t, d, k);
    for (std::size_t r = 0; r < d; ++r) {
      const auto row = t * d + r;
      for (std::size_t c = 0; c < d; ++c) coeffs(row, r * d + c) += table[t][c];
      for (std::size_t slot = 0; slot < k; ++slot) {
        // op(..., L b_tuple[slot], ...)_r = sum_s L[s][tuple[slot]] * op(..., b_s, ...)_r
        auto replaced = tuple;
        for (std::size_t s = 0; s < d; ++s) {
          replaced[slot] = s;
          std::size_t index = 0;
          for (auto v : replaced) index = index * d + v;
          coeffs(row, s * d + tuple[slot]) -= table[index][r];
        }
      }
    }
  }
  return coeffs;
}

// Cross terms sum op(L_{i1} b, L_{i2} b', ...) over compositions of n in which
// every part is below n.
Vector offset_vector(const Algebra& alg, DerivationKind kind, std::span<const LinearMap> prefix) {
  const auto d = alg.dim();
  const auto k = arity(kind);
  const auto n = prefix.size();
  const auto tuples = tuple_count(d, k);
  Vector offset(tuples * d, Scalar(0));
  if (n < 2) return offset;

  std::vector<std::vector<Vector>> images(n);
  for (std::size_t level = 0; level < n; ++level) {
    for (std::size_t i = 0; i < d; ++i) images[level].push_back(prefix[level].column(i));
  }

  std::vector<std::vector<std::size_t>> compositions;
  if (k == 2) {
    for (std::size_t a = 1; a < n; ++a) compositions.push_back({a, n - a});
  } else {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; a + b <= n; ++b) {
        const auto c = n - a - b;
        if (b < n && c < n) compositions.push_back({a, b, c});
      }
  }

  std::vector<Vector> args(k);
  for (std::size_t t = 0; t < tuples; ++t) {
    const auto tuple = decode_tuple(t, d, k);
    Vector sum(d, Scalar(0));
    for (const auto& comp : compositions) {
      for (std::size_t slot = 0; slot < k; ++slot) args[slot] = images[comp[slot]][tuple[slot]];
      sum += evaluate(alg, kind, args);
    }
    for (std::size_t r = 0; r < d; ++r) offset[t * d + r] = sum[r];
  }
  return offset;
}

Vector evaluate_sequence_side(const Algebra& alg, DerivationKind kind, const HigherMapSequence& seq,
                              std::size_t n, const std::vector<std::size_t>& tuple) {
  const auto k = tuple.size();
  Vector sum(alg.dim(), Scalar(0));
  std::vector<Vector> args(k);
  auto accumulate = [&](const std::vector<std::size_t>& comp) {
    for (std::size_t slot = 0; slot < k; ++slot) {
      args[slot] = seq.levels[comp[slot]] * alg.basis_vector(tuple[slot]);
    }
    sum += evaluate(alg, kind, args);
  };
  if (k == 2) {
    for (std::size_t a = 0; a <= n; ++a) accumulate({a, n - a});
  } else {
    for (std::size_t a = 0; a <= n; ++a)
      for (std::size_t b = 0; a + b <= n; ++b) accumulate({a, b, n - a - b});
  }
  return sum;
}

Scalar draw_coefficient(std::mt19937_64& rng) {
  const auto num = static_cast<long>(rng() % 19) - 9;
  const auto den = static_cast<long>(rng() % 9) + 1;
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

const char* to_string(DerivationKind kind) {
  switch (kind) {
    case DerivationKind::higher: return "higher";
    case DerivationKind::lie_higher: return "lie-higher";
    case DerivationKind::lie_triple_higher: return "lie-triple-higher";
  }
  return "?";
}

std::optional<DerivationKind> parse_derivation_kind(std::string_view text) {
  if (text == "higher") return DerivationKind::higher;
  if (text == "lie-higher") return DerivationKind::lie_higher;
  if (text == "lie-triple-higher") return DerivationKind::lie_triple_higher;
  return std::nullopt;
}

std::size_t arity(DerivationKind kind) { return kind == DerivationKind::lie_triple_higher ? 3 : 2; }

LevelSystem level_system(const Algebra& alg, DerivationKind kind, std::span<const LinearMap> prefix) {
  if (prefix.empty()) throw std::invalid_argument("level_system: prefix must contain L_0");
  return {coefficient_matrix(alg, kind), offset_vector(alg, kind, prefix)};
}

LevelSolver::LevelSolver(const Algebra& alg, DerivationKind kind)
    : alg_(alg), kind_(kind), coefficients_(coefficient_matrix(alg, kind)) {
  // Pivot columns of the transpose are a maximal independent set of rows.
  independent_rows_ = rref(coefficients_.transpose()).pivot_columns;
  reduced_ = Matrix(independent_rows_.size(), coefficients_.cols());
  for (std::size_t r = 0; r < independent_rows_.size(); ++r) {
    auto src = coefficients_.row(independent_rows_[r]);
    std::copy(src.begin(), src.end(), reduced_.row(r).begin());
  }
  homogeneous_ = nullspace(reduced_);
}

AffineSolutionSet LevelSolver::solve(std::span<const LinearMap> prefix) const {
  if (prefix.empty()) throw std::invalid_argument("LevelSolver::solve: prefix must contain L_0");
  const auto offset = offset_vector(alg_, kind_, prefix);
  Vector reduced_offset(independent_rows_.size());
  for (std::size_t r = 0; r < independent_rows_.size(); ++r) reduced_offset[r] = offset[independent_rows_[r]];
  auto solution = solve_affine(reduced_, reduced_offset);
  // The dropped rows are combinations of the kept ones, so the full system is
  // consistent exactly when the reduced solution satisfies all of it.
  if (solution.particular && coefficients_ * *solution.particular != offset) solution.particular.reset();
  return solution;
}

SubspaceBasis derivation_space(const Algebra& alg) {
  return LevelSolver(alg, DerivationKind::higher).homogeneous();
}

SubspaceBasis lie_derivation_space(const Algebra& alg) {
  return LevelSolver(alg, DerivationKind::lie_higher).homogeneous();
}

SubspaceBasis lie_triple_derivation_space(const Algebra& alg) {
  return LevelSolver(alg, DerivationKind::lie_triple_higher).homogeneous();
}

AffineSolutionSet extend_level(const Algebra& alg, DerivationKind kind, std::span<const LinearMap> prefix) {
  if (prefix.empty()) throw std::invalid_argument("extend_level: prefix must contain L_0");
  HigherMapSequence seq{kind, {prefix.begin(), prefix.end()}};
  if (!verify_sequence(alg, seq).ok()) {
    throw std::invalid_argument(std::string("extend_level: prefix is not a ") + to_string(kind) +
                                " derivation sequence");
  }
  auto solution = LevelSolver(alg, kind).solve(prefix);
  if (solution.empty()) {
    throw std::logic_error("extend_level: inconsistent level system for a verified prefix");
  }
  return solution;
}

AffineSolutionSet higher_extend(const Algebra& alg, std::span<const LinearMap> prefix) {
  return extend_level(alg, DerivationKind::higher, prefix);
}

AffineSolutionSet lie_higher_extend(const Algebra& alg, std::span<const LinearMap> prefix) {
  return extend_level(alg, DerivationKind::lie_higher, prefix);
}

AffineSolutionSet lie_triple_higher_extend(const Algebra& alg, std::span<const LinearMap> prefix) {
  return extend_level(alg, DerivationKind::lie_triple_higher, prefix);
}

HigherMapSequence sample_sequence(const Algebra& alg, DerivationKind kind, std::size_t levels,
                                  std::uint64_t seed) {
  const auto d = alg.dim();
  HigherMapSequence seq{kind, {Matrix::identity(d)}};
  if (levels == 0) return seq;
  const LevelSolver solver(alg, kind);
  std::mt19937_64 rng(seed);
  for (std::size_t n = 1; n <= levels; ++n) {
    const auto solution = solver.solve(seq.levels);
    if (solution.empty()) throw std::logic_error("sample_sequence: inconsistent level system");
    Vector x = *solution.particular;
    for (const auto& h : solution.homogeneous.vectors()) {
      const auto c = draw_coefficient(rng);
      if (sgn(c) != 0) x += c * h;
    }
    seq.levels.push_back(unflatten(x, d, d));
  }
  return seq;
}

SequenceReport verify_sequence(const Algebra& alg, const HigherMapSequence& seq) {
  SequenceReport report;
  const auto d = alg.dim();
  if (seq.levels.empty()) {
    report.first_violation = SequenceViolation{0, {}, "missing L_0"};
    return report;
  }
  for (std::size_t n = 0; n < seq.levels.size(); ++n) {
    if (seq.levels[n].rows() != d || seq.levels[n].cols() != d) {
      report.first_violation = SequenceViolation{n, {}, "shape"};
      return report;
    }
  }
  if (seq.levels[0] != Matrix::identity(d)) {
    report.first_violation = SequenceViolation{0, {}, "L_0 = id"};
    return report;
  }
  const auto k = arity(seq.kind);
  const auto tuples = tuple_count(d, k);
  std::vector<Vector> args(k);
  for (std::size_t n = 1; n < seq.levels.size(); ++n) {
    for (std::size_t t = 0; t < tuples; ++t) {
      const auto tuple = decode_tuple(t, d, k);
      for (std::size_t slot = 0; slot < k; ++slot) args[slot] = alg.basis_vector(tuple[slot]);
      const auto lhs = seq.levels[n] * evaluate(alg, seq.kind, args);
      if (lhs != evaluate_sequence_side(alg, seq.kind, seq, n, tuple)) {
        report.first_violation = SequenceViolation{n, tuple, std::string(to_string(seq.kind)) + " identity"};
        return report;
      }
    }
  }
  return report;
}

}  // namespace trider
