#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trider/algebra.hpp"

namespace trider {

/// Which defining identity a sequence L_0, L_1, ... satisfies:
///   higher:            L_n(xy)        = sum_{i+j=n}   L_i(x) L_j(y)
///   lie_higher:        L_n([x,y])     = sum_{i+j=n}   [L_i(x), L_j(y)]
///   lie_triple_higher: L_n([[x,y],z]) = sum_{i+j+k=n} [[L_i(x), L_j(y)], L_k(z)]
enum class DerivationKind { higher, lie_higher, lie_triple_higher };

const char* to_string(DerivationKind kind);
/// Accepts "higher", "lie-higher", "lie-triple-higher".
std::optional<DerivationKind> parse_derivation_kind(std::string_view text);
/// 2 for the bilinear kinds, 3 for the triple kind.
std::size_t arity(DerivationKind kind);

/// L_0 .. L_N on a fixed algebra; L_0 is the identity.
struct HigherMapSequence {
  DerivationKind kind = DerivationKind::lie_higher;
  std::vector<LinearMap> levels;

  std::size_t top_level() const { return levels.empty() ? 0 : levels.size() - 1; }
};

/// The level-n identity as coefficients * flatten(L_n) = offset, where n is
/// the length of the prefix L_0 .. L_{n-1}. Unknown L_n[r][c] sits in column
/// r * dim + c; rows run over basis tuples and output coordinates.
struct LevelSystem {
  Matrix coefficients;
  Vector offset;
};

LevelSystem level_system(const Algebra& alg, DerivationKind kind, std::span<const LinearMap> prefix);

/// Solves successive levels for one (algebra, kind). The coefficient matrix
/// does not depend on the level, so its independent rows are found once.
class LevelSolver {
 public:
  LevelSolver(const Algebra& alg, DerivationKind kind);

  const Algebra& algebra() const { return alg_; }
  DerivationKind kind() const { return kind_; }
  /// Flattened level-1 solution space, shared by every level.
  const SubspaceBasis& homogeneous() const { return homogeneous_; }

  /// All valid L_n for the given prefix; empty if the system is inconsistent.
  AffineSolutionSet solve(std::span<const LinearMap> prefix) const;

 private:
  Algebra alg_;
  DerivationKind kind_;
  Matrix coefficients_;
  std::vector<std::size_t> independent_rows_;
  Matrix reduced_;
  SubspaceBasis homogeneous_;
};

/// Flattened bases (row-major d x d matrices) of the level-1 spaces.
SubspaceBasis derivation_space(const Algebra& alg);
SubspaceBasis lie_derivation_space(const Algebra& alg);
SubspaceBasis lie_triple_derivation_space(const Algebra& alg);

/// Valid next levels after a verified prefix (prefix[0] must be the
/// identity). Throws std::invalid_argument if the prefix does not satisfy the
/// identities of `kind`, and std::logic_error if a verified prefix yields an
/// inconsistent system, which cannot happen over Q.
AffineSolutionSet extend_level(const Algebra& alg, DerivationKind kind, std::span<const LinearMap> prefix);
AffineSolutionSet higher_extend(const Algebra& alg, std::span<const LinearMap> prefix);
AffineSolutionSet lie_higher_extend(const Algebra& alg, std::span<const LinearMap> prefix);
AffineSolutionSet lie_triple_higher_extend(const Algebra& alg, std::span<const LinearMap> prefix);

/// Builds L_0 .. L_levels. Each level is the particular solution plus a random
/// combination of the homogeneous basis with coefficients p/q, |p| <= 9,
/// 1 <= q <= 9, drawn from a generator seeded with `seed`.
HigherMapSequence sample_sequence(const Algebra& alg, DerivationKind kind, std::size_t levels,
                                  std::uint64_t seed);

struct SequenceViolation {
  std::size_t level = 0;
  std::vector<std::size_t> tuple;
  std::string law;
};

struct SequenceReport {
  std::optional<SequenceViolation> first_violation;
  bool ok() const { return !first_violation.has_value(); }
};

/// Re-evaluates every defining identity on all basis tuples, level by level.
SequenceReport verify_sequence(const Algebra& alg, const HigherMapSequence& seq);

}  // namespace trider
