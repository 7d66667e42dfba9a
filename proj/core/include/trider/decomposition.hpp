#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "trider/derivations.hpp"
#include "trider/extension.hpp"

namespace trider {

/// One level of the block form
///
///   L_n [[a, m], [0, b]] =
///     [[f_n(a) + p_n(b),
///       sum_{i+j=n, i<n} ((f_i(a) + p_i(b)) m_j - m_j (q_i(a) + g_i(b))) + h_n(m)],
///      [0, q_n(a) + g_n(b)]]
///
/// Level 0 holds f = id_A, g = id_B, h = id_M, p = q = 0 and m = 0.
struct LevelComponents {
  LinearMap f;  ///< A -> A
  LinearMap p;  ///< B -> Z(A)
  LinearMap q;  ///< A -> Z(B)
  LinearMap g;  ///< B -> B
  LinearMap h;  ///< M -> M
  Vector m;     ///< element of M
};

struct CanonicalComponents {
  std::vector<LevelComponents> levels;
};

/// Raised when a sequence does not have the block form of a Lie higher
/// derivation on a triangular algebra. Names the first failed identity.
class StructuralError : public std::runtime_error {
 public:
  StructuralError(std::string identity, std::size_t level, std::vector<std::size_t> witness);

  const std::string& identity() const { return identity_; }
  std::size_t level() const { return level_; }
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  std::string identity_;
  std::size_t level_;
  std::vector<std::size_t> witness_;
};

/// Reads the components off block evaluations of each L_n and recovers m_n
/// from L_n(e) by
///   m_n = pi_M L_n(e) - sum_{i=1}^{n-1} (f_i(1_A) m_{n-i} - m_{n-i} q_i(1_A)).
/// Throws StructuralError if q_n or p_n leave the centers, fail to kill
/// commutators, L_n(M) leaves M, or the block form does not give back L_n.
CanonicalComponents extract_canonical(const TriangularAlgebra& T, const HigherMapSequence& L);

/// Assembles the block form. The result has kind lie_higher.
HigherMapSequence reconstruct(const TriangularAlgebra& T, const CanonicalComponents& comps);

/// Per-level maps from T into the extension:
///   d_n  = iota_A f_n - tau_r^{-1} q_n     (A -> A0)
///   d'_n = iota_B g_n - tau_ell p_n        (B -> B0)
///   Delta_n [[a, m], [0, b]] =
///     [[d_n(a), sum_{i+j=n, i<n} (d_i(a) m_j - m_j d'_i(b)) + h_n(m)], [0, d'_n(b)]]
///   chi_n [[a, m], [0, b]] =
///     [[tau_r^{-1}(q_n(a)) + p_n(b), 0], [0, q_n(a) + tau_ell(p_n(b))]]
struct LevelDecomposition {
  LinearMap delta;
  LinearMap chi;
  LinearMap d;
  LinearMap d_prime;
};

struct ProperDecomposition {
  ExtendedTriangular extension;
  CanonicalComponents components;
  std::vector<LevelDecomposition> levels;
};

ProperDecomposition decompose(const TriangularAlgebra& T, const HigherMapSequence& L);
ProperDecomposition decompose(const ExtendedTriangular& ext, const HigherMapSequence& L);

/// Outcome of every properness check at one level.
struct LevelProperness {
  std::size_t level = 0;
  bool residual_zero = true;            ///< iota L_n = Delta_n + chi_n
  bool delta_multiplicative = true;     ///< Delta_n(xy) = sum Delta_i(x) Delta_j(y)
  bool chi_central = true;              ///< chi_n(x) commutes with all of the extension
  bool chi_central_corner_form = true;  ///< diagonal and c.exf = exf.c
  bool chi_kills_commutators = true;    ///< chi_n([x, y]) = 0
  bool h_left_compatible = true;        ///< h_n(am) = sum d_i(a) h_j(m)
  bool h_right_compatible = true;       ///< h_n(mb) = sum h_i(m) d'_j(b)
  bool d_multiplicative = true;         ///< d_n(aa') = sum d_p(a) d_q(a')
  bool d_prime_multiplicative = true;   ///< d'_n(bb') = sum d'_p(b) d'_q(b')
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

struct PropernessReport {
  std::vector<LevelProperness> levels;

  bool ok() const;
  std::size_t violation_count() const;
};

PropernessReport verify_properness(const TriangularAlgebra& T, const HigherMapSequence& L,
                                   const ProperDecomposition& dec);

/// Result of searching, level by level, for Delta_n + chi_n = iota L_n with
/// {Delta_i} a higher derivation into the extension, chi_n central and
/// vanishing on k-fold commutators. Each level fixes the particular solution
/// before moving on, so a level marked not found says nothing beyond this
/// greedy search.
struct PairSearchLevel {
  std::size_t level = 0;
  bool found = false;
  /// Dimension of the affine family of valid chi_n at this level.
  std::size_t freedom = 0;
};

struct PairSearchReport {
  std::size_t commutator_arity = 2;
  std::vector<PairSearchLevel> levels;
  /// Set when some level has no valid pair; later levels are not attempted.
  bool stopped_early = false;
};

PairSearchReport search_proper_pairs(const ExtendedTriangular& ext, const HigherMapSequence& L,
                                     std::size_t commutator_arity);

/// Tag required to call the open-problem probe.
struct experimental_t {
  explicit experimental_t() = default;
};
inline constexpr experimental_t experimental{};

/// Probe for Lie triple higher derivations: pair search with chi_n killing
/// double commutators, plus whether the Lie canonical block form could be
/// extracted. A negative outcome is a pipeline result, not a counterexample.
struct ConjectureProbe {
  PairSearchReport search;
  bool lie_canonical_form = false;
  std::string canonical_form_note;
};

ConjectureProbe probe_conjecture(const TriangularAlgebra& T, const HigherMapSequence& L, experimental_t);

}  // namespace trider
