#ifndef TORLOG_FREDHOLM_HPP
#define TORLOG_FREDHOLM_HPP

#include <optional>
#include <string>
#include <vector>

#include "torlog/linalg.hpp"
#include "torlog/random.hpp"

namespace torlog {

/// Q^source -> Q^target; every such map is Fredholm.
struct FredholmMap {
  Matrix z;  // target x source

  std::size_t source_dim() const { return z.cols(); }
  std::size_t target_dim() const { return z.rows(); }
};

/// (I - QZ) ⊕ (ZQ - I') on H ⊕ H', which equals [Ẑ, Q̂] - J with J = -I ⊕ I'.
struct BlockLog {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  Matrix m;
  Scalar trace;
};

/// Default parametrix: the Moore-Penrose inverse.
Matrix parametrix(const Matrix& z);

BlockLog log_fred(const Matrix& z, const Matrix& q);

/// Trace of the block log for the default parametrix.
long index_character(const Matrix& z);

/// Corner embeddings into F(H ⊕ H'): Ẑ in the (H', H) block, Q̂ in (H, H').
Matrix hat_z(const Matrix& z);
Matrix hat_q(const Matrix& q);
/// J = -I ⊕ I'.
Matrix j_matrix(std::size_t source_dim, std::size_t target_dim);

/// Outcome of a "≐ 0" check: the difference, its trace, a commutator witness
/// and whether an explicit decomposition built from the operators themselves
/// reproduces it.
struct WitnessReport {
  Matrix difference;
  Scalar trace;
  std::vector<CommutatorPair> witness;
  bool witness_verified = false;
  std::vector<CommutatorPair> explicit_form;
  bool explicit_verified = true;  // vacuous unless an explicit form is supplied

  bool ok() const { return sgn(trace) == 0 && witness_verified && explicit_verified; }
};

/// Certifies a trace-zero square matrix with commutator_witness.
WitnessReport certify(const Matrix& d);

/// D = log(z, q1) - log(z, q2) = [Ẑ, Q̂1 - Q̂2].
WitnessReport check_parametrix_independence(const Matrix& z, const Matrix& q1, const Matrix& q2);

/// For z : H -> H' and z2 : H' -> H'', in F(H ⊕ H' ⊕ H''):
/// D = η_{H'}(log z2 z) - η_{H''}(log z) - η_H(log z2), with pseudo-inverse
/// parametrices unless given. The explicit form writes D as [A, B] plus, when
/// the parametrix of z2 z is not q q2, the independence commutator.
WitnessReport check_additivity(const Matrix& z, const Matrix& z2, const std::optional<Matrix>& q = std::nullopt,
                               const std::optional<Matrix>& q2 = std::nullopt,
                               const std::optional<Matrix>& q_composite = std::nullopt);

/// Projection diagram with exact rows 0 -> V0 -> V1 -> V2 -> 0 (ranges of
/// p0, p1, p2) and 0 -> V0' -> V1' -> V2' -> 0, inside the split sequence
/// 0 -> H0 --incl--> H1 --proj--> H2 -> 0.
struct ProjectionDiagram {
  Matrix p0, p0_prime, p1, p1_prime, p2, p2_prime;
  Matrix incl;  // H1 x H0
  Matrix proj;  // H2 x H1
};

struct DiagramReport {
  long index0 = 0, index1 = 0, index2 = 0;  // Tr(P_j - P_j')
  long direct_index0 = 0, direct_index1 = 0, direct_index2 = 0;  // dim V_j - dim V_j' by rank
  bool additive = false;  // index1 == index0 + index2
  WitnessReport expression;  // (P1 - P1') - ι(P0 - P0') - s(P2 - P2')
};

/// Throws DomainError on non-idempotent input or rows that are not exact.
DiagramReport relative_index_diagram(const ProjectionDiagram& d);

/// Random diagram with dims <= max_dim for H1.
ProjectionDiagram random_projection_diagram(Rng& rng, std::size_t max_dim);

}  // namespace torlog

#endif  // TORLOG_FREDHOLM_HPP
