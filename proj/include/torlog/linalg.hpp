#ifndef TORLOG_LINALG_HPP
#define TORLOG_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "torlog/matrix.hpp"

namespace torlog {

/// Sum of the diagonal. Throws ShapeError on non-square input.
Scalar trace(const Matrix& m);

/// Rank by fraction-free (Bareiss) elimination on the row-scaled integer matrix.
std::size_t rank(const Matrix& m);

/// cols - rank: dimension of the kernel of m viewed as a map Q^cols -> Q^rows.
std::size_t kernel_dim(const Matrix& m);

/// Exact determinant, fraction-free. det of the 0x0 matrix is 1.
Scalar determinant(const Matrix& m);

/// Inverse by Gauss-Jordan. Throws DomainError when singular.
Matrix inverse(const Matrix& m);

/// Reduced row echelon form together with the pivot column of each nonzero row.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
RowEchelon row_echelon(const Matrix& m);

/// Columns form a basis of ker m.
Matrix kernel_basis(const Matrix& m);

/// Coefficients c_0..c_n of det(λI - m), c_n = 1. Hessenberg reduction, O(n^3).
std::vector<Scalar> characteristic_polynomial(const Matrix& m);

/// Sylvester test through pivots of symmetric elimination.
bool is_positive_definite(const Matrix& m);

/// Product of the nonzero eigenvalues of a symmetric positive-semidefinite
/// matrix, read off the characteristic polynomial as (-1)^(n-k) c_k with
/// k = kernel_dim(m). Positive semidefiniteness is decided from the sign
/// pattern of the characteristic polynomial. The 0x0 matrix and the zero
/// matrix have pseudo-determinant 1.
///
/// Throws ShapeError when m is not symmetric, DomainError when indefinite.
Scalar pseudo_det(const Matrix& m);

/// As above for a matrix self-adjoint with respect to the positive-definite
/// Gram form `gram` (gram * m symmetric). Such an m has a real spectrum, so the
/// same characteristic-polynomial sign test applies.
Scalar pseudo_det(const Matrix& m, const Matrix& gram);

/// Moore-Penrose inverse through a full-rank factorization m = F G:
/// m+ = G^T (G G^T)^-1 (F^T F)^-1 F^T.
Matrix pseudo_inverse(const Matrix& m);

/// Moore-Penrose inverse of m : (V, gram_domain) -> (W, gram_codomain), i.e. with
/// adjoints taken in the given inner products. Reduces to pseudo_inverse for
/// identity Gram matrices.
Matrix pseudo_inverse(const Matrix& m, const Matrix& gram_domain, const Matrix& gram_codomain);

/// In a full matrix algebra over Q, m is a finite sum of commutators iff its
/// trace vanishes.
bool is_sum_of_commutators(const Matrix& m);

using CommutatorPair = std::pair<Matrix, Matrix>;

/// Pairs (A_i, B_i) with sum_i [A_i, B_i] == m exactly; at most two pairs.
/// The off-diagonal part is [D, X] with D = diag(0, 1, ..., n-1); the
/// trace-free diagonal part is [U, L] with U superdiagonal partial sums and L
/// the unit subdiagonal. Throws DomainError when trace(m) != 0.
std::vector<CommutatorPair> commutator_witness(const Matrix& m);

/// sum_i [A_i, B_i] for a witness; `n` fixes the size for an empty list.
Matrix sum_of_commutators(const std::vector<CommutatorPair>& pairs, std::size_t n);

}  // namespace torlog

#endif  // TORLOG_LINALG_HPP
