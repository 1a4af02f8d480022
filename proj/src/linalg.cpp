#include "torlog/linalg.hpp"

#include <string>
#include <utility>

namespace torlog {

namespace {

void require_square(const Matrix& m, const char* what) {
  if (!m.is_square()) {
    throw ShapeError(std::string(what) + " needs a square matrix, got " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
  }
}

/// Integer matrix whose rows are the rows of m scaled by the lcm of their
/// denominators; `scale` receives the product of the scale factors.
std::vector<std::vector<Integer>> integer_rows(const Matrix& m, Integer& scale) {
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    scale *= l;
  }
  return a;
}

struct BareissResult {
  std::size_t rank = 0;
  Integer det;  // only meaningful for square input of full rank
};

BareissResult bareiss(std::vector<std::vector<Integer>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  BareissResult out;
  Integer prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  out.rank = r;
  out.det = rows == 0 ? Integer(1) : Integer(sign * prev);
  return out;
}

using Poly = std::vector<Scalar>;  // low to high

}  // namespace

Scalar trace(const Matrix& m) {
  require_square(m, "trace");
  Scalar t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  Integer scale;
  return bareiss(integer_rows(m, scale), m.cols()).rank;
}

std::size_t kernel_dim(const Matrix& m) { return m.cols() - rank(m); }

Scalar determinant(const Matrix& m) {
  require_square(m, "determinant");
  if (m.rows() == 0) return 1;
  Integer scale;
  const auto res = bareiss(integer_rows(m, scale), m.cols());
  if (res.rank < m.rows()) return 0;
  Scalar d(res.det, scale);
  d.canonicalize();
  return d;
}

RowEchelon row_echelon(const Matrix& m) {
  RowEchelon out{m, {}};
  Matrix& a = out.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Scalar inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

Matrix inverse(const Matrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(n));
  const auto ech = row_echelon(aug);
  if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) throw DomainError("matrix is singular");
  return ech.reduced.block(0, n, n, n);
}

Matrix kernel_basis(const Matrix& m) {
  const auto ech = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  Matrix basis(m.cols(), m.cols() - ech.pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) basis(ech.pivots[r], k) = -ech.reduced(r, free);
    ++k;
  }
  return basis;
}

std::vector<Scalar> characteristic_polynomial(const Matrix& m) {
  require_square(m, "characteristic_polynomial");
  const std::size_t n = m.rows();
  Matrix h = m;
  // Similarity transform to upper Hessenberg form.
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::size_t i = k;
    while (i < n && sgn(h(i, k - 1)) == 0) ++i;
    if (i == n) continue;
    if (i != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(k, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, k));
    }
    const Scalar pivot = h(k, k - 1);
    for (i = k + 1; i < n; ++i) {
      if (sgn(h(i, k - 1)) == 0) continue;
      const Scalar u = h(i, k - 1) / pivot;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(k, j);
      for (std::size_t j = 0; j < n; ++j) h(j, k) += u * h(j, i);
    }
  }
  // p_k(λ) = (λ - h_kk) p_{k-1} - sum_{i<k} h_ik (h_{k,k-1} ... h_{i+1,i}) p_{i-1}, 1-based.
  std::vector<Poly> p(n + 1);
  p[0] = {Scalar(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly next(k + 1);
    for (std::size_t j = 0; j < p[k - 1].size(); ++j) {
      next[j + 1] += p[k - 1][j];
      next[j] -= h(k - 1, k - 1) * p[k - 1][j];
    }
    Scalar t = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      t *= h(i, i - 1);
      if (sgn(t) == 0) break;
      const Scalar f = h(i - 1, k - 1) * t;
      if (sgn(f) != 0)
        for (std::size_t j = 0; j < p[i - 1].size(); ++j) next[j] -= f * p[i - 1][j];
    }
    p[k] = std::move(next);
  }
  return p[n];
}

bool is_positive_definite(const Matrix& m) {
  if (!m.is_symmetric()) return false;
  Matrix a = m;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      const Scalar f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

namespace {

Scalar pseudo_det_real_spectrum(const Matrix& m) {
  const std::size_t n = m.rows();
  const auto c = characteristic_polynomial(m);
  for (std::size_t j = 0; j <= n; ++j) {
    const int s = ((n - j) % 2 == 0) ? sgn(c[j]) : -sgn(c[j]);
    if (s < 0) throw DomainError("matrix is not positive semidefinite");
  }
  const std::size_t k = kernel_dim(m);
  Scalar v = ((n - k) % 2 == 0) ? c[k] : Scalar(-c[k]);
  if (sgn(v) <= 0) throw DomainError("matrix is not positive semidefinite");
  return v;
}

}  // namespace

Scalar pseudo_det(const Matrix& m) {
  if (!m.is_symmetric()) throw ShapeError("pseudo_det needs a symmetric matrix");
  return pseudo_det_real_spectrum(m);
}

Scalar pseudo_det(const Matrix& m, const Matrix& gram) {
  require_square(m, "pseudo_det");
  if (gram.rows() != m.rows() || !gram.is_square()) throw ShapeError("Gram matrix size does not match");
  if (!is_positive_definite(gram)) throw DomainError("Gram matrix is not positive definite");
  if (!(gram * m).is_symmetric()) throw ShapeError("matrix is not self-adjoint for the Gram form");
  return pseudo_det_real_spectrum(m);
}

namespace {

struct FullRankFactors {
  Matrix left;   // rows x r, pivot columns of m
  Matrix right;  // r x cols, nonzero rows of rref(m)
};

FullRankFactors full_rank_factorization(const Matrix& m) {
  const auto ech = row_echelon(m);
  const std::size_t r = ech.pivots.size();
  FullRankFactors f{Matrix(m.rows(), r), ech.reduced.block(0, 0, r, m.cols())};
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) f.left(i, k) = m(i, ech.pivots[k]);
  return f;
}

}  // namespace

Matrix pseudo_inverse(const Matrix& m) {
  const auto f = full_rank_factorization(m);
  if (f.left.cols() == 0) return Matrix(m.cols(), m.rows());
  const Matrix gt = f.right.transpose();
  const Matrix ft = f.left.transpose();
  return gt * inverse(f.right * gt) * inverse(ft * f.left) * ft;
}

Matrix pseudo_inverse(const Matrix& m, const Matrix& gram_domain, const Matrix& gram_codomain) {
  if (gram_domain.rows() != m.cols() || gram_codomain.rows() != m.rows()) {
    throw ShapeError("Gram matrices do not match the map");
  }
  const auto f = full_rank_factorization(m);
  if (f.left.cols() == 0) return Matrix(m.cols(), m.rows());
  // Adjoints: F* = F^T Gw, G* = Gv^-1 G^T.
  const Matrix f_adj = f.left.transpose() * gram_codomain;
  const Matrix g_adj = inverse(gram_domain) * f.right.transpose();
  return g_adj * inverse(f.right * g_adj) * inverse(f_adj * f.left) * f_adj;
}

bool is_sum_of_commutators(const Matrix& m) { return sgn(trace(m)) == 0; }

std::vector<CommutatorPair> commutator_witness(const Matrix& m) {
  if (!is_sum_of_commutators(m)) throw DomainError("matrix has nonzero trace " + to_string(trace(m)));
  const std::size_t n = m.rows();
  std::vector<CommutatorPair> pairs;

  Matrix d(n, n), x(n, n);
  bool off_diagonal = false;
  for (std::size_t i = 0; i < n; ++i) {
    d(i, i) = static_cast<long>(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || sgn(m(i, j)) == 0) continue;
      x(i, j) = m(i, j) / Scalar(static_cast<long>(i) - static_cast<long>(j));
      off_diagonal = true;
    }
  }
  if (off_diagonal) pairs.emplace_back(std::move(d), std::move(x));

  Matrix u(n, n), l(n, n);
  bool diagonal = false;
  Scalar partial = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    partial += m(i, i);
    u(i, i + 1) = partial;
    l(i + 1, i) = 1;
    diagonal = diagonal || sgn(m(i, i)) != 0;
  }
  if (diagonal) pairs.emplace_back(std::move(u), std::move(l));
  return pairs;
}

Matrix sum_of_commutators(const std::vector<CommutatorPair>& pairs, std::size_t n) {
  Matrix s(n, n);
  for (const auto& [a, b] : pairs) s += commutator(a, b);
  return s;
}

}  // namespace torlog
