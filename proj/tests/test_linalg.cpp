#include <doctest.h>

#include "oracles.hpp"
#include "torlog/linalg.hpp"
#include "torlog/random.hpp"

using namespace torlog;

namespace {

const Matrix kRotation{{make_scalar(3, 5), make_scalar(-4, 5)}, {make_scalar(4, 5), make_scalar(3, 5)}};

}  // namespace

TEST_CASE("trace") {
  CHECK(trace(Matrix::identity(3)) == 3);
  CHECK(trace(Matrix{{1, 2}, {3, 5}}) == 6);
  CHECK_THROWS_AS(trace(Matrix(2, 3)), ShapeError);
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const Matrix a = random_matrix(rng, 4, 4), b = random_matrix(rng, 4, 4);
    CHECK(trace(commutator(a, b)) == 0);
    CHECK(trace(a * b) == trace(b * a));
  }
}

TEST_CASE("kernel_dim and rank") {
  CHECK(kernel_dim(Matrix(2, 3)) == 3);
  CHECK(kernel_dim(Matrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}) == 2);
  CHECK(kernel_dim(Matrix{{2, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 3, 1}, {0, 0, 0, -1}}) == 0);
  CHECK(rank(Matrix(0, 4)) == 0);
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const auto r = static_cast<std::size_t>(rng.uniform(0, 4)), c = static_cast<std::size_t>(rng.uniform(0, 4));
    const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(std::min(r, c))));
    Matrix m = random_matrix_of_rank(rng, r, c, k);
    m *= make_scalar(1, rng.uniform(1, 5));
    CHECK(rank(m) == oracle::minor_rank(m));
    CHECK(rank(m) == k);
    const Matrix ker = kernel_basis(m);
    CHECK(ker.cols() == kernel_dim(m));
    CHECK((m * ker).is_zero());
    CHECK(rank(ker) == ker.cols());
  }
}

TEST_CASE("determinant and inverse") {
  CHECK(determinant(Matrix()) == 1);
  CHECK(determinant(kRotation - Matrix::identity(2)) == make_scalar(4, 5));
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    Matrix m = random_matrix(rng, n, n);
    m(0, 0) += make_scalar(1, 3);
    CHECK(determinant(m) == oracle::leibniz_det(m));
    if (sgn(determinant(m)) != 0) {
      CHECK(m * inverse(m) == Matrix::identity(n));
    } else {
      CHECK_THROWS_AS(inverse(m), DomainError);
    }
  }
}

TEST_CASE("characteristic polynomial against determinant oracle") {
  Rng rng(4);
  for (int t = 0; t < 60; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(0, 5));
    Matrix m = random_matrix(rng, n, n, -2, 2);
    if (rng.coin() && n > 1) m(n - 1, 0) = 0;
    const auto c = characteristic_polynomial(m);
    REQUIRE(c.size() == n + 1);
    CHECK(c[n] == 1);
    // A degree-n polynomial is fixed by n+1 values.
    for (long x = -1; x < static_cast<long>(n); ++x) {
      Scalar px = 0, pow = 1;
      for (const auto& ci : c) {
        px += ci * pow;
        pow *= x;
      }
      CHECK(px == oracle::leibniz_det(Matrix::identity(n) * Scalar(x) - m));
    }
  }
}

TEST_CASE("positive definiteness") {
  CHECK(is_positive_definite(Matrix::identity(3)));
  CHECK(is_positive_definite(Matrix()));
  CHECK_FALSE(is_positive_definite(Matrix{{1, 2}, {2, 1}}));
  CHECK_FALSE(is_positive_definite(Matrix{{0, 0}, {0, 1}}));
  CHECK_FALSE(is_positive_definite(Matrix{{2, 1}, {0, 2}}));
  Rng rng(5);
  for (int t = 0; t < 30; ++t) CHECK(is_positive_definite(random_gram(rng, 4)));
}

TEST_CASE("pseudo_det") {
  CHECK(pseudo_det(Matrix::identity(4)) == 1);
  CHECK(pseudo_det(Matrix::diagonal({2, 3, 0})) == 6);
  CHECK(pseudo_det(Matrix()) == 1);
  CHECK(pseudo_det(Matrix(3, 3)) == 1);
  const Matrix e = kRotation - Matrix::identity(2);
  CHECK(pseudo_det(e * e.transpose()) == make_scalar(16, 25));
  CHECK_THROWS_AS(pseudo_det(Matrix{{1, 2}, {0, 1}}), ShapeError);
  CHECK_THROWS_AS(pseudo_det(Matrix::diagonal({1, -1})), DomainError);
  CHECK_THROWS_AS(pseudo_det(Matrix::diagonal({2, 0, -1})), DomainError);

  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n)));
    const Matrix a = random_matrix_of_rank(rng, n, n, k);
    const Matrix m = a.transpose() * a;
    const Matrix p = oracle::permutation_matrix(rng.permutation(n));
    CHECK(pseudo_det(p.transpose() * m * p) == pseudo_det(m));
    if (k == n) {
      CHECK(pseudo_det(m) == determinant(m));
    }
    // m preserves the row space of a; with B a basis of it, the restriction
    // has determinant det(B^T m B) / det(B^T B).
    if (k > 0) {
      const Matrix b = row_echelon(a).reduced.block(0, 0, k, n).transpose();
      REQUIRE(rank(b) == k);
      CHECK(pseudo_det(m) == determinant(b.transpose() * m * b) / determinant(b.transpose() * b));
    }
  }
}

TEST_CASE("pseudo_det for a Gram-self-adjoint matrix") {
  Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    const Matrix g = random_gram(rng, n);
    const Matrix a = random_matrix_of_rank(rng, n, n, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n))));
    // a* a with a* = g^-1 a^T g.
    const Matrix m = inverse(g) * a.transpose() * g * a;
    const Scalar v = pseudo_det(m, g);
    CHECK(sgn(v) > 0);
    if (rank(a) == n) {
      CHECK(v == determinant(m));
    }
  }
  CHECK_THROWS_AS(pseudo_det(Matrix{{1, 1}, {0, 1}}, Matrix::identity(2)), ShapeError);
}

TEST_CASE("pseudo_inverse satisfies the Penrose identities") {
  CHECK(pseudo_inverse(Matrix{{1, 0}, {0, 0}}) == (Matrix{{1, 0}, {0, 0}}));
  CHECK(pseudo_inverse(Matrix(2, 3)) == Matrix(3, 2));
  const Matrix inv = Matrix{{2, 1}, {1, 1}};
  CHECK(pseudo_inverse(inv) == inverse(inv));

  Rng rng(8);
  for (int t = 0; t < 500; ++t) {
    const auto r = static_cast<std::size_t>(rng.uniform(0, 8)), c = static_cast<std::size_t>(rng.uniform(0, 8));
    const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(std::min(r, c))));
    const Matrix a = random_matrix_of_rank(rng, r, c, k);
    const Matrix x = pseudo_inverse(a);
    REQUIRE(x.rows() == c);
    REQUIRE(x.cols() == r);
    CHECK(a * x * a == a);
    CHECK(x * a * x == x);
    CHECK((a * x).is_symmetric());
    CHECK((x * a).is_symmetric());
  }
}

TEST_CASE("weighted pseudo_inverse") {
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    const auto r = static_cast<std::size_t>(rng.uniform(0, 5)), c = static_cast<std::size_t>(rng.uniform(0, 5));
    const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(std::min(r, c))));
    const Matrix a = random_matrix_of_rank(rng, r, c, k);
    const Matrix gv = random_gram(rng, c), gw = random_gram(rng, r);
    const Matrix x = pseudo_inverse(a, gv, gw);
    CHECK(a * x * a == a);
    CHECK(x * a * x == x);
    CHECK((gw * a * x).is_symmetric());
    CHECK((gv * x * a).is_symmetric());
  }
  const Matrix a{{1, 2}, {2, 4}, {0, 1}};
  CHECK(pseudo_inverse(a, Matrix::identity(2), Matrix::identity(3)) == pseudo_inverse(a));
}

TEST_CASE("commutator calculus") {
  CHECK(is_sum_of_commutators(Matrix{{5, 1}, {2, -5}}));
  CHECK_FALSE(is_sum_of_commutators(Matrix::identity(2)));
  CHECK_THROWS_AS(is_sum_of_commutators(Matrix(1, 2)), ShapeError);
  CHECK(commutator_witness(Matrix(3, 3)).empty());
  CHECK_THROWS_AS(commutator_witness(Matrix::identity(2)), DomainError);

  const Matrix nil{{0, 1}, {0, 0}};
  const auto w = commutator_witness(nil);
  CHECK(w.size() == 1);
  CHECK(sum_of_commutators(w, 2) == nil);
  const Matrix diag = Matrix::diagonal({1, -1});
  CHECK(sum_of_commutators(commutator_witness(diag), 2) == diag);

  Rng rng(10);
  for (int t = 0; t < 200; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 7));
    Matrix m = random_matrix(rng, n, n);
    m(n - 1, n - 1) -= trace(m);
    m *= make_scalar(1, rng.uniform(1, 4));
    const auto pairs = commutator_witness(m);
    CHECK(pairs.size() <= 2);
    CHECK(sum_of_commutators(pairs, n) == m);
  }
}
