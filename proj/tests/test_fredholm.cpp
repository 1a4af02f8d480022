#include <doctest.h>

#include "oracles.hpp"
#include "torlog/fredholm.hpp"

using namespace torlog;

TEST_CASE("parametrix") {
  const Matrix inv{{2, 1}, {1, 1}};
  CHECK(parametrix(inv) == inverse(inv));
  CHECK(parametrix(Matrix(3, 2)) == Matrix(2, 3));
  CHECK(parametrix(Matrix{{1, 0}, {0, 0}}) == (Matrix{{1, 0}, {0, 0}}));
}

TEST_CASE("log_fred") {
  const Matrix inv{{2, 1}, {1, 1}};
  CHECK(log_fred(inv, inverse(inv)).m.is_zero());

  const BlockLog zero = log_fred(Matrix(3, 2), Matrix(2, 3));
  CHECK(zero.m == direct_sum(Matrix::identity(2), -Matrix::identity(3)));
  CHECK(zero.trace == -1);

  const Matrix z{{1, 0, 0}, {0, 2, 0}};
  CHECK(log_fred(z, parametrix(z)).trace == 1);
  CHECK_THROWS_AS(log_fred(z, Matrix(2, 2)), ShapeError);

  Rng rng(50);
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(0, 5)), n1 = static_cast<std::size_t>(rng.uniform(0, 5));
    const Matrix zz = random_matrix(rng, n1, n), q = random_matrix(rng, n, n1);
    CHECK(log_fred(zz, q).m == commutator(hat_z(zz), hat_q(q)) - j_matrix(n, n1));
  }
}

TEST_CASE("index_character") {
  CHECK(index_character(Matrix::identity(4)) == 0);
  CHECK(index_character(Matrix(3, 2)) == -1);
  CHECK(index_character(Matrix{{1, 2, 3}, {0, 1, 1}}) == 1);
  Rng rng(51);
  for (int t = 0; t < 200; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(0, 4)), n1 = static_cast<std::size_t>(rng.uniform(0, 4));
    const Matrix z = random_matrix_of_rank(rng, n1, n, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(std::min(n, n1)))));
    const long r = static_cast<long>(oracle::minor_rank(z));
    CHECK(index_character(z) == (static_cast<long>(n) - r) - (static_cast<long>(n1) - r));
    CHECK(index_character(z) == static_cast<long>(kernel_dim(z)) - static_cast<long>(kernel_dim(z.transpose())));
  }
}

TEST_CASE("parametrix independence") {
  const Matrix z{{1, 2}, {3, 4}};
  const Matrix q = inverse(z);
  const auto same = check_parametrix_independence(z, q, q);
  CHECK(same.difference.is_zero());
  CHECK(same.witness.empty());
  CHECK(same.ok());

  // q1 = z^-1 + v w^T still satisfies q1 z - I, z q1 - I finite rank.
  const Matrix v{{1}, {-1}}, w{{2}, {1}};
  const auto pert = check_parametrix_independence(z, q + v * w.transpose(), q);
  CHECK(pert.ok());
  CHECK_FALSE(pert.difference.is_zero());

  Rng rng(52);
  for (int t = 0; t < 100; ++t) {
    const Matrix zz = random_matrix_of_rank(rng, 4, 4, 2);
    const Matrix q1 = parametrix(zz);
    const Matrix q2 = q1 + random_matrix_of_rank(rng, 4, 4, 1);
    const auto r = check_parametrix_independence(zz, q1, q2);
    CHECK(r.trace == 0);
    CHECK(r.ok());
  }
}

TEST_CASE("additivity") {
  const Matrix inv{{2, 1}, {1, 1}};
  CHECK(check_additivity(inv, inv).difference.is_zero());

  const Matrix f(3, 2), g(1, 3);
  CHECK(index_character(g * f) == 1);
  CHECK(index_character(f) + index_character(g) == 1);
  CHECK(check_additivity(f, g).ok());

  Rng rng(53);
  for (int t = 0; t < 200; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(0, 5)), n1 = static_cast<std::size_t>(rng.uniform(0, 5)),
               n2 = static_cast<std::size_t>(rng.uniform(0, 5));
    const Matrix a = random_matrix_of_rank(rng, n1, n, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(std::min(n, n1)))));
    const Matrix b = random_matrix_of_rank(rng, n2, n1, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(std::min(n1, n2)))));
    const auto r = check_additivity(a, b);
    CHECK(r.trace == 0);
    CHECK(r.ok());
    CHECK(index_character(b * a) == index_character(a) + index_character(b));
    // With the product parametrix the single commutator [A, B] suffices.
    const auto single = check_additivity(a, b, parametrix(a), parametrix(b), parametrix(a) * parametrix(b));
    CHECK(single.explicit_form.size() == 1);
    CHECK(single.ok());
  }
  CHECK_THROWS_AS(check_additivity(Matrix(2, 2), Matrix(2, 3)), ShapeError);
}

TEST_CASE("relative index diagrams") {
  Rng rng(54);
  SUBCASE("equal projections") {
    auto d = random_projection_diagram(rng, 6);
    d.p0_prime = d.p0;
    d.p1_prime = d.p1;
    d.p2_prime = d.p2;
    const auto r = relative_index_diagram(d);
    CHECK(r.index0 == 0);
    CHECK(r.index1 == 0);
    CHECK(r.index2 == 0);
    CHECK(r.expression.ok());
  }
  SUBCASE("split sum") {
    const Matrix p0 = Matrix::diagonal({1, 0}), p0p = Matrix::diagonal({1, 1});
    const Matrix p2 = Matrix::diagonal({1, 1, 0}), p2p = Matrix::diagonal({0, 0, 0});
    ProjectionDiagram d{p0, p0p, direct_sum(p0, p2), direct_sum(p0p, p2p), p2, p2p, Matrix(5, 2), Matrix(3, 5)};
    d.incl.set_block(0, 0, Matrix::identity(2));
    d.proj.set_block(0, 2, Matrix::identity(3));
    const auto r = relative_index_diagram(d);
    CHECK(r.index0 == -1);
    CHECK(r.index2 == 2);
    CHECK(r.index1 == 1);
    CHECK(r.additive);
    CHECK(r.expression.difference.is_zero());
  }
  SUBCASE("random coupled diagrams") {
    for (int t = 0; t < 50; ++t) {
      const auto d = random_projection_diagram(rng, 6);
      const auto r = relative_index_diagram(d);
      CHECK(r.additive);
      CHECK(r.index0 == r.direct_index0);
      CHECK(r.index1 == r.direct_index1);
      CHECK(r.index2 == r.direct_index2);
      CHECK(r.expression.ok());
    }
  }
  SUBCASE("invalid input") {
    auto d = random_projection_diagram(rng, 6);
    while (d.p1.rows() < 2) d = random_projection_diagram(rng, 6);
    auto bad = d;
    bad.p1 = bad.p1 * Scalar(2) + Matrix::identity(bad.p1.rows());
    CHECK_THROWS_AS(relative_index_diagram(bad), DomainError);
    const Matrix p0 = Matrix::diagonal({1}), p2 = Matrix::diagonal({0});
    ProjectionDiagram ne{p0, p0, Matrix::diagonal({0, 1}), Matrix::diagonal({1, 0}), p2, p2, Matrix{{1}, {0}}, Matrix{{0, 1}}};
    CHECK_THROWS_AS(relative_index_diagram(ne), DomainError);
  }
}
