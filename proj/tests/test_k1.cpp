#include <doctest.h>

#include "torlog/k1.hpp"
#include "torlog/linalg.hpp"
#include "torlog/torsion.hpp"

using namespace torlog;

namespace {

const Matrix kRotation{{make_scalar(3, 5), make_scalar(-4, 5)}, {make_scalar(4, 5), make_scalar(3, 5)}};

}  // namespace

TEST_CASE("contraction fixtures") {
  const CochainComplex two({1, 1}, {Matrix{{2}}});
  const auto h = find_contraction(two, InnerProducts::standard(two));
  CHECK(h.gamma[1] == Matrix{{make_scalar(1, 2)}});
  CHECK(torsion_of_acyclic(two, h).normalized() == 2);

  const Matrix e = kRotation - Matrix::identity(2);
  const CochainComplex circ({2, 2}, {e});
  const auto hc = find_contraction(circ, InnerProducts::standard(circ));
  CHECK(hc.gamma[1] == inverse(e));
  CHECK(is_contraction(circ, hc));
  CHECK(torsion_of_acyclic(circ, hc).normalized() == make_scalar(4, 5));

  const auto z = CochainComplex::zero({1, 1});
  CHECK_THROWS_AS(find_contraction(z, InnerProducts::standard(z)), DomainError);
  CHECK_THROWS_AS(torsion_of_acyclic(two, ChainContraction{{Matrix(0, 1), Matrix{{1}}}}), DomainError);
}

TEST_CASE("torsion of equivalences") {
  const auto c = CochainComplex::zero({1});
  const ChainMap three(c, c, {Matrix{{3}}});
  CHECK(torsion_of_equivalence(three).normalized() == 3);
  CHECK(torsion_of_equivalence(compose(three, three)).normalized() == 9);
  CHECK(torsion_of_equivalence(ChainMap::identity(c)).normalized() == 1);
  const ChainMap zero(c, c, {Matrix{{0}}});
  CHECK_THROWS_WITH_AS(torsion_of_equivalence(zero), doctest::Contains("not a homotopy equivalence"), DomainError);

  Rng rng(40);
  for (int t = 0; t < 30; ++t) {
    const auto x = random_complex(rng, 3, 3);
    CHECK(torsion_of_equivalence(ChainMap::identity(x)).normalized() == 1);
  }
}

TEST_CASE("compose") {
  Rng rng(41);
  const auto x = random_complex(rng, 2, 3);
  const auto f = random_equivalence(rng, x);
  const auto id = ChainMap::identity(f.target);
  const auto fi = compose(f, id);
  CHECK(fi.components == f.components);
  const auto g = random_equivalence(rng, f.target);
  const auto h = random_equivalence(rng, g.target);
  CHECK(compose(compose(f, g), h).components == compose(f, compose(g, h)).components);
  CHECK(compose(f, g).components[0] == g.components[0] * f.components[0]);
  CHECK_THROWS_AS(compose(g, f), ShapeError);
}

TEST_CASE("contraction independence") {
  Rng rng(42);
  for (int t = 0; t < 40; ++t) {
    const auto c = random_acyclic_complex(rng, static_cast<std::size_t>(rng.uniform(1, 4)), 4);
    const auto h1 = find_contraction(c, random_inner_products(rng, c));
    const auto h2 = find_contraction(c, random_inner_products(rng, c));
    CHECK(is_contraction(c, h1));
    CHECK(torsion_of_acyclic(c, h1).normalized() == torsion_of_acyclic(c, h2).normalized());
    // Standard forms: τ^R = -log|T|.
    const auto g = InnerProducts::standard(c);
    CHECK(reidemeister(c, g) == -torsion_of_acyclic(c, find_contraction(c, g)).log_abs());
  }
}

TEST_CASE("composition additivity") {
  Rng rng(43);
  for (int t = 0; t < 30; ++t) {
    const auto x = random_complex(rng, 3, 3);
    const auto f = random_equivalence(rng, x, 2);
    const auto g = random_equivalence(rng, f.target, 2);
    const auto tf = torsion_of_equivalence(f), tg = torsion_of_equivalence(g);
    CHECK(torsion_of_equivalence(compose(f, g)).log_abs() == tf.log_abs() + tg.log_abs());
  }
}

TEST_CASE("cone torsion matches the torsion difference of acyclic ends") {
  Rng rng(44);
  for (int t = 0; t < 30; ++t) {
    const auto x = random_acyclic_complex(rng, 2, 3);
    const auto f = random_equivalence(rng, x, 2);
    const auto sx = InnerProducts::standard(x), sy = InnerProducts::standard(f.target);
    CHECK(torsion_of_equivalence(f).log_abs() == reidemeister(f.target, sy) - reidemeister(x, sx));
  }
}

TEST_CASE("duality") {
  Rng rng(45);
  for (int t = 0; t < 40; ++t) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto c = random_acyclic_complex(rng, m, 3);
    const auto dc = dual(c);
    const Scalar a = torsion_of_acyclic(c, find_contraction(c, InnerProducts::standard(c))).normalized();
    const Scalar b = torsion_of_acyclic(dc, find_contraction(dc, InnerProducts::standard(dc))).normalized();
    CHECK(b == (m % 2 == 1 ? a : 1 / a));
  }
}
