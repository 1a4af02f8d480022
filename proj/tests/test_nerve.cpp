#include <doctest.h>

#include "torlog/linalg.hpp"
#include "torlog/nerve.hpp"

using namespace torlog;

TEST_CASE("block spaces") {
  const BlockSpace s = f_space(MonoidalWord({{"a", 2}, {"b", 3}}));
  CHECK(s.dim() == 5);
  CHECK(s.offsets() == std::vector<std::size_t>{0, 2, 5});
  CHECK(f_space(MonoidalWord()).dim() == 0);
  CHECK(f_space(MonoidalWord({{"a", 4}})).offsets().size() == 2);
}

TEST_CASE("mu_sigma") {
  const MonoidalWord w({{"a", 1}, {"b", 2}});
  CHECK(mu_sigma(w, {0, 1}) == Matrix::identity(3));
  CHECK(mu_sigma(w, {1, 0}) == (Matrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  CHECK(w.permuted({1, 0}) == MonoidalWord({{"b", 2}, {"a", 1}}));
  CHECK_THROWS_AS(mu_sigma(w, {0}), ShapeError);
  CHECK_THROWS_AS(mu_sigma(w, {0, 0}), ShapeError);
}

TEST_CASE("insertions") {
  const Letter v{"v", 2};
  const Insertion e0 = eta_insert(MonoidalWord(), 0, v);
  CHECK(e0.source.dim() == 0);
  CHECK(e0.apply(Matrix()).is_zero());
  CHECK(e0.target.dim() == 2);

  Rng rng(60);
  for (int t = 0; t < 100; ++t) {
    const MonoidalWord w = random_word(rng, 4, 3);
    const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(w.size())));
    const Insertion e = eta_insert(w, k, v);
    const Matrix a = random_matrix(rng, w.dim(), w.dim()), b = random_matrix(rng, w.dim(), w.dim());
    CHECK(e.project(e.apply(a)) == a);
    CHECK(e.apply(a * b) == e.apply(a) * e.apply(b));
    CHECK(e.apply(commutator(a, b)) == commutator(e.apply(a), e.apply(b)));
    const Matrix emb = e.embedding();
    CHECK(e.apply(a) == emb * a * emb.transpose());
    CHECK(emb.transpose() * emb == Matrix::identity(w.dim()));
    // At the end position the embedding is T -> T ⊕ 0.
    CHECK(eta_insert(w, w.size(), v).apply(a) == direct_sum(a, Matrix(2, 2)));
  }
  CHECK_THROWS_AS(eta_insert(MonoidalWord({{"a", 1}}), 2, v), ShapeError);
}

TEST_CASE("eta commutation fixtures") {
  const MonoidalWord x({{"a", 1}});
  const Letter w{"w", 1}, z{"z", 1};
  const Matrix t{{5}};
  // k = 0 < l = 2: both sides give w ⊗ a ⊗ z with T on the middle block.
  const Insertion a1 = eta_insert(x, 0, w);
  const Insertion lhs = a1.then(eta_insert(a1.target.word(), 2, z));
  const Insertion b1 = eta_insert(x, 1, z);
  const Insertion rhs = b1.then(eta_insert(b1.target.word(), 0, w));
  CHECK(lhs.target.word() == MonoidalWord({w, {"a", 1}, z}));
  CHECK(lhs.apply(t) == (Matrix{{0, 0, 0}, {0, 5, 0}, {0, 0, 0}}));
  CHECK(lhs.apply(t) == rhs.apply(t));
  // k = 1 >= l = 0: z ⊗ a ⊗ w.
  const Insertion a2 = eta_insert(x, 1, w);
  const Insertion lhs2 = a2.then(eta_insert(a2.target.word(), 0, z));
  const Insertion b2 = eta_insert(x, 0, z);
  const Insertion rhs2 = b2.then(eta_insert(b2.target.word(), 2, w));
  CHECK(lhs2.target.word() == MonoidalWord({z, {"a", 1}, w}));
  CHECK(lhs2.apply(t) == rhs2.apply(t));
}

TEST_CASE("nerve suites") {
  CHECK(verify_eta_commutation(1000, 1).ok());
  CHECK(verify_trace_compat(1000, 2).ok());
  CHECK(verify_mu_cocycle(1000, 3).ok());
  CHECK(verify_eta_commutation(10, 1).checks == 10);
}

namespace {

using Path = std::vector<std::string>;
using Simplex = NerveSimplex<int, Path>;

Path cat(const Path& a, const Path& b) {
  Path p = a;
  p.insert(p.end(), b.begin(), b.end());
  return p;
}

Simplex random_simplex(Rng& rng, std::size_t p) {
  Simplex s;
  for (std::size_t i = 0; i <= p; ++i) s.objects.push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < p; ++i) s.morphisms.push_back(Path{"f" + std::to_string(rng.uniform(0, 99))});
  return s;
}

}  // namespace

TEST_CASE("faces and degeneracies") {
  const Simplex s{{0, 1, 2}, {Path{"a"}, Path{"b"}}};
  const auto d1 = face(s, 1, cat);
  CHECK(d1.objects == std::vector<int>{0, 2});
  CHECK(d1.morphisms == std::vector<Path>{Path{"a", "b"}});
  CHECK(face(s, 0, cat).morphisms == std::vector<Path>{Path{"b"}});
  CHECK(face(s, 2, cat).morphisms == std::vector<Path>{Path{"a"}});
  CHECK_THROWS_AS(face(s, 3, cat), ShapeError);

  auto ident = [](int) { return Path{}; };
  Rng rng(61);
  for (int t = 0; t < 200; ++t) {
    const std::size_t p = static_cast<std::size_t>(rng.uniform(2, 5));
    const Simplex x = random_simplex(rng, p);
    const auto j = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(p)));
    const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(j) - 1));
    const auto lhs = face(face(x, j, cat), k, cat);
    const auto rhs = face(face(x, k, cat), j - 1, cat);
    CHECK(lhs.objects == rhs.objects);
    CHECK(lhs.morphisms == rhs.morphisms);
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(p)));
    const auto si = degeneracy(x, i, ident);
    CHECK(si.dimension() == p + 1);
    CHECK(face(si, i, cat).morphisms == x.morphisms);
    CHECK(face(si, i + 1, cat).morphisms == x.morphisms);
  }
}
