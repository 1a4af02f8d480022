#include "torlog/random.hpp"

#include <limits>
#include <utility>

#include "torlog/linalg.hpp"

namespace torlog {

long Rng::uniform(long lo, long hi) {
  if (hi < lo) std::swap(lo, hi);
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

std::vector<std::size_t> Rng::permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[static_cast<std::size_t>(uniform(0, static_cast<long>(i) - 1))]);
  return p;
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.uniform(lo, hi);
  return m;
}

Matrix random_invertible(Rng& rng, std::size_t n) {
  Matrix l = Matrix::identity(n), u(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) l(i, j) = rng.uniform(-2, 2);
    const long d = rng.uniform(1, 3);
    u(i, i) = rng.coin() ? d : -d;
    for (std::size_t j = i + 1; j < n; ++j) u(i, j) = rng.uniform(-2, 2);
  }
  return l * u;
}

Matrix random_matrix_of_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t r) {
  if (r > rows || r > cols) throw ShapeError("rank exceeds matrix size");
  // Full column rank left factor: invertible block on top of random rows, then a row shuffle.
  auto full_column_rank = [&](std::size_t n) {
    Matrix f(n, r);
    f.set_block(0, 0, random_invertible(rng, r));
    f.set_block(r, 0, random_matrix(rng, n - r, r));
    const auto p = rng.permutation(n);
    Matrix g(n, r);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < r; ++j) g(p[i], j) = f(i, j);
    return g;
  };
  return full_column_rank(rows) * full_column_rank(cols).transpose();
}

Unimodular random_unimodular(Rng& rng, std::size_t n, std::size_t steps) {
  Unimodular u{Matrix::identity(n), Matrix::identity(n)};
  if (n < 2) return u;
  if (steps == 0) steps = 2 * n;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    const long c = rng.coin() ? rng.uniform(1, 2) : -rng.uniform(1, 2);
    // a <- E a with E = I + c e_i e_j^T; a_inv <- a_inv E^-1.
    for (std::size_t k = 0; k < n; ++k) u.a(i, k) += c * u.a(j, k);
    for (std::size_t k = 0; k < n; ++k) u.a_inv(k, j) -= c * u.a_inv(k, i);
  }
  return u;
}

Matrix random_gram(Rng& rng, std::size_t n) {
  const Matrix l = random_matrix(rng, n, n);
  return l.transpose() * l + Matrix::identity(n);
}

}  // namespace torlog
