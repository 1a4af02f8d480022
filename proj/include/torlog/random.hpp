#ifndef TORLOG_RANDOM_HPP
#define TORLOG_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "torlog/matrix.hpp"

namespace torlog {

/// Seeded generator with a portable integer distribution. The standard
/// distributions are implementation-defined, which would make reports depend on
/// the standard library; mt19937_64 itself is fully specified.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi], by rejection.
  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }
  std::uint64_t next() { return engine_(); }

  /// Uniformly random permutation of 0..n-1 (Fisher-Yates).
  std::vector<std::size_t> permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// Per-case seed for trial i of a suite; a splitmix64 step so that nearby
/// suite seeds give unrelated streams.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t i);

/// Integer entries uniform in [lo, hi].
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo = -3, long hi = 3);

/// Random matrix of the given rank: product of two random full-rank factors.
Matrix random_matrix_of_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t rank);

/// Unit lower triangular times upper triangular with diagonal in ±{1,2,3}.
Matrix random_invertible(Rng& rng, std::size_t n);

/// Product of random elementary integer operations, together with its inverse.
struct Unimodular {
  Matrix a;
  Matrix a_inv;
};
Unimodular random_unimodular(Rng& rng, std::size_t n, std::size_t steps = 0);

/// G = L^T L + I with L uniform in {-3..3}.
Matrix random_gram(Rng& rng, std::size_t n);

}  // namespace torlog

#endif  // TORLOG_RANDOM_HPP
