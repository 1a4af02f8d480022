#ifndef TORLOG_CHAIN_HPP
#define TORLOG_CHAIN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torlog/matrix.hpp"
#include "torlog/random.hpp"

namespace torlog {

/// First failure found by validate; `degree` p means d_{p+1} d_p != 0 (or a
/// shape problem with d_p).
struct Violation {
  std::size_t degree = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  std::string message;
};

/// Checks shapes and d_{p+1} d_p = 0 on raw data.
std::optional<Violation> validate(const std::vector<std::size_t>& dims, const std::vector<Matrix>& differentials);

/// Finite cochain complex C^0 -> C^1 -> ... -> C^m, d_p : C^p -> C^{p+1} a
/// dims[p+1] x dims[p] matrix. At least one degree. Checked at construction.
class CochainComplex {
 public:
  CochainComplex() : dims_{0} {}
  CochainComplex(std::vector<std::size_t> dims, std::vector<Matrix> differentials);

  /// Complex with zero differentials.
  static CochainComplex zero(std::vector<std::size_t> dims);

  std::size_t top_degree() const { return dims_.size() - 1; }
  std::size_t dim(std::size_t p) const { return dims_.at(p); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dim() const;

  /// d_p for 0 <= p < m; d_{-1} and d_m are returned as zero maps by `d_or_zero`.
  const Matrix& d(std::size_t p) const;
  Matrix d_or_zero(long p) const;
  const std::vector<Matrix>& differentials() const { return d_; }

  friend bool operator==(const CochainComplex&, const CochainComplex&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<Matrix> d_;
};

inline std::optional<Violation> validate(const CochainComplex& c) { return validate(c.dims(), c.differentials()); }

/// Per-degree positive-definite Gram matrices, with their inverses cached.
class InnerProducts {
 public:
  InnerProducts() = default;
  /// Throws ShapeError on size mismatch, DomainError when a form is not
  /// positive definite.
  InnerProducts(const CochainComplex& c, std::vector<Matrix> grams);

  static InnerProducts standard(const CochainComplex& c);

  const Matrix& gram(std::size_t p) const { return grams_.at(p); }
  const Matrix& gram_inverse(std::size_t p) const { return inverses_.at(p); }
  const std::vector<Matrix>& grams() const { return grams_; }
  bool is_standard() const;

 private:
  std::vector<Matrix> grams_;
  std::vector<Matrix> inverses_;
};

/// Degreewise maps f_p : C^p -> D^p commuting with the differentials.
struct ChainMap {
  CochainComplex source;
  CochainComplex target;
  std::vector<Matrix> components;

  ChainMap() = default;
  /// Throws ShapeError on mismatched degrees or shapes, DomainError when f d != d f.
  ChainMap(CochainComplex source, CochainComplex target, std::vector<Matrix> components);

  static ChainMap identity(const CochainComplex& c);
};

/// d_p* = G_p^-1 d_p^T G_{p+1}.
Matrix adjoint(const CochainComplex& c, const InnerProducts& g, std::size_t p);

/// Δ_p = d_{p-1} d_{p-1}* + d_p* d_p, with d_{-1} = d_m = 0.
Matrix laplacian(const CochainComplex& c, const InnerProducts& g, std::size_t p);

/// dim H^p = dim ker d_p - rank d_{p-1}.
std::size_t betti(const CochainComplex& c, std::size_t p);
std::vector<std::size_t> betti_numbers(const CochainComplex& c);
bool is_acyclic(const CochainComplex& c);

/// Cone^p = C^p ⊕ D^{p-1}, differential [[-d_C, 0], [f, d_D]]. Top degree m+1.
CochainComplex mapping_cone(const ChainMap& f);

/// Blockwise sum; the shorter complex is padded with zero degrees.
CochainComplex direct_sum(const CochainComplex& a, const CochainComplex& b);
InnerProducts direct_sum(const CochainComplex& a, const InnerProducts& ga, const CochainComplex& b,
                         const InnerProducts& gb);

/// Degree-reversed transpose: C'^p = C^{m-p}, d'_p = d_{m-1-p}^T.
CochainComplex dual(const CochainComplex& c);

/// Deterministic random complex with top degree in [1, max_degree] (0 when
/// max_degree is 0) and every dim <= max_dim. Built in standard form from
/// image, harmonic and isomorphism blocks, then conjugated degreewise by
/// random unimodular matrices.
CochainComplex random_complex(std::uint64_t seed, std::size_t max_degree, std::size_t max_dim);
CochainComplex random_complex(Rng& rng, std::size_t max_degree, std::size_t max_dim, bool acyclic = false);
/// Same generator with fixed top degree and no harmonic part.
CochainComplex random_acyclic_complex(Rng& rng, std::size_t top_degree, std::size_t max_dim);

InnerProducts random_inner_products(Rng& rng, const CochainComplex& c);

}  // namespace torlog

#endif  // TORLOG_CHAIN_HPP
