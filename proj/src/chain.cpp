#include "torlog/chain.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "torlog/linalg.hpp"

namespace torlog {

namespace {

std::string dims_text(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

}  // namespace

std::optional<Violation> validate(const std::vector<std::size_t>& dims, const std::vector<Matrix>& d) {
  if (dims.empty()) return Violation{0, 0, 0, "complex has no degrees"};
  if (d.size() + 1 != dims.size()) {
    return Violation{0, 0, 0,
                     "expected " + std::to_string(dims.size() - 1) + " differentials, got " + std::to_string(d.size())};
  }
  for (std::size_t p = 0; p < d.size(); ++p) {
    if (d[p].rows() != dims[p + 1] || d[p].cols() != dims[p]) {
      return Violation{p, 0, 0,
                       "d_" + std::to_string(p) + " has shape " + dims_text(d[p].rows(), d[p].cols()) + ", expected " +
                           dims_text(dims[p + 1], dims[p])};
    }
  }
  for (std::size_t p = 0; p + 1 < d.size(); ++p) {
    const Matrix dd = d[p + 1] * d[p];
    for (std::size_t r = 0; r < dd.rows(); ++r)
      for (std::size_t c = 0; c < dd.cols(); ++c)
        if (sgn(dd(r, c)) != 0) {
          return Violation{p, r, c,
                           "d_" + std::to_string(p + 1) + " d_" + std::to_string(p) + " is nonzero at (" +
                               std::to_string(r) + "," + std::to_string(c) + "): " + to_string(dd(r, c))};
        }
  }
  return std::nullopt;
}

CochainComplex::CochainComplex(std::vector<std::size_t> dims, std::vector<Matrix> differentials)
    : dims_(std::move(dims)), d_(std::move(differentials)) {
  if (auto v = validate(dims_, d_)) {
    if (v->message.find("nonzero") != std::string::npos) throw DomainError(v->message);
    throw ShapeError(v->message);
  }
}

CochainComplex CochainComplex::zero(std::vector<std::size_t> dims) {
  std::vector<Matrix> d;
  for (std::size_t p = 0; p + 1 < dims.size(); ++p) d.emplace_back(dims[p + 1], dims[p]);
  return CochainComplex(std::move(dims), std::move(d));
}

std::size_t CochainComplex::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

const Matrix& CochainComplex::d(std::size_t p) const {
  if (p >= d_.size()) throw ShapeError("no differential d_" + std::to_string(p));
  return d_[p];
}

Matrix CochainComplex::d_or_zero(long p) const {
  if (p < 0) return Matrix(dims_.front(), 0);
  if (static_cast<std::size_t>(p) >= d_.size()) return Matrix(0, dims_.back());
  return d_[static_cast<std::size_t>(p)];
}

InnerProducts::InnerProducts(const CochainComplex& c, std::vector<Matrix> grams) : grams_(std::move(grams)) {
  if (grams_.size() != c.dims().size()) {
    throw ShapeError("expected " + std::to_string(c.dims().size()) + " Gram matrices, got " +
                     std::to_string(grams_.size()));
  }
  for (std::size_t p = 0; p < grams_.size(); ++p) {
    if (grams_[p].rows() != c.dim(p) || grams_[p].cols() != c.dim(p)) {
      throw ShapeError("Gram matrix in degree " + std::to_string(p) + " must be " + dims_text(c.dim(p), c.dim(p)));
    }
    if (!is_positive_definite(grams_[p])) {
      throw DomainError("Gram matrix in degree " + std::to_string(p) + " is not symmetric positive definite");
    }
    inverses_.push_back(inverse(grams_[p]));
  }
}

InnerProducts InnerProducts::standard(const CochainComplex& c) {
  std::vector<Matrix> g;
  for (auto n : c.dims()) g.push_back(Matrix::identity(n));
  return InnerProducts(c, std::move(g));
}

bool InnerProducts::is_standard() const {
  return std::all_of(grams_.begin(), grams_.end(), [](const Matrix& g) { return g == Matrix::identity(g.rows()); });
}

ChainMap::ChainMap(CochainComplex src, CochainComplex tgt, std::vector<Matrix> comps)
    : source(std::move(src)), target(std::move(tgt)), components(std::move(comps)) {
  if (source.top_degree() != target.top_degree()) throw ShapeError("chain map between complexes of different length");
  if (components.size() != source.dims().size()) throw ShapeError("chain map needs one component per degree");
  for (std::size_t p = 0; p < components.size(); ++p) {
    if (components[p].rows() != target.dim(p) || components[p].cols() != source.dim(p)) {
      throw ShapeError("component f_" + std::to_string(p) + " must be " + dims_text(target.dim(p), source.dim(p)));
    }
  }
  for (std::size_t p = 0; p < source.top_degree(); ++p) {
    if (!(components[p + 1] * source.d(p) == target.d(p) * components[p])) {
      throw DomainError("f_" + std::to_string(p + 1) + " d_" + std::to_string(p) + " != d_" + std::to_string(p) +
                        " f_" + std::to_string(p));
    }
  }
}

ChainMap ChainMap::identity(const CochainComplex& c) {
  std::vector<Matrix> f;
  for (auto n : c.dims()) f.push_back(Matrix::identity(n));
  return ChainMap(c, c, std::move(f));
}

Matrix adjoint(const CochainComplex& c, const InnerProducts& g, std::size_t p) {
  const Matrix& d = c.d(p);
  return g.gram_inverse(p) * d.transpose() * g.gram(p + 1);
}

Matrix laplacian(const CochainComplex& c, const InnerProducts& g, std::size_t p) {
  if (p > c.top_degree()) throw ShapeError("degree " + std::to_string(p) + " out of range");
  Matrix delta(c.dim(p), c.dim(p));
  if (p > 0) delta += c.d(p - 1) * adjoint(c, g, p - 1);
  if (p < c.top_degree()) delta += adjoint(c, g, p) * c.d(p);
  return delta;
}

std::size_t betti(const CochainComplex& c, std::size_t p) {
  if (p > c.top_degree()) throw ShapeError("degree " + std::to_string(p) + " out of range");
  const std::size_t ker = p < c.top_degree() ? kernel_dim(c.d(p)) : c.dim(p);
  const std::size_t im = p > 0 ? rank(c.d(p - 1)) : 0;
  return ker - im;
}

std::vector<std::size_t> betti_numbers(const CochainComplex& c) {
  std::vector<std::size_t> b;
  for (std::size_t p = 0; p <= c.top_degree(); ++p) b.push_back(betti(c, p));
  return b;
}

bool is_acyclic(const CochainComplex& c) {
  for (std::size_t p = 0; p <= c.top_degree(); ++p)
    if (betti(c, p) != 0) return false;
  return true;
}

CochainComplex mapping_cone(const ChainMap& f) {
  const auto& src = f.source;
  const auto& tgt = f.target;
  const std::size_t m = src.top_degree();
  auto tdim = [&](long p) -> std::size_t { return p < 0 || p > static_cast<long>(m) ? 0 : tgt.dim(p); };
  auto sdim = [&](long p) -> std::size_t { return p < 0 || p > static_cast<long>(m) ? 0 : src.dim(p); };
  std::vector<std::size_t> dims;
  for (long p = 0; p <= static_cast<long>(m) + 1; ++p) dims.push_back(sdim(p) + tdim(p - 1));
  std::vector<Matrix> d;
  for (long p = 0; p <= static_cast<long>(m); ++p) {
    // Cone^p = C^p ⊕ D^{p-1} -> Cone^{p+1} = C^{p+1} ⊕ D^p.
    Matrix dp(dims[p + 1], dims[p]);
    if (p < static_cast<long>(m)) dp.set_block(0, 0, -src.d(p));
    dp.set_block(sdim(p + 1), 0, f.components[p]);
    if (p >= 1) dp.set_block(sdim(p + 1), sdim(p), tgt.d(p - 1));
    d.push_back(std::move(dp));
  }
  return CochainComplex(std::move(dims), std::move(d));
}

CochainComplex direct_sum(const CochainComplex& a, const CochainComplex& b) {
  const std::size_t n = std::max(a.dims().size(), b.dims().size());
  auto dim = [](const CochainComplex& c, std::size_t p) { return p < c.dims().size() ? c.dim(p) : std::size_t{0}; };
  auto diff = [&](const CochainComplex& c, std::size_t p) {
    return p < c.top_degree() ? c.d(p) : Matrix(dim(c, p + 1), dim(c, p));
  };
  std::vector<std::size_t> dims;
  for (std::size_t p = 0; p < n; ++p) dims.push_back(dim(a, p) + dim(b, p));
  std::vector<Matrix> d;
  for (std::size_t p = 0; p + 1 < n; ++p) d.push_back(torlog::direct_sum(diff(a, p), diff(b, p)));
  return CochainComplex(std::move(dims), std::move(d));
}

InnerProducts direct_sum(const CochainComplex& a, const InnerProducts& ga, const CochainComplex& b,
                         const InnerProducts& gb) {
  const CochainComplex s = direct_sum(a, b);
  std::vector<Matrix> g;
  for (std::size_t p = 0; p <= s.top_degree(); ++p) {
    const Matrix x = p <= a.top_degree() ? ga.gram(p) : Matrix();
    const Matrix y = p <= b.top_degree() ? gb.gram(p) : Matrix();
    g.push_back(torlog::direct_sum(x, y));
  }
  return InnerProducts(s, std::move(g));
}

CochainComplex dual(const CochainComplex& c) {
  const std::size_t m = c.top_degree();
  std::vector<std::size_t> dims(c.dims().rbegin(), c.dims().rend());
  std::vector<Matrix> d;
  for (std::size_t p = 0; p < m; ++p) d.push_back(c.d(m - 1 - p).transpose());
  return CochainComplex(std::move(dims), std::move(d));
}

namespace {

CochainComplex standard_form(Rng& rng, std::size_t m, std::size_t max_dim, bool acyclic) {
  // Degree p splits as [image a_p | harmonic h_p | iso b_p]; d_p maps the b_p
  // block isomorphically onto the a_{p+1} block, so d_{p+1} d_p = 0.
  std::vector<std::size_t> a(m + 1, 0), h(m + 1, 0), b(m + 1, 0);
  for (std::size_t p = 0; p <= m; ++p) {
    a[p] = p == 0 ? 0 : b[p - 1];
    std::size_t room = max_dim - a[p];
    if (!acyclic) {
      h[p] = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(room) / 2));
      room -= h[p];
    }
    if (p < m) b[p] = static_cast<std::size_t>(rng.uniform(room > 0 ? 1 : 0, static_cast<long>(room)));
  }
  std::vector<std::size_t> dims(m + 1);
  for (std::size_t p = 0; p <= m; ++p) dims[p] = a[p] + h[p] + b[p];
  std::vector<Unimodular> change;
  for (std::size_t p = 0; p <= m; ++p) change.push_back(random_unimodular(rng, dims[p]));
  std::vector<Matrix> d;
  for (std::size_t p = 0; p < m; ++p) {
    Matrix dp(dims[p + 1], dims[p]);
    dp.set_block(0, a[p] + h[p], random_invertible(rng, b[p]));
    d.push_back(change[p + 1].a * dp * change[p].a_inv);
  }
  return CochainComplex(std::move(dims), std::move(d));
}

}  // namespace

CochainComplex random_complex(Rng& rng, std::size_t max_degree, std::size_t max_dim, bool acyclic) {
  const std::size_t m = max_degree == 0 ? 0 : static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_degree)));
  return standard_form(rng, m, max_dim, acyclic);
}

CochainComplex random_complex(std::uint64_t seed, std::size_t max_degree, std::size_t max_dim) {
  Rng rng(seed);
  return random_complex(rng, max_degree, max_dim);
}

CochainComplex random_acyclic_complex(Rng& rng, std::size_t top_degree, std::size_t max_dim) {
  return standard_form(rng, top_degree, max_dim, true);
}

InnerProducts random_inner_products(Rng& rng, const CochainComplex& c) {
  std::vector<Matrix> g;
  for (auto n : c.dims()) g.push_back(random_gram(rng, n));
  return InnerProducts(c, std::move(g));
}

}  // namespace torlog
