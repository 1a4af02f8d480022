#include "torlog/k1.hpp"

#include <string>

#include "torlog/linalg.hpp"

namespace torlog {

ChainContraction find_contraction(const CochainComplex& c, const InnerProducts& g) {
  for (std::size_t p = 0; p <= c.top_degree(); ++p) {
    if (const auto b = betti(c, p); b != 0) {
      throw DomainError("complex is not acyclic: betti_" + std::to_string(p) + " = " + std::to_string(b));
    }
  }
  ChainContraction h;
  h.gamma.emplace_back(0, c.dim(0));
  for (std::size_t p = 1; p <= c.top_degree(); ++p) {
    h.gamma.push_back(pseudo_inverse(c.d(p - 1), g.gram(p - 1), g.gram(p)));
  }
  return h;
}

bool is_contraction(const CochainComplex& c, const ChainContraction& h) {
  const std::size_t m = c.top_degree();
  if (h.gamma.size() != m + 1) return false;
  for (std::size_t p = 0; p <= m; ++p) {
    const std::size_t below = p == 0 ? 0 : c.dim(p - 1);
    if (h.gamma[p].rows() != below || h.gamma[p].cols() != c.dim(p)) return false;
  }
  for (std::size_t p = 0; p <= m; ++p) {
    Matrix s(c.dim(p), c.dim(p));
    if (p > 0) s += c.d(p - 1) * h.gamma[p];
    if (p < m) s += h.gamma[p + 1] * c.d(p);
    if (!(s == Matrix::identity(c.dim(p)))) return false;
  }
  return true;
}

K1Torsion torsion_of_acyclic(const CochainComplex& c, const ChainContraction& h) {
  if (!is_contraction(c, h)) throw DomainError("gamma is not a chain contraction of the complex");
  const std::size_t m = c.top_degree();
  std::vector<std::size_t> offset(m + 1, 0);
  std::size_t even = 0, odd = 0;
  for (std::size_t p = 0; p <= m; ++p) {
    std::size_t& total = p % 2 == 0 ? even : odd;
    offset[p] = total;
    total += c.dim(p);
  }
  if (even != odd) {
    throw DomainError("even and odd degrees have total dimensions " + std::to_string(even) + " and " +
                      std::to_string(odd));
  }
  Matrix t(odd, even);
  for (std::size_t p = 0; p <= m; p += 2) {
    if (p < m) t.set_block(offset[p + 1], offset[p], c.d(p));
    if (p > 0) t.set_block(offset[p - 1], offset[p], h.gamma[p]);
  }
  const Scalar v = determinant(t);
  if (sgn(v) == 0) throw DomainError("d + gamma is singular");
  return K1Torsion{v};
}

K1Torsion torsion_of_equivalence(const ChainMap& f) {
  const CochainComplex cone = mapping_cone(f);
  if (!is_acyclic(cone)) throw DomainError("not a homotopy equivalence: mapping cone has homology");
  return torsion_of_acyclic(cone, find_contraction(cone, InnerProducts::standard(cone)));
}

ChainMap compose(const ChainMap& f, const ChainMap& g) {
  if (!(f.target == g.source)) throw ShapeError("chain maps are not composable");
  std::vector<Matrix> comps;
  for (std::size_t p = 0; p < f.components.size(); ++p) comps.push_back(g.components[p] * f.components[p]);
  return ChainMap(f.source, g.target, std::move(comps));
}

ChainMap random_equivalence(Rng& rng, const CochainComplex& c, std::size_t max_extra_dim) {
  const std::size_t m = c.top_degree();
  const CochainComplex k = random_acyclic_complex(rng, m, max_extra_dim);
  const CochainComplex s = direct_sum(c, k);
  // f = inclusion + (d h + h d) for a random h : C^p -> S^{p-1}.
  std::vector<Matrix> h;
  for (std::size_t p = 0; p <= m; ++p) h.push_back(p == 0 ? Matrix(0, c.dim(0)) : random_matrix(rng, s.dim(p - 1), c.dim(p), -1, 1));
  std::vector<Matrix> f;
  for (std::size_t p = 0; p <= m; ++p) {
    Matrix fp(s.dim(p), c.dim(p));
    fp.set_block(0, 0, Matrix::identity(c.dim(p)));
    if (p > 0) fp += s.d(p - 1) * h[p];
    if (p < m) fp += h[p + 1] * c.d(p);
    f.push_back(std::move(fp));
  }
  std::vector<Matrix> a, a_inv;
  for (std::size_t p = 0; p <= m; ++p) {
    a.push_back(random_invertible(rng, s.dim(p)));
    a_inv.push_back(inverse(a.back()));
  }
  std::vector<Matrix> d;
  for (std::size_t p = 0; p < m; ++p) d.push_back(a[p + 1] * s.d(p) * a_inv[p]);
  for (std::size_t p = 0; p <= m; ++p) f[p] = a[p] * f[p];
  return ChainMap(c, CochainComplex(s.dims(), std::move(d)), std::move(f));
}

}  // namespace torlog
