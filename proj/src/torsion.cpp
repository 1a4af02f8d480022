#include "torlog/torsion.hpp"

#include <string>

#include "torlog/linalg.hpp"

namespace torlog {

TorsionLogarithm torsion_logarithm(const CochainComplex& c, const InnerProducts& g, const std::vector<Scalar>& beta) {
  if (beta.size() != c.dims().size()) {
    throw ShapeError("beta has " + std::to_string(beta.size()) + " entries, complex has " +
                     std::to_string(c.dims().size()) + " degrees");
  }
  TorsionLogarithm t;
  for (std::size_t p = 0; p <= c.top_degree(); ++p) {
    if (c.dim(p) == 0) continue;
    t.records.push_back({p, p % 2 == 0 ? 1 : -1, beta[p], laplacian(c, g, p), g.gram(p)});
  }
  return t;
}

LogValue character(const TorsionLogarithm& t) {
  std::vector<LogTerm> terms;
  for (const auto& r : t.records) {
    if (sgn(r.beta) == 0) continue;
    terms.push_back({r.weight() / 2, pseudo_det(r.laplacian, r.gram)});
  }
  return LogValue(std::move(terms));
}

LogValue reidemeister(const CochainComplex& c, const InnerProducts& g) {
  for (std::size_t p = 0; p <= c.top_degree(); ++p) {
    if (const auto b = betti(c, p); b != 0) {
      throw DomainError("complex is not acyclic: betti_" + std::to_string(p) + " = " + std::to_string(b));
    }
  }
  std::vector<Scalar> beta;
  for (std::size_t p = 0; p <= c.top_degree(); ++p) beta.emplace_back(static_cast<long>(p));
  return character(torsion_logarithm(c, g, beta));
}

LogValue volume_correction(const InnerProducts& g) {
  std::vector<LogTerm> terms;
  for (std::size_t p = 0; p < g.grams().size(); ++p) {
    terms.push_back({make_scalar(p % 2 == 0 ? 1 : -1, 2), determinant(g.gram(p))});
  }
  return LogValue(std::move(terms));
}

EulerCharacteristics weighted_euler(const CochainComplex& c) {
  EulerCharacteristics e;
  for (std::size_t p = 0; p <= c.top_degree(); ++p) {
    const long b = static_cast<long>(betti(c, p));
    const long s = p % 2 == 0 ? 1 : -1;
    e.chi += s * b;
    e.chi_p += s * static_cast<long>(p) * b;
  }
  return e;
}

Scalar residue_torsion(const CochainComplex& c, const Scalar& a, const Scalar& b) {
  const auto e = weighted_euler(c);
  return a * e.chi_p + b * e.chi;
}

bool beta_is_invariant(const std::vector<Scalar>& beta) {
  for (std::size_t p = 1; p + 1 < beta.size(); ++p)
    if (2 * beta[p] != beta[p + 1] + beta[p - 1]) return false;
  return true;
}

MetricReport metric_variation_experiment(const CochainComplex& c, const std::vector<Scalar>& beta, std::size_t trials,
                                         std::uint64_t seed) {
  if (trials < 2) throw DomainError("experiment needs at least 2 trials");
  MetricReport report;
  report.betti = betti_numbers(c);
  report.euler = weighted_euler(c);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(case_seed(seed, t));
    const auto g = random_inner_products(rng, c);
    // Betti numbers read off the Laplacian kernels for this metric.
    std::vector<std::size_t> b;
    for (std::size_t p = 0; p <= c.top_degree(); ++p) b.push_back(kernel_dim(laplacian(c, g, p)));
    EulerCharacteristics e;
    for (std::size_t p = 0; p < b.size(); ++p) {
      const long s = p % 2 == 0 ? 1 : -1;
      e.chi += s * static_cast<long>(b[p]);
      e.chi_p += s * static_cast<long>(p) * static_cast<long>(b[p]);
    }
    if (b != report.betti || !(e == report.euler)) report.counts_constant = false;
    report.characters.push_back(character(torsion_logarithm(c, g, beta)));
    if (!(report.characters.back() == report.characters.front())) report.constant = false;
  }
  return report;
}

}  // namespace torlog
