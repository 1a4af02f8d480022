#ifndef TORLOG_TORSION_HPP
#define TORLOG_TORSION_HPP

#include <cstdint>
#include <vector>

#include "torlog/chain.hpp"
#include "torlog/log_value.hpp"

namespace torlog {

/// One summand (-1)^p β_p log Δ_p. The logarithm is never formed; the record
/// keeps Δ_p and its Gram form so that tr log Δ_p = log pdet Δ_p can be taken.
struct TorsionRecord {
  std::size_t degree = 0;
  int sign = 1;  // (-1)^p
  Scalar beta;
  Matrix laplacian;
  Matrix gram;

  Scalar weight() const { return sign * beta; }
};

struct TorsionLogarithm {
  std::vector<TorsionRecord> records;
};

/// Degrees of dimension zero contribute nothing and get no record.
TorsionLogarithm torsion_logarithm(const CochainComplex& c, const InnerProducts& g, const std::vector<Scalar>& beta);

/// ½ Σ (-1)^p β_p log pdet(Δ_p).
LogValue character(const TorsionLogarithm& t);

/// Character with β_p = p. Throws DomainError unless c is acyclic.
LogValue reidemeister(const CochainComplex& c, const InnerProducts& g);

/// ½ Σ (-1)^p log det G_p: the shift of the Reidemeister character between the
/// standard forms and g.
LogValue volume_correction(const InnerProducts& g);

struct EulerCharacteristics {
  long chi = 0;    // Σ (-1)^p b_p
  long chi_p = 0;  // Σ (-1)^p p b_p

  friend bool operator==(const EulerCharacteristics&, const EulerCharacteristics&) = default;
};

EulerCharacteristics weighted_euler(const CochainComplex& c);

/// A χ_p + B χ.
Scalar residue_torsion(const CochainComplex& c, const Scalar& a, const Scalar& b);

/// 2β_p = β_{p+1} + β_{p-1} for every interior p.
bool beta_is_invariant(const std::vector<Scalar>& beta);

struct MetricReport {
  std::vector<std::size_t> betti;
  EulerCharacteristics euler;
  bool counts_constant = true;  // betti, χ, χ_p identical in every trial
  std::vector<LogValue> characters;
  bool constant = true;  // all characters equal
};

/// Samples `trials` random Gram choices and records the τ_β characters.
MetricReport metric_variation_experiment(const CochainComplex& c, const std::vector<Scalar>& beta, std::size_t trials,
                                         std::uint64_t seed);

}  // namespace torlog

#endif  // TORLOG_TORSION_HPP
