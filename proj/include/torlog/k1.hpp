#ifndef TORLOG_K1_HPP
#define TORLOG_K1_HPP

#include <vector>

#include "torlog/chain.hpp"
#include "torlog/log_value.hpp"
#include "torlog/random.hpp"

namespace torlog {

/// γ_p : C^p -> C^{p-1} (gamma[0] is the empty map out of C^0) with
/// d_{p-1} γ_p + γ_{p+1} d_p = id on every C^p.
struct ChainContraction {
  std::vector<Matrix> gamma;
};

struct K1Torsion {
  Scalar value;  // nonzero

  Scalar normalized() const { return abs(value); }
  int sign() const { return sgn(value); }
  /// log |value|.
  LogValue log_abs() const { return LogValue::log(normalized()); }
};

/// γ_p = d_{p-1}^+ taken with respect to the Gram forms. Throws DomainError on
/// non-acyclic input.
ChainContraction find_contraction(const CochainComplex& c, const InnerProducts& g);

bool is_contraction(const CochainComplex& c, const ChainContraction& gamma);

/// det of d + γ restricted to the even degrees, ⊕ C^{2k} -> ⊕ C^{2k+1}, blocks
/// in ascending degree on both sides. d sends C^{2k} to C^{2k+1} and γ sends it
/// to C^{2k-1}.
K1Torsion torsion_of_acyclic(const CochainComplex& c, const ChainContraction& gamma);

/// Torsion of the mapping cone, with the contraction from the standard forms.
/// Throws DomainError "not a homotopy equivalence" when the cone has homology.
K1Torsion torsion_of_equivalence(const ChainMap& f);

/// g ∘ f; requires target(f) == source(g).
ChainMap compose(const ChainMap& f, const ChainMap& g);

/// Random homotopy equivalence out of c: c is included into c ⊕ K with K a
/// random acyclic complex, perturbed by a null-homotopic map, and the target
/// is then changed by random invertible (not unimodular) bases.
ChainMap random_equivalence(Rng& rng, const CochainComplex& c, std::size_t max_extra_dim = 3);

}  // namespace torlog

#endif  // TORLOG_K1_HPP
