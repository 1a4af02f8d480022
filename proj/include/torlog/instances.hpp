#ifndef TORLOG_INSTANCES_HPP
#define TORLOG_INSTANCES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torlog/chain.hpp"
#include "torlog/fredholm.hpp"
#include "torlog/log_functor.hpp"
#include "torlog/log_value.hpp"

namespace torlog {

/// Objects Q^n, morphisms matrices, log Z = (I - QZ) ⊕ (ZQ - I') with the
/// pseudo-inverse parametrix, character the matrix trace.
class FredholmInstance {
 public:
  using Object = std::size_t;
  using Morphism = Matrix;
  using Element = Matrix;
  using Character = Scalar;

  explicit FredholmInstance(std::size_t max_dim = 6) : max_dim_(max_dim) {}

  std::string name() const { return "fredholm"; }
  Object random_object(Rng& rng) const;
  Morphism random_morphism(Rng& rng, Object x, Object y) const;
  Morphism identity(Object x) const { return Matrix::identity(x); }
  Morphism compose(const Morphism& a, const Morphism& b) const { return b * a; }
  Morphism random_idempotent(Rng& rng, Object x) const;
  std::pair<Morphism, Morphism> random_isomorphism(Rng& rng, Object x) const;
  Object source(const Morphism& f) const { return f.cols(); }
  Object target(const Morphism& f) const { return f.rows(); }
  Letter letter(Object x) const { return {"Q^" + std::to_string(x), x}; }
  virtual Element log(const Morphism& f) const;
  Element embed(const Element& e, const Insertion& ins) const { return ins.apply(e); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element zero(const BlockSpace& s) const { return Matrix(s.dim(), s.dim()); }
  Character trace(const Element& e) const;
  std::optional<bool> witness(const Element& e) const;
  Json describe(const Morphism& f) const;
  Json character_json(const Character& c) const { return to_string(c); }

  virtual ~FredholmInstance() = default;

 protected:
  std::size_t max_dim_;
};

/// Negative control: the log of every morphism out of Q^corrupt_dim is doubled.
class CorruptedInstance : public FredholmInstance {
 public:
  explicit CorruptedInstance(std::size_t corrupt_dim = 2, std::size_t max_dim = 6)
      : FredholmInstance(max_dim), corrupt_dim_(corrupt_dim) {}
  std::string name() const { return "corrupted"; }
  Element log(const Morphism& f) const override;

 private:
  std::size_t corrupt_dim_;
};

/// A based acyclic complex with inner products: the model of a closed manifold
/// with acyclic flat coefficients.
/// Laplacians and their pseudo-determinants are computed once, by
/// HBordismInstance::make_object.
struct HObject {
  std::string label;
  CochainComplex complex;
  InnerProducts grams;
  std::vector<Matrix> laplacians;
  std::vector<Scalar> pdets;
};

/// A chain homotopy equivalence between objects: the model of an h-bordism.
struct HMorphism {
  HObject source;
  HObject target;
  ChainMap map;
};

/// Signed weighted log of one Laplacian Δ_p placed at `offset` inside letter
/// `letter` of the ambient word: contributes weight * log pdet to the trace.
struct LaplacianLog {
  Scalar weight;
  Scalar pdet;
  std::size_t letter = 0;
  std::size_t offset = 0;  // within the letter's block
  Matrix matrix;
};

struct HElement {
  BlockSpace space;
  std::vector<LaplacianLog> records;
};

/// log(f : M -> M') = -½ Σ (-1)^p p log Δ_p(M) ⊕ ½ Σ (-1)^q q log Δ_q(M') on
/// F(M ⊗ M'). Its character is τ^R(M') - τ^R(M). Morphisms between unit
/// objects (all dims zero) are refused; closed_log handles them through a
/// factorization.
class HBordismInstance {
 public:
  using Object = HObject;
  using Morphism = HMorphism;
  using Element = HElement;
  using Character = LogValue;

  explicit HBordismInstance(std::size_t top_degree = 2, std::size_t max_dim = 3)
      : top_degree_(top_degree), max_dim_(max_dim) {}

  std::string name() const { return "hbordism"; }
  Object random_object(Rng& rng) const;
  Morphism random_morphism(Rng& rng, const Object& x, const Object& y) const;
  Morphism identity(const Object& x) const;
  Morphism compose(const Morphism& a, const Morphism& b) const;
  Morphism random_idempotent(Rng& rng, const Object& x) const;
  std::pair<Morphism, Morphism> random_isomorphism(Rng& rng, const Object& x) const;
  Object source(const Morphism& f) const { return f.source; }
  Object target(const Morphism& f) const { return f.target; }
  Letter letter(const Object& x) const { return {x.label, x.complex.total_dim()}; }
  Element log(const Morphism& f) const;
  Element embed(const Element& e, const Insertion& ins) const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element zero(const BlockSpace& s) const { return HElement{s, {}}; }
  Character trace(const Element& e) const;
  std::optional<bool> witness(const Element&) const { return std::nullopt; }
  Json describe(const Morphism& f) const;
  Json character_json(const Character& c) const;

  /// The unit object (all dims zero).
  Object unit() const;
  /// Wraps a user complex as an object; throws DomainError unless acyclic.
  Object make_object(const CochainComplex& c, const InnerProducts& g, std::string label = "M") const;
  /// Log of the closed morphism b ∘ a : 1 -> 1 through a : 1 -> M, b : M -> 1,
  /// in F(1 ⊗ M ⊗ 1).
  Element closed_log(const Morphism& a, const Morphism& b) const;

 private:
  std::size_t top_degree_;
  std::size_t max_dim_;
};

/// Character compared with log|T(f)| from the mapping cone, corrected by the
/// volume terms of the Gram forms, on random equivalences.
SuiteReport cross_check_hbordism(std::size_t trials, std::uint64_t seed);

/// exp of a character: the log value, and its rational value when it has one.
/// For the Fredholm instance the character k is read as k log(base).
struct TqftValue {
  LogValue log;
  std::optional<Scalar> value;
};

TqftValue weak_tqft_export(const FredholmInstance& inst, const Matrix& f, const Scalar& base = 2);
TqftValue weak_tqft_export(const HBordismInstance& inst, const HMorphism& f);

Json to_json(const TqftValue& v);

}  // namespace torlog

#endif  // TORLOG_INSTANCES_HPP
