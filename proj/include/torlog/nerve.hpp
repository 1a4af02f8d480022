#ifndef TORLOG_NERVE_HPP
#define TORLOG_NERVE_HPP

#include <cstdint>
#include <functional>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "torlog/matrix.hpp"
#include "torlog/random.hpp"

namespace torlog {

using Json = nlohmann::ordered_json;

struct Letter {
  std::string label;
  std::size_t dim = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// x_1 ⊗ ... ⊗ x_n; the empty word is the unit, with F(1) = 0.
class MonoidalWord {
 public:
  MonoidalWord() = default;
  explicit MonoidalWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& at(std::size_t i) const { return letters_.at(i); }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t dim() const;

  /// Word with v at position k (0 <= k <= size()).
  MonoidalWord inserted(std::size_t k, const Letter& v) const;
  /// Letter i of the result is letter sigma[i] of this word.
  MonoidalWord permuted(const std::vector<std::size_t>& sigma) const;
  MonoidalWord concat(const MonoidalWord& o) const;

  friend bool operator==(const MonoidalWord&, const MonoidalWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// F(w) = ⊕ Q^{dim x_i}, with block offsets.
class BlockSpace {
 public:
  BlockSpace() : offsets_{0} {}
  explicit BlockSpace(MonoidalWord w);

  const MonoidalWord& word() const { return word_; }
  std::size_t dim() const { return offsets_.back(); }
  std::size_t block_offset(std::size_t i) const { return offsets_.at(i); }
  std::size_t block_dim(std::size_t i) const { return word_.at(i).dim; }
  const std::vector<std::size_t>& offsets() const { return offsets_; }

  friend bool operator==(const BlockSpace&, const BlockSpace&) = default;

 private:
  MonoidalWord word_;
  std::vector<std::size_t> offsets_;
};

BlockSpace f_space(const MonoidalWord& w);

/// Block permutation F(w) -> F(w permuted by sigma); operators move by P T P^T.
Matrix mu_sigma(const MonoidalWord& w, const std::vector<std::size_t>& sigma);
Matrix mu_act(const MonoidalWord& w, const std::vector<std::size_t>& sigma, const Matrix& t);

/// Embedding of F(source) into F(target) sending letter i to letter
/// letter_map[i]; letters of the target not hit are the inserted ones.
/// Operators embed as E T E^T (zero padding), with left inverse S -> E^T S E.
struct Insertion {
  BlockSpace source;
  BlockSpace target;
  std::vector<std::size_t> letter_map;

  Matrix embedding() const;
  Matrix apply(const Matrix& t) const;
  Matrix project(const Matrix& s) const;
  /// next ∘ this.
  Insertion then(const Insertion& next) const;
};

Insertion identity_insertion(const MonoidalWord& w);

/// η^k_v : F(w) -> F(w with v inserted at position k).
Insertion eta_insert(const MonoidalWord& w, std::size_t k, const Letter& v);

/// Embedding of F(w_i) for the sub-word at the given letter positions of w,
/// i.e. the composite of insertions of all other letters.
Insertion sub_word_insertion(const MonoidalWord& w, const std::vector<std::size_t>& positions);

struct SuiteReport {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::optional<Json> counterexample;

  bool ok() const { return failures == 0; }
  void record(bool passed, const std::function<Json()>& describe);
};

Json to_json(const SuiteReport& r);

/// η^l_z η^k_w = η^k_w η^{l-1}_z (k < l) and η^{k+1}_w η^l_z (k >= l), on
/// words and on random operators.
SuiteReport verify_eta_commutation(std::size_t trials, std::uint64_t seed);

/// Trace is unchanged by nested insertions and by μ_σ.
SuiteReport verify_trace_compat(std::size_t trials, std::uint64_t seed);

/// μ for σ followed by σ' on the permuted word equals μ for the composite.
SuiteReport verify_mu_cocycle(std::size_t trials, std::uint64_t seed);

MonoidalWord random_word(Rng& rng, std::size_t max_len, std::size_t max_dim);

/// p-simplex x_0 -> x_1 -> ... -> x_p.
template <class Object, class Morphism>
struct NerveSimplex {
  std::vector<Object> objects;
  std::vector<Morphism> morphisms;

  std::size_t dimension() const { return morphisms.size(); }
};

/// d_j deletes x_j: composes α_j ∘ α_{j-1} for interior j and drops an end
/// morphism for j = 0 or p. `compose(a, b)` is b ∘ a.
template <class Object, class Morphism, class Compose>
NerveSimplex<Object, Morphism> face(const NerveSimplex<Object, Morphism>& s, std::size_t j, Compose compose) {
  const std::size_t p = s.dimension();
  if (j > p || p == 0) throw ShapeError("face index out of range");
  NerveSimplex<Object, Morphism> out;
  for (std::size_t i = 0; i <= p; ++i)
    if (i != j) out.objects.push_back(s.objects[i]);
  for (std::size_t i = 0; i < p; ++i) {
    if (j == 0 && i == 0) continue;
    if (j == p && i == p - 1) continue;
    if (j > 0 && j < p && i == j - 1) {
      out.morphisms.push_back(compose(s.morphisms[j - 1], s.morphisms[j]));
      ++i;
      continue;
    }
    out.morphisms.push_back(s.morphisms[i]);
  }
  return out;
}

/// s_j repeats x_j with an identity morphism.
template <class Object, class Morphism, class Identity>
NerveSimplex<Object, Morphism> degeneracy(const NerveSimplex<Object, Morphism>& s, std::size_t j, Identity identity) {
  if (j > s.dimension()) throw ShapeError("degeneracy index out of range");
  NerveSimplex<Object, Morphism> out = s;
  out.objects.insert(out.objects.begin() + static_cast<long>(j), s.objects[j]);
  out.morphisms.insert(out.morphisms.begin() + static_cast<long>(j), identity(s.objects[j]));
  return out;
}

}  // namespace torlog

#endif  // TORLOG_NERVE_HPP
