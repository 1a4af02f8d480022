#ifndef TORLOG_LOG_FUNCTOR_HPP
#define TORLOG_LOG_FUNCTOR_HPP

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torlog/nerve.hpp"

namespace torlog {

/// What the axiom harness needs from a log-functor. log(f) for f : x -> y is an
/// element of F(letter(x) ⊗ letter(y)); elements move along insertions with
/// embed, and trace sends them to the character group. witness certifies that
/// an element is a finite sum of commutators, or returns nullopt when the
/// instance has no such certificate and the trace alone decides.
template <class I>
concept LogFunctor = requires(const I& inst, Rng& rng, const typename I::Object& x, const typename I::Morphism& f,
                              const typename I::Element& e, const Insertion& ins, const BlockSpace& space,
                              const typename I::Character& c) {
  { inst.name() } -> std::convertible_to<std::string>;
  { inst.random_object(rng) } -> std::same_as<typename I::Object>;
  { inst.random_morphism(rng, x, x) } -> std::same_as<typename I::Morphism>;
  { inst.identity(x) } -> std::same_as<typename I::Morphism>;
  { inst.compose(f, f) } -> std::same_as<typename I::Morphism>;
  { inst.random_idempotent(rng, x) } -> std::same_as<typename I::Morphism>;
  { inst.random_isomorphism(rng, x) } -> std::same_as<std::pair<typename I::Morphism, typename I::Morphism>>;
  { inst.source(f) } -> std::same_as<typename I::Object>;
  { inst.target(f) } -> std::same_as<typename I::Object>;
  { inst.letter(x) } -> std::same_as<Letter>;
  { inst.log(f) } -> std::same_as<typename I::Element>;
  { inst.embed(e, ins) } -> std::same_as<typename I::Element>;
  { inst.add(e, e) } -> std::same_as<typename I::Element>;
  { inst.sub(e, e) } -> std::same_as<typename I::Element>;
  { inst.zero(space) } -> std::same_as<typename I::Element>;
  { inst.trace(e) } -> std::same_as<typename I::Character>;
  { inst.witness(e) } -> std::same_as<std::optional<bool>>;
  { inst.describe(f) } -> std::same_as<Json>;
  { inst.character_json(c) } -> std::same_as<Json>;
  { c == c } -> std::convertible_to<bool>;
  { c + c } -> std::convertible_to<typename I::Character>;
};

struct LogAxiomReport {
  std::string instance;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<SuiteReport> axioms;

  bool all_passed() const {
    for (const auto& a : axioms)
      if (!a.ok()) return false;
    return true;
  }
};

inline Json to_json(const LogAxiomReport& r) {
  Json axioms = Json::array();
  for (const auto& a : r.axioms) axioms.push_back(to_json(a));
  return Json{{"instance", r.instance}, {"trials", r.trials}, {"seed", r.seed}, {"axioms", axioms}, {"all_passed", r.all_passed()}};
}

/// log of a p-simplex x_0 -> ... -> x_p: the sum of the logs of its edges, each
/// embedded into F(x_0 ⊗ ... ⊗ x_p) at positions (j, j+1).
template <LogFunctor I>
typename I::Element log_simplex(const I& inst, const NerveSimplex<typename I::Object, typename I::Morphism>& s) {
  std::vector<Letter> letters;
  for (const auto& x : s.objects) letters.push_back(inst.letter(x));
  const MonoidalWord w(std::move(letters));
  auto acc = inst.zero(BlockSpace(w));
  for (std::size_t j = 0; j < s.dimension(); ++j) {
    acc = inst.add(acc, inst.embed(inst.log(s.morphisms[j]), sub_word_insertion(w, {j, j + 1})));
  }
  return acc;
}

namespace detail {

template <LogFunctor I>
bool vanishes(const I& inst, const typename I::Element& e) {
  if (!(inst.trace(e) == typename I::Character{})) return false;
  const auto w = inst.witness(e);
  return !w.has_value() || *w;
}

template <LogFunctor I>
MonoidalWord word_of(const I& inst, std::initializer_list<typename I::Object> objects) {
  std::vector<Letter> l;
  for (const auto& x : objects) l.push_back(inst.letter(x));
  return MonoidalWord(std::move(l));
}

}  // namespace detail

/// Randomized check of the log-functor axioms:
///  additivity        η_y log(βα) - η_z log α - η_x log β ≐ 0
///  face              τ(log d_j s) = τ(log s) for interior faces of 2- and 3-simplices
///  foreign letters   τ is unchanged by inserting letters foreign to the simplex
///  identity, projection   log ≐ 0
///  conjugation       τ(log qαq^-1) = τ(log α), also after padding by η on both sides
///  endomorphisms     log(βα) - log α - log β ≐ 0 in F(x ⊗ x)
///  degeneracy        τ(log s_j s) = τ(log s)
template <LogFunctor I>
LogAxiomReport verify_log_axioms(const I& inst, std::size_t trials, std::uint64_t seed) {
  using Object = typename I::Object;
  using Morphism = typename I::Morphism;
  using Simplex = NerveSimplex<Object, Morphism>;
  using detail::vanishes;
  using detail::word_of;

  SuiteReport additivity{"additivity", 0, 0, {}}, face_compat{"face_compatibility", 0, 0, {}},
      foreign{"strongly_simplicial", 0, 0, {}}, identity{"identity_log", 0, 0, {}},
      projection{"projection_log", 0, 0, {}}, conjugation{"conjugation_invariance", 0, 0, {}},
      endo{"endomorphism_additivity", 0, 0, {}}, degeneracy_report{"degeneracy", 0, 0, {}};

  auto compose = [&](const Morphism& a, const Morphism& b) { return inst.compose(a, b); };
  auto ident = [&](const Object& x) { return inst.identity(x); };

  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(case_seed(seed, t));
    const Object x = inst.random_object(rng), y = inst.random_object(rng), z = inst.random_object(rng),
                 v = inst.random_object(rng);
    const Morphism alpha = inst.random_morphism(rng, x, y);
    const Morphism beta = inst.random_morphism(rng, y, z);
    const Morphism gamma = inst.random_morphism(rng, z, v);
    const auto pair_json = [&] {
      return Json{{"trial", t}, {"alpha", inst.describe(alpha)}, {"beta", inst.describe(beta)}};
    };

    // (a) additivity in F(x ⊗ y ⊗ z).
    {
      const MonoidalWord xz = word_of(inst, {x, z}), xy = word_of(inst, {x, y}), yz = word_of(inst, {y, z});
      const auto d = inst.sub(inst.sub(inst.embed(inst.log(compose(alpha, beta)), eta_insert(xz, 1, inst.letter(y))),
                                       inst.embed(inst.log(alpha), eta_insert(xy, 2, inst.letter(z)))),
                              inst.embed(inst.log(beta), eta_insert(yz, 0, inst.letter(x))));
      additivity.record(vanishes(inst, d), [&] {
        Json j = pair_json();
        j["trace"] = inst.character_json(inst.trace(d));
        return j;
      });
    }

    // (b) interior faces of a 2-simplex and a 3-simplex.
    {
      const Simplex s2{{x, y, z}, {alpha, beta}};
      const Simplex s3{{x, y, z, v}, {alpha, beta, gamma}};
      const auto t2 = inst.trace(log_simplex(inst, s2));
      const auto t3 = inst.trace(log_simplex(inst, s3));
      bool ok = inst.trace(log_simplex(inst, face(s2, 1, compose))) == t2;
      for (std::size_t j = 1; j <= 2; ++j) ok = ok && inst.trace(log_simplex(inst, face(s3, j, compose))) == t3;
      face_compat.record(ok, pair_json);

      // Foreign letter at a random position of the 2-simplex word.
      const MonoidalWord w2 = word_of(inst, {x, y, z});
      const auto k = static_cast<std::size_t>(rng.uniform(0, 3));
      const auto padded = inst.embed(log_simplex(inst, s2), eta_insert(w2, k, inst.letter(v)));
      foreign.record(inst.trace(padded) == t2, pair_json);

      // (f) degeneracies of the 1-simplex α.
      const Simplex s1{{x, y}, {alpha}};
      const auto t1 = inst.trace(inst.log(alpha));
      const bool deg = inst.trace(log_simplex(inst, torlog::degeneracy(s1, 0, ident))) == t1 &&
                       inst.trace(log_simplex(inst, torlog::degeneracy(s1, 1, ident))) == t1;
      degeneracy_report.record(deg, pair_json);
    }

    // (c) identity and idempotents.
    {
      const auto lid = inst.log(inst.identity(x));
      identity.record(vanishes(inst, lid), [&] { return Json{{"trial", t}}; });
      const Morphism p = inst.random_idempotent(rng, x);
      const auto lp = inst.log(p);
      projection.record(vanishes(inst, lp), [&] {
        return Json{{"trial", t}, {"idempotent", inst.describe(p)}, {"trace", inst.character_json(inst.trace(lp))}};
      });
    }

    // (d) conjugation q α q^-1 for an endomorphism α of x and q : x -> x'.
    {
      const Morphism a = inst.random_morphism(rng, x, x);
      const auto [q, q_inv] = inst.random_isomorphism(rng, x);
      const Object xp = inst.target(q);
      const Morphism conj = compose(compose(q_inv, a), q);
      const auto ta = inst.trace(inst.log(a));
      const MonoidalWord xx = word_of(inst, {x, x});
      const Insertion front = eta_insert(xx, 0, inst.letter(xp));
      const Insertion both = front.then(eta_insert(front.target.word(), 3, inst.letter(xp)));
      const bool ok = inst.trace(inst.log(conj)) == ta && inst.trace(inst.embed(inst.log(a), both)) == ta;
      conjugation.record(ok, [&] {
        return Json{{"trial", t}, {"endomorphism", inst.describe(a)}, {"conjugator", inst.describe(q)}};
      });
    }

    // (e) endomorphism additivity in F(x ⊗ x).
    {
      const Morphism a = inst.random_morphism(rng, x, x), b = inst.random_morphism(rng, x, x);
      const auto d = inst.sub(inst.sub(inst.log(compose(a, b)), inst.log(a)), inst.log(b));
      endo.record(vanishes(inst, d), [&] {
        return Json{{"trial", t}, {"a", inst.describe(a)}, {"b", inst.describe(b)}, {"trace", inst.character_json(inst.trace(d))}};
      });
    }
  }

  return LogAxiomReport{inst.name(), trials, seed,
                        {additivity, face_compat, foreign, identity, projection, conjugation, endo, degeneracy_report}};
}

}  // namespace torlog

#endif  // TORLOG_LOG_FUNCTOR_HPP
