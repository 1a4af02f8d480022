#include "torlog/nerve.hpp"

#include <string>

#include "torlog/linalg.hpp"

namespace torlog {

std::size_t MonoidalWord::dim() const {
  std::size_t n = 0;
  for (const auto& l : letters_) n += l.dim;
  return n;
}

MonoidalWord MonoidalWord::inserted(std::size_t k, const Letter& v) const {
  if (k > letters_.size()) throw ShapeError("insertion position " + std::to_string(k) + " out of range");
  auto l = letters_;
  l.insert(l.begin() + static_cast<long>(k), v);
  return MonoidalWord(std::move(l));
}

MonoidalWord MonoidalWord::permuted(const std::vector<std::size_t>& sigma) const {
  if (sigma.size() != letters_.size()) throw ShapeError("permutation arity does not match the word");
  std::vector<bool> seen(sigma.size(), false);
  std::vector<Letter> l;
  for (auto s : sigma) {
    if (s >= sigma.size() || seen[s]) throw ShapeError("not a permutation");
    seen[s] = true;
    l.push_back(letters_[s]);
  }
  return MonoidalWord(std::move(l));
}

MonoidalWord MonoidalWord::concat(const MonoidalWord& o) const {
  auto l = letters_;
  l.insert(l.end(), o.letters_.begin(), o.letters_.end());
  return MonoidalWord(std::move(l));
}

BlockSpace::BlockSpace(MonoidalWord w) : word_(std::move(w)), offsets_{0} {
  for (const auto& l : word_.letters()) offsets_.push_back(offsets_.back() + l.dim);
}

BlockSpace f_space(const MonoidalWord& w) { return BlockSpace(w); }

Matrix mu_sigma(const MonoidalWord& w, const std::vector<std::size_t>& sigma) {
  const BlockSpace src(w), tgt(w.permuted(sigma));
  Matrix p(tgt.dim(), src.dim());
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t r = 0; r < tgt.block_dim(i); ++r) p(tgt.block_offset(i) + r, src.block_offset(sigma[i]) + r) = 1;
  return p;
}

Matrix mu_act(const MonoidalWord& w, const std::vector<std::size_t>& sigma, const Matrix& t) {
  const Matrix p = mu_sigma(w, sigma);
  return p * t * p.transpose();
}

Matrix Insertion::embedding() const {
  Matrix e(target.dim(), source.dim());
  for (std::size_t i = 0; i < letter_map.size(); ++i) {
    const std::size_t j = letter_map[i];
    for (std::size_t r = 0; r < source.block_dim(i); ++r) e(target.block_offset(j) + r, source.block_offset(i) + r) = 1;
  }
  return e;
}

Matrix Insertion::apply(const Matrix& t) const {
  if (t.rows() != source.dim() || t.cols() != source.dim()) throw ShapeError("operator does not act on the source space");
  Matrix s(target.dim(), target.dim());
  for (std::size_t i = 0; i < letter_map.size(); ++i)
    for (std::size_t j = 0; j < letter_map.size(); ++j)
      s.set_block(target.block_offset(letter_map[i]), target.block_offset(letter_map[j]),
                  t.block(source.block_offset(i), source.block_offset(j), source.block_dim(i), source.block_dim(j)));
  return s;
}

Matrix Insertion::project(const Matrix& s) const {
  if (s.rows() != target.dim() || s.cols() != target.dim()) throw ShapeError("operator does not act on the target space");
  Matrix t(source.dim(), source.dim());
  for (std::size_t i = 0; i < letter_map.size(); ++i)
    for (std::size_t j = 0; j < letter_map.size(); ++j)
      t.set_block(source.block_offset(i), source.block_offset(j),
                  s.block(target.block_offset(letter_map[i]), target.block_offset(letter_map[j]), source.block_dim(i),
                          source.block_dim(j)));
  return t;
}

Insertion Insertion::then(const Insertion& next) const {
  if (!(target == next.source)) throw ShapeError("insertions are not composable");
  Insertion out{source, next.target, {}};
  for (auto j : letter_map) out.letter_map.push_back(next.letter_map[j]);
  return out;
}

Insertion identity_insertion(const MonoidalWord& w) {
  Insertion e{BlockSpace(w), BlockSpace(w), {}};
  for (std::size_t i = 0; i < w.size(); ++i) e.letter_map.push_back(i);
  return e;
}

Insertion eta_insert(const MonoidalWord& w, std::size_t k, const Letter& v) {
  Insertion e{BlockSpace(w), BlockSpace(w.inserted(k, v)), {}};
  for (std::size_t i = 0; i < w.size(); ++i) e.letter_map.push_back(i < k ? i : i + 1);
  return e;
}

Insertion sub_word_insertion(const MonoidalWord& w, const std::vector<std::size_t>& positions) {
  std::vector<Letter> sub;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] >= w.size() || (i > 0 && positions[i] <= positions[i - 1])) {
      throw ShapeError("sub-word positions must be increasing and in range");
    }
    sub.push_back(w.at(positions[i]));
  }
  return Insertion{BlockSpace(MonoidalWord(std::move(sub))), BlockSpace(w), positions};
}

void SuiteReport::record(bool passed, const std::function<Json()>& describe) {
  ++checks;
  if (passed) return;
  ++failures;
  if (!counterexample) counterexample = describe();
}

Json to_json(const SuiteReport& r) {
  Json j;
  j["name"] = r.name;
  j["checks"] = r.checks;
  j["passed"] = r.checks - r.failures;
  j["failed"] = r.failures;
  j["counterexample"] = r.counterexample ? *r.counterexample : Json(nullptr);
  return j;
}

namespace {

Json word_json(const MonoidalWord& w) {
  Json a = Json::array();
  for (const auto& l : w.letters()) a.push_back({{"label", l.label}, {"dim", l.dim}});
  return a;
}

}  // namespace

MonoidalWord random_word(Rng& rng, std::size_t max_len, std::size_t max_dim) {
  const auto n = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_len)));
  std::vector<Letter> l;
  for (std::size_t i = 0; i < n; ++i) {
    l.push_back({std::string(1, static_cast<char>('a' + i)), static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_dim)))});
  }
  return MonoidalWord(std::move(l));
}

SuiteReport verify_eta_commutation(std::size_t trials, std::uint64_t seed) {
  SuiteReport report{"eta_commutation", 0, 0, std::nullopt};
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(case_seed(seed, t));
    const MonoidalWord x = random_word(rng, 4, 3);
    const std::size_t n = x.size();
    const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n)));
    const auto l = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) + 1));
    const Letter w{"w", static_cast<std::size_t>(rng.uniform(0, 3))};
    const Letter z{"z", static_cast<std::size_t>(rng.uniform(0, 3))};
    const Matrix op = random_matrix(rng, x.dim(), x.dim());

    const Insertion first = eta_insert(x, k, w);
    const Insertion lhs = first.then(eta_insert(first.target.word(), l, z));
    Insertion rhs;
    if (k < l) {
      const Insertion a = eta_insert(x, l - 1, z);
      rhs = a.then(eta_insert(a.target.word(), k, w));
    } else {
      const Insertion a = eta_insert(x, l, z);
      rhs = a.then(eta_insert(a.target.word(), k + 1, w));
    }
    const bool ok = lhs.target == rhs.target && lhs.letter_map == rhs.letter_map && lhs.apply(op) == rhs.apply(op);
    report.record(ok, [&] {
      return Json{{"word", word_json(x)}, {"k", k}, {"l", l}, {"case", k < l ? "k<l" : "k>=l"}};
    });
  }
  return report;
}

SuiteReport verify_trace_compat(std::size_t trials, std::uint64_t seed) {
  SuiteReport report{"trace_compat", 0, 0, std::nullopt};
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(case_seed(seed, t));
    const MonoidalWord x = random_word(rng, 4, 3);
    const Matrix op = random_matrix(rng, x.dim(), x.dim());
    Insertion e = identity_insertion(x);
    for (int i = 0; i < 3; ++i) {
      const auto& cur = e.target.word();
      const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(cur.size())));
      e = e.then(eta_insert(cur, k, Letter{"v" + std::to_string(i), static_cast<std::size_t>(rng.uniform(0, 3))}));
    }
    const Scalar tr = trace(op);
    const bool inserted = trace(e.apply(op)) == tr && e.project(e.apply(op)) == op;
    const auto sigma = rng.permutation(x.size());
    const bool permuted = trace(mu_act(x, sigma, op)) == tr;
    report.record(inserted && permuted, [&] {
      return Json{{"word", word_json(x)}, {"insertion_ok", inserted}, {"permutation_ok", permuted}};
    });
  }
  return report;
}

SuiteReport verify_mu_cocycle(std::size_t trials, std::uint64_t seed) {
  SuiteReport report{"mu_cocycle", 0, 0, std::nullopt};
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(case_seed(seed, t));
    const MonoidalWord x = random_word(rng, 5, 3);
    const auto sigma = rng.permutation(x.size());
    const auto sigma2 = rng.permutation(x.size());
    std::vector<std::size_t> tau(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) tau[i] = sigma[sigma2[i]];
    const MonoidalWord xs = x.permuted(sigma);
    const Matrix op = random_matrix(rng, x.dim(), x.dim());
    const bool ok = xs.permuted(sigma2) == x.permuted(tau) && mu_sigma(xs, sigma2) * mu_sigma(x, sigma) == mu_sigma(x, tau) &&
                    mu_act(xs, sigma2, mu_act(x, sigma, op)) == mu_act(x, tau, op);
    report.record(ok, [&] { return Json{{"word", word_json(x)}, {"sigma", sigma}, {"sigma_prime", sigma2}}; });
  }
  return report;
}

}  // namespace torlog
