#include "torlog/instances.hpp"

#include "torlog/json_io.hpp"
#include "torlog/k1.hpp"
#include "torlog/linalg.hpp"
#include "torlog/torsion.hpp"

namespace torlog {

FredholmInstance::Object FredholmInstance::random_object(Rng& rng) const {
  return static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_dim_)));
}

FredholmInstance::Morphism FredholmInstance::random_morphism(Rng& rng, Object x, Object y) const {
  const auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(std::min(x, y))));
  return random_matrix_of_rank(rng, y, x, r);
}

FredholmInstance::Morphism FredholmInstance::random_idempotent(Rng& rng, Object x) const {
  const auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(x)));
  if (r == 0) return Matrix(x, x);
  // b (c^T b)^-1 c^T projects onto span b along ker c^T.
  const Matrix b = random_matrix_of_rank(rng, x, r, r);
  for (;;) {
    const Matrix c = random_matrix(rng, x, r);
    const Matrix ctb = c.transpose() * b;
    if (sgn(determinant(ctb)) != 0) return b * inverse(ctb) * c.transpose();
  }
}

std::pair<FredholmInstance::Morphism, FredholmInstance::Morphism> FredholmInstance::random_isomorphism(Rng& rng,
                                                                                                     Object x) const {
  Matrix q = random_invertible(rng, x);
  Matrix q_inv = inverse(q);
  return {std::move(q), std::move(q_inv)};
}

FredholmInstance::Element FredholmInstance::log(const Morphism& f) const { return log_fred(f, parametrix(f)).m; }

FredholmInstance::Character FredholmInstance::trace(const Element& e) const { return torlog::trace(e); }

std::optional<bool> FredholmInstance::witness(const Element& e) const {
  if (sgn(torlog::trace(e)) != 0) return false;
  return certify(e).witness_verified;
}

Json FredholmInstance::describe(const Morphism& f) const { return matrix_to_json(f); }

CorruptedInstance::Element CorruptedInstance::log(const Morphism& f) const {
  Element e = FredholmInstance::log(f);
  if (f.cols() == corrupt_dim_) e *= Scalar(2);
  return e;
}

namespace {

std::string object_label(const CochainComplex& c) {
  std::string s = "M(";
  for (std::size_t p = 0; p < c.dims().size(); ++p) s += (p ? "," : "") + std::to_string(c.dim(p));
  return s + ")";
}

}  // namespace

HBordismInstance::Object HBordismInstance::make_object(const CochainComplex& c, const InnerProducts& g,
                                                       std::string label) const {
  for (std::size_t p = 0; p <= c.top_degree(); ++p) {
    if (const auto b = betti(c, p); b != 0) {
      throw DomainError("h-bordism objects must be acyclic: betti_" + std::to_string(p) + " = " + std::to_string(b));
    }
  }
  HObject x{std::move(label), c, g, {}, {}};
  for (std::size_t p = 0; p <= c.top_degree(); ++p) {
    x.laplacians.push_back(laplacian(c, g, p));
    x.pdets.push_back(pseudo_det(x.laplacians.back(), g.gram(p)));
  }
  return x;
}

HBordismInstance::Object HBordismInstance::unit() const {
  const auto c = CochainComplex::zero(std::vector<std::size_t>(top_degree_ + 1, 0));
  return make_object(c, InnerProducts::standard(c), "1");
}

HBordismInstance::Object HBordismInstance::random_object(Rng& rng) const {
  auto c = random_acyclic_complex(rng, top_degree_, max_dim_);
  while (c.total_dim() == 0) c = random_acyclic_complex(rng, top_degree_, max_dim_);
  const auto g = rng.coin() ? InnerProducts::standard(c) : random_inner_products(rng, c);
  return make_object(c, g, object_label(c));
}

HBordismInstance::Morphism HBordismInstance::random_morphism(Rng& rng, const Object& x, const Object& y) const {
  // Every chain map between acyclic complexes is d h + h d; all are equivalences.
  const auto& cx = x.complex;
  const auto& cy = y.complex;
  const std::size_t m = cx.top_degree();
  std::vector<Matrix> h;
  for (std::size_t p = 0; p <= m; ++p) h.push_back(p == 0 ? Matrix(0, cx.dim(0)) : random_matrix(rng, cy.dim(p - 1), cx.dim(p), -1, 1));
  std::vector<Matrix> f;
  for (std::size_t p = 0; p <= m; ++p) {
    Matrix fp(cy.dim(p), cx.dim(p));
    if (p > 0) fp += cy.d(p - 1) * h[p];
    if (p < m) fp += h[p + 1] * cx.d(p);
    f.push_back(std::move(fp));
  }
  return HMorphism{x, y, ChainMap(cx, cy, std::move(f))};
}

HBordismInstance::Morphism HBordismInstance::identity(const Object& x) const {
  return HMorphism{x, x, ChainMap::identity(x.complex)};
}

HBordismInstance::Morphism HBordismInstance::compose(const Morphism& a, const Morphism& b) const {
  return HMorphism{a.source, b.target, torlog::compose(a.map, b.map)};
}

HBordismInstance::Morphism HBordismInstance::random_idempotent(Rng& rng, const Object& x) const {
  if (rng.coin()) return identity(x);
  std::vector<Matrix> zero;
  for (auto n : x.complex.dims()) zero.emplace_back(n, n);
  return HMorphism{x, x, ChainMap(x.complex, x.complex, std::move(zero))};
}

std::pair<HBordismInstance::Morphism, HBordismInstance::Morphism> HBordismInstance::random_isomorphism(
    Rng& rng, const Object& x) const {
  const auto& c = x.complex;
  std::vector<Matrix> a, a_inv;
  for (auto n : c.dims()) {
    a.push_back(random_invertible(rng, n));
    a_inv.push_back(inverse(a.back()));
  }
  std::vector<Matrix> d;
  for (std::size_t p = 0; p < c.top_degree(); ++p) d.push_back(a[p + 1] * c.d(p) * a_inv[p]);
  const CochainComplex cy(c.dims(), std::move(d));
  const Object y = make_object(cy, random_inner_products(rng, cy), object_label(cy) + "'");
  return {HMorphism{x, y, ChainMap(c, cy, std::move(a))}, HMorphism{y, x, ChainMap(cy, c, std::move(a_inv))}};
}

HBordismInstance::Element HBordismInstance::log(const Morphism& f) const {
  if (f.source.complex.total_dim() == 0 && f.target.complex.total_dim() == 0) {
    throw DomainError("closed morphism between unit objects: log needs a factorization through a non-unit object");
  }
  HElement e{BlockSpace(MonoidalWord({letter(f.source), letter(f.target)})), {}};
  auto push = [&](const HObject& x, std::size_t letter_index, int side) {
    std::size_t offset = 0;
    for (std::size_t p = 0; p <= x.complex.top_degree(); ++p) {
      const long sign = p % 2 == 0 ? 1 : -1;
      if (x.complex.dim(p) > 0) {
        e.records.push_back({make_scalar(side * sign * static_cast<long>(p), 2), x.pdets[p], letter_index, offset,
                             x.laplacians[p]});
      }
      offset += x.complex.dim(p);
    }
  };
  push(f.source, 0, -1);
  push(f.target, 1, 1);
  return e;
}

HBordismInstance::Element HBordismInstance::embed(const Element& e, const Insertion& ins) const {
  if (!(e.space == ins.source)) throw ShapeError("element does not live in the insertion's source space");
  HElement out{ins.target, e.records};
  for (auto& r : out.records) r.letter = ins.letter_map[r.letter];
  return out;
}

HBordismInstance::Element HBordismInstance::add(const Element& a, const Element& b) const {
  if (!(a.space == b.space)) throw ShapeError("cannot add logs on different spaces");
  HElement out = a;
  out.records.insert(out.records.end(), b.records.begin(), b.records.end());
  return out;
}

HBordismInstance::Element HBordismInstance::sub(const Element& a, const Element& b) const {
  HElement neg = b;
  for (auto& r : neg.records) r.weight = -r.weight;
  return add(a, neg);
}

HBordismInstance::Character HBordismInstance::trace(const Element& e) const {
  std::vector<LogTerm> terms;
  for (const auto& r : e.records) terms.push_back({r.weight, r.pdet});
  return LogValue(std::move(terms));
}

Json HBordismInstance::describe(const Morphism& f) const {
  Json comps = Json::array();
  for (const auto& m : f.map.components) comps.push_back(matrix_to_json(m));
  return Json{{"source", complex_to_json(f.source.complex, f.source.grams)},
              {"target", complex_to_json(f.target.complex, f.target.grams)},
              {"components", comps}};
}

Json HBordismInstance::character_json(const Character& c) const { return log_value_to_json(c); }

HBordismInstance::Element HBordismInstance::closed_log(const Morphism& a, const Morphism& b) const {
  if (a.source.complex.total_dim() != 0 || b.target.complex.total_dim() != 0) {
    throw DomainError("closed_log expects a : 1 -> M and b : M -> 1");
  }
  if (!(a.target.complex == b.source.complex)) throw ShapeError("factorization morphisms are not composable");
  const MonoidalWord w({letter(a.source), letter(a.target), letter(b.target)});
  return add(embed(log(a), sub_word_insertion(w, {0, 1})), embed(log(b), sub_word_insertion(w, {1, 2})));
}

SuiteReport cross_check_hbordism(std::size_t trials, std::uint64_t seed) {
  SuiteReport report{"hbordism_vs_cone_torsion", 0, 0, {}};
  const HBordismInstance inst;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(case_seed(seed, t));
    const HObject x = inst.random_object(rng);
    const ChainMap f = random_equivalence(rng, x.complex, 2);
    const HObject y = inst.make_object(f.target, random_inner_products(rng, f.target), "N");
    const HMorphism m{x, y, f};
    const LogValue character = inst.trace(inst.log(m));
    const LogValue cone = torsion_of_equivalence(f).log_abs() + volume_correction(y.grams) - volume_correction(x.grams);
    const LogValue direct = reidemeister(y.complex, y.grams) - reidemeister(x.complex, x.grams);
    report.record(character == cone && character == direct, [&] {
      return Json{{"trial", t},
                  {"character", log_value_to_json(character)},
                  {"cone", log_value_to_json(cone)},
                  {"map", inst.describe(m)}};
    });
  }
  return report;
}

TqftValue weak_tqft_export(const FredholmInstance& inst, const Matrix& f, const Scalar& base) {
  const Scalar k = inst.trace(inst.log(f));
  const LogValue v = LogValue::log(base, k);
  return {v, v.exp_rational()};
}

TqftValue weak_tqft_export(const HBordismInstance& inst, const HMorphism& f) {
  const LogValue v = inst.trace(inst.log(f));
  return {v, v.exp_rational()};
}

Json to_json(const TqftValue& v) {
  return Json{{"log", log_value_to_json(v.log)}, {"value", v.value ? Json(to_string(*v.value)) : Json(nullptr)}};
}

}  // namespace torlog
