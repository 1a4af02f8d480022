#include "torlog/json_io.hpp"

#include <cstdio>
#include <string>

namespace torlog {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t count_from_json(const Json& j) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) throw ParseError("expected a non-negative integer, got " + j.dump());
  const auto v = j.get<long long>();
  if (v < 0) throw ParseError("expected a non-negative integer, got " + j.dump());
  return static_cast<std::size_t>(v);
}

}  // namespace

Json scalar_to_json(const Scalar& q) { return to_string(q); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer() || j.is_number_unsigned()) return Scalar(std::to_string(j.get<long long>()));
  throw ParseError("expected a rational string or integer, got " + j.dump());
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  if (j.empty()) return Matrix();
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  Matrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError("matrix rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (j.is_array() && j.empty() && (rows == 0 || cols == 0)) return Matrix(rows, cols);
  Matrix m = matrix_from_json(j);
  if (m.rows() == rows && m.cols() == 0 && cols == 0) return m;
  if (m.rows() != rows || m.cols() != cols) {
    throw ParseError("expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix, got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  return m;
}

Json log_value_to_json(const LogValue& v) {
  Json a = Json::array();
  for (const auto& t : v.terms()) a.push_back({{"w", scalar_to_json(t.weight)}, {"base", scalar_to_json(t.base)}});
  return a;
}

LogValue log_value_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("log value must be an array of terms");
  std::vector<LogTerm> terms;
  for (const auto& t : j) terms.push_back({scalar_from_json(field(t, "w")), scalar_from_json(field(t, "base"))});
  return LogValue(std::move(terms));
}

std::string log_value_approx(const LogValue& v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v.approx());
  return buf;
}

Json complex_to_json(const CochainComplex& c, const std::optional<InnerProducts>& g) {
  Json j;
  j["dims"] = c.dims();
  Json d = Json::array();
  for (const auto& m : c.differentials()) d.push_back(matrix_to_json(m));
  j["differentials"] = std::move(d);
  if (g) {
    Json gs = Json::array();
    for (const auto& m : g->grams()) gs.push_back(matrix_to_json(m));
    j["grams"] = std::move(gs);
  }
  return j;
}

CochainComplex complex_from_json(const Json& j) {
  const Json& dj = field(j, "dims");
  if (!dj.is_array() || dj.empty()) throw ParseError("\"dims\" must be a non-empty array");
  std::vector<std::size_t> dims;
  for (const auto& x : dj) dims.push_back(count_from_json(x));
  const Json& diffs = j.contains("differentials") ? j.at("differentials") : Json::array();
  if (!diffs.is_array() || diffs.size() + 1 != dims.size()) {
    throw ParseError("expected " + std::to_string(dims.size() - 1) + " differentials");
  }
  std::vector<Matrix> d;
  for (std::size_t p = 0; p + 1 < dims.size(); ++p) d.push_back(matrix_from_json(diffs[p], dims[p + 1], dims[p]));
  return CochainComplex(std::move(dims), std::move(d));
}

InnerProducts grams_from_json(const Json& j, const CochainComplex& c) {
  if (!j.is_object() || !j.contains("grams") || j.at("grams").is_null()) return InnerProducts::standard(c);
  const Json& gj = j.at("grams");
  if (!gj.is_array() || gj.size() != c.dims().size()) throw ParseError("expected one Gram matrix per degree");
  std::vector<Matrix> g;
  for (std::size_t p = 0; p < gj.size(); ++p) g.push_back(matrix_from_json(gj[p], c.dim(p), c.dim(p)));
  return InnerProducts(c, std::move(g));
}

Json chain_map_to_json(const ChainMap& f) {
  Json comps = Json::array();
  for (const auto& m : f.components) comps.push_back(matrix_to_json(m));
  return Json{{"source", complex_to_json(f.source)}, {"target", complex_to_json(f.target)}, {"components", comps}};
}

ChainMap chain_map_from_json(const Json& j) {
  CochainComplex src = complex_from_json(field(j, "source"));
  CochainComplex tgt = complex_from_json(field(j, "target"));
  const Json& cj = field(j, "components");
  if (!cj.is_array() || cj.size() != src.dims().size()) throw ParseError("expected one component per degree");
  if (tgt.dims().size() != src.dims().size()) throw ParseError("source and target have different top degrees");
  std::vector<Matrix> comps;
  for (std::size_t p = 0; p < cj.size(); ++p) comps.push_back(matrix_from_json(cj[p], tgt.dim(p), src.dim(p)));
  return ChainMap(std::move(src), std::move(tgt), std::move(comps));
}

Json diagram_to_json(const ProjectionDiagram& d) {
  return Json{{"p0", matrix_to_json(d.p0)}, {"p0_prime", matrix_to_json(d.p0_prime)},
              {"p1", matrix_to_json(d.p1)}, {"p1_prime", matrix_to_json(d.p1_prime)},
              {"p2", matrix_to_json(d.p2)}, {"p2_prime", matrix_to_json(d.p2_prime)},
              {"incl", matrix_to_json(d.incl)}, {"proj", matrix_to_json(d.proj)}};
}

ProjectionDiagram diagram_from_json(const Json& j) {
  ProjectionDiagram d;
  d.p0 = matrix_from_json(field(j, "p0"));
  d.p0_prime = matrix_from_json(field(j, "p0_prime"));
  d.p1 = matrix_from_json(field(j, "p1"));
  d.p1_prime = matrix_from_json(field(j, "p1_prime"));
  d.p2 = matrix_from_json(field(j, "p2"));
  d.p2_prime = matrix_from_json(field(j, "p2_prime"));
  d.incl = matrix_from_json(field(j, "incl"), d.p1.rows(), d.p0.rows());
  d.proj = matrix_from_json(field(j, "proj"), d.p2.rows(), d.p1.rows());
  return d;
}

Json witness_to_json(const WitnessReport& r) {
  auto pairs = [](const std::vector<CommutatorPair>& ps) {
    Json a = Json::array();
    for (const auto& [x, y] : ps) a.push_back({{"a", matrix_to_json(x)}, {"b", matrix_to_json(y)}});
    return a;
  };
  return Json{{"trace", scalar_to_json(r.trace)},
              {"difference", matrix_to_json(r.difference)},
              {"witness", pairs(r.witness)},
              {"witness_verified", r.witness_verified},
              {"explicit_form", pairs(r.explicit_form)},
              {"explicit_verified", r.explicit_verified},
              {"ok", r.ok()}};
}

}  // namespace torlog
