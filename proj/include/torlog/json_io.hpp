#ifndef TORLOG_JSON_IO_HPP
#define TORLOG_JSON_IO_HPP

#include <json.hpp>
#include <optional>

#include "torlog/chain.hpp"
#include "torlog/fredholm.hpp"
#include "torlog/log_value.hpp"

namespace torlog {

using Json = nlohmann::ordered_json;

/// Rationals are written as strings "p" or "p/q"; integers are accepted on input.
Json scalar_to_json(const Scalar& q);
Scalar scalar_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
/// Shape inferred from the nested arrays; [] is 0x0.
Matrix matrix_from_json(const Json& j);
/// Checks the shape; [] is accepted for any shape with a zero side.
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

/// [{"w": "1", "base": "5/4"}]; the zero value is [].
Json log_value_to_json(const LogValue& v);
LogValue log_value_from_json(const Json& j);
/// 12 significant digits.
std::string log_value_approx(const LogValue& v);

/// {"dims": [...], "differentials": [...], "grams": [...]} with grams optional.
Json complex_to_json(const CochainComplex& c, const std::optional<InnerProducts>& g = std::nullopt);
CochainComplex complex_from_json(const Json& j);
/// Standard forms when "grams" is absent.
InnerProducts grams_from_json(const Json& j, const CochainComplex& c);

/// {"source": complex, "target": complex, "components": [...]}.
Json chain_map_to_json(const ChainMap& f);
ChainMap chain_map_from_json(const Json& j);

/// {"p0": ..., "p0_prime": ..., ..., "incl": ..., "proj": ...}.
Json diagram_to_json(const ProjectionDiagram& d);
ProjectionDiagram diagram_from_json(const Json& j);

Json witness_to_json(const WitnessReport& r);

}  // namespace torlog

#endif  // TORLOG_JSON_IO_HPP
