#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "latcheck/operator.hpp"
#include "latcheck/region.hpp"
#include "latcheck/verdict.hpp"

namespace latcheck {

using Json = nlohmann::ordered_json;

/// Malformed input. `where` is "file:line:column" for syntax errors and a
/// JSON path such as "$.columns[1].values" for schema errors.
class InputError : public std::runtime_error {
public:
	InputError(std::string where, const std::string &what);
	const std::string &where() const { return where_; }

private:
	std::string where_;
};

/// Parses JSON text; `source` names the input in diagnostics.
Json parse_json(const std::string &text, const std::string &source);

Json to_json(const Rational &q);
Json to_json(const Interval &i);
Json to_json(const Region &r);
Json to_json(const PLFunction &f);
Json to_json(const GermSum &g);
Json to_json(const Element &x);
Json to_json(const MatrixOperator &t);
Json to_json(const Operator &op);
Json to_json(const Witness &w);
Json to_json(const Verdict &v);

// Readers report schema errors through InputError with the JSON path.
Rational rational_from_json(const Json &j, const std::string &path = "$");
PLFunction pl_from_json(const Json &j, const std::string &path = "$");
GermSum germ_from_json(const Json &j, const std::string &path = "$");
Element element_from_json(const Json &j, const Space &s, const std::string &path = "$");

/// An operator spec: {"kind": "matrix" | "pl_rank" | "germ_sum" | "gallery", ...}.
/// Gallery specs resolve to the constructed instance.
Operator operator_from_json(const Json &j, const std::string &path = "$");

} // namespace latcheck
