#pragma once

#include <json.hpp>
#include <string>

#include "isg/analyzer.hpp"
#include "isg/fuzzy.hpp"
#include "isg/semigroup.hpp"

namespace isg {

using json = nlohmann::ordered_json;

json domain_to_json(const CoefficientDomain& d);
CoefficientDomain domain_from_json(const json& j);

json carrier_to_json(const Carrier& c);
Carrier carrier_from_json(const json& j);

json spec_to_json(const SemigroupSpec& spec);
SemigroupSpec spec_from_json(const json& j);

std::string op_name(OpKind op);
OpKind op_from_name(const std::string& name);

/// Carrier-shaped element literal: {"upper": ...}, {"rows","cols","entries"},
/// {"coeffs": {...}}, {"n","images"}.
json element_to_json(const SemigroupElement& e);
SemigroupElement element_from_json(const SemigroupSpec& spec, const json& j);

json report_to_json(const FiniteSemigroup& s, const StructureReport& r);

json label_to_json(const IntervalLabel& l);
IntervalLabel label_from_json(const json& j);

/// Membership-map table: a JSON object from element label to "p/q".
SpecialFuzzyMapTable fuzzy_map_table_from_json(const json& j);

/// Evaluates a JSON expression tree over literals and
/// {add, mul, min, max, compose, pow, det} within the spec's carrier.
/// `path` names the failing node on errors.
SemigroupElement eval_expression(const SemigroupSpec& spec, const json& node,
                                 const std::string& path = "$");

}  // namespace isg
