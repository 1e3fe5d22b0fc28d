#pragma once

#include "lojex/bounds.hpp"

#include <json.hpp>

#include <string>

namespace lojex {

nlohmann::json to_json(const Rational& q);  // "p/q" string
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const FanVertex& v);
nlohmann::json to_json(const NewtonFacet& facet, const NewtonPolyhedron& poly);
nlohmann::json to_json(const InvariantSheet& sheet);
nlohmann::json to_json(const ConvenientProfile& prof);
nlohmann::json to_json(const AxisMonomialTable& table);
nlohmann::json to_json(const MonomialCurve& curve);
nlohmann::json bound_report_json(const BoundReport& report);

std::string bound_report_text(const BoundReport& report);
std::string verdict_text(const std::string& name, const Verdict& v);

}  // namespace lojex
