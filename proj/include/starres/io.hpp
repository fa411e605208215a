#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "starres/gradedring.hpp"
#include "starres/hj.hpp"
#include "starres/intersection.hpp"
#include "starres/lgroup.hpp"
#include "starres/reconalg.hpp"
#include "starres/resolution.hpp"

namespace starres {

using Json = nlohmann::ordered_json;

// Integers stay JSON numbers, other rationals become "n/d" strings.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Parameters& params);
Parameters parameters_from_json(const Json& j);

Json to_json(const LElement& x);
LElement lelement_from_json(const Parameters& params, const Json& j);

Json to_json(const HJExpansion& e, const ISeries& s);

Json to_json(const DualGraph& g);
DualGraph dual_graph_from_json(const Json& j);

Json to_json(const std::vector<SpecialAssignment>& specials);
Json to_json(const Cycle& z);
Json to_json(const QuiverData& q);
Json to_json(const CanonicalAlgebraDesc& d);
Json to_json(const WahlPresentation& w);
Json to_json(const WahlReport& r);
Json to_json(const WahlQuiver& q);

// Graphviz output. Tooltips carry module labels when provided.
std::string graph_to_dot(const DualGraph& g, const std::vector<SpecialAssignment>& specials = {});
std::string quiver_to_dot(const QuiverData& q);

}  // namespace starres
