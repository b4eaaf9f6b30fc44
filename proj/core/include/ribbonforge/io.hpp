#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "ribbonforge/laurent.hpp"
#include "ribbonforge/links.hpp"
#include "ribbonforge/medial.hpp"
#include "ribbonforge/ribbon_graph.hpp"

namespace ribbonforge::io {

using json = nlohmann::json;

/// Ribbon-graph interchange document. Vertices and edges are written
/// sorted by id; half-edge ids are written as "<edge>.0" / "<edge>.1".
json graph_to_json(const RibbonGraph& g, int free_loops = 0);
/// Parses the interchange document; throws std::invalid_argument with a
/// diagnostic naming the first violated invariant.
RibbonGraph graph_from_json(const json& doc, int* free_loops_out = nullptr);

json universe_to_json(const LinkUniverse& u);
LinkUniverse universe_from_json(const json& doc);

json signed_graph_to_json(const SignedRibbonGraph& sg);
SignedRibbonGraph signed_graph_from_json(const json& doc);

json poly_to_json(const LaurentPoly& p);

}  // namespace ribbonforge::io
