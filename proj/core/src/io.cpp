#include "ribbonforge/io.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <stdexcept>

namespace ribbonforge::io {

namespace {

std::string half_id(const RibbonGraph& g, int dart) {
  return g.edge(RibbonGraph::edge_of_dart(dart)).id + "." + std::to_string(dart & 1);
}

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

json graph_to_json(const RibbonGraph& g, int free_loops) {
  json doc;
  std::vector<int> vorder(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) vorder[i] = i;
  std::sort(vorder.begin(), vorder.end(),
            [&](int a, int b) { return g.vertex_id(a) < g.vertex_id(b); });
  doc["vertices"] = json::array();
  for (int v : vorder) {
    json rot = json::array();
    for (int d : g.rotation(v)) rot.push_back(half_id(g, d));
    doc["vertices"].push_back({{"id", g.vertex_id(v)}, {"rotation", rot}});
  }
  std::vector<int> eorder(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) eorder[i] = i;
  std::sort(eorder.begin(), eorder.end(), [&](int a, int b) { return g.edge(a).id < g.edge(b).id; });
  doc["edges"] = json::array();
  for (int e : eorder) {
    doc["edges"].push_back({{"id", g.edge(e).id},
                            {"halves", {half_id(g, 2 * e), half_id(g, 2 * e + 1)}},
                            {"sign", g.edge(e).sign}});
  }
  if (free_loops > 0) doc["free_loops"] = free_loops;
  return doc;
}

RibbonGraph graph_from_json(const json& doc, int* free_loops_out) {
  if (!doc.is_object()) bad("document must be a JSON object");
  if (!doc.contains("vertices") || !doc.contains("edges")) bad("document needs 'vertices' and 'edges'");

  std::map<std::string, int> dart_of_half;
  std::vector<RibbonEdge> edges;
  std::set<std::string> edge_ids;
  for (const auto& ej : doc.at("edges")) {
    std::string id = ej.at("id").get<std::string>();
    if (!edge_ids.insert(id).second) bad("duplicate edge id " + id);
    int sign = ej.at("sign").get<int>();
    if (sign != 1 && sign != -1) bad("edge " + id + " has sign outside {1,-1}");
    const auto& halves = ej.at("halves");
    if (!halves.is_array() || halves.size() != 2) bad("edge " + id + " needs exactly two halves");
    for (int h = 0; h < 2; ++h) {
      std::string hid = halves[h].get<std::string>();
      if (dart_of_half.count(hid)) bad("half-edge " + hid + " belongs to two edges");
      dart_of_half[hid] = 2 * static_cast<int>(edges.size()) + h;
    }
    edges.push_back({id, sign});
  }

  std::vector<std::string> vids;
  std::vector<std::vector<int>> rotations;
  std::set<std::string> vertex_ids;
  std::set<std::string> seen_halves;
  for (const auto& vj : doc.at("vertices")) {
    std::string id = vj.at("id").get<std::string>();
    if (!vertex_ids.insert(id).second) bad("duplicate vertex id " + id);
    std::vector<int> rot;
    for (const auto& hj : vj.at("rotation")) {
      std::string hid = hj.get<std::string>();
      auto it = dart_of_half.find(hid);
      if (it == dart_of_half.end()) bad("rotation of " + id + " references unknown half-edge " + hid);
      if (!seen_halves.insert(hid).second) bad("duplicated half-edge " + hid + " (appears in two rotation slots)");
      rot.push_back(it->second);
    }
    vids.push_back(std::move(id));
    rotations.push_back(std::move(rot));
  }
  for (const auto& [hid, dart] : dart_of_half) {
    if (!seen_halves.count(hid)) bad("orphan half-edge " + hid + " (in an edge, missing from all rotations)");
  }
  int free_loops = 0;
  if (doc.contains("free_loops")) {
    free_loops = doc.at("free_loops").get<int>();
    if (free_loops < 0) bad("free_loops must be nonnegative");
  }
  if (free_loops_out) *free_loops_out = free_loops;
  return RibbonGraph(std::move(vids), std::move(rotations), std::move(edges));
}

json universe_to_json(const LinkUniverse& u) {
  json doc = graph_to_json(u.graph(), u.free_loops());
  json crossings = json::array();
  const RibbonGraph& g = u.graph();
  std::vector<int> vorder(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) vorder[i] = i;
  std::sort(vorder.begin(), vorder.end(),
            [&](int a, int b) { return g.vertex_id(a) < g.vertex_id(b); });
  auto pairing_json = [&](const Pairing& p) {
    Pairing n = p.normalized();
    return json::array({{half_id(g, n.a[0]), half_id(g, n.a[1])}, {half_id(g, n.b[0]), half_id(g, n.b[1])}});
  };
  for (int v : vorder) {
    crossings.push_back({{"vertex", g.vertex_id(v)},
                         {"A", pairing_json(u.a_split(v))},
                         {"B", pairing_json(u.b_split(v))}});
  }
  doc["crossings"] = crossings;
  return doc;
}

LinkUniverse universe_from_json(const json& doc) {
  int free_loops = 0;
  RibbonGraph g = graph_from_json(doc, &free_loops);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 4) bad("universe vertex " + g.vertex_id(v) + " is not 4-valent");
  }
  std::map<std::string, int> dart_of_half;
  for (int e = 0; e < g.edge_count(); ++e) {
    dart_of_half[g.edge(e).id + ".0"] = 2 * e;
    dart_of_half[g.edge(e).id + ".1"] = 2 * e + 1;
  }
  // Crossings may use the original half ids; rebuild the lookup from the doc.
  dart_of_half.clear();
  {
    int e = 0;
    for (const auto& ej : doc.at("edges")) {
      const auto& halves = ej.at("halves");
      dart_of_half[halves[0].get<std::string>()] = 2 * e;
      dart_of_half[halves[1].get<std::string>()] = 2 * e + 1;
      ++e;
    }
  }
  if (!doc.contains("crossings")) bad("universe document needs 'crossings'");
  std::vector<Pairing> a(g.vertex_count()), b(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  auto parse_pairing = [&](const json& pj) {
    if (!pj.is_array() || pj.size() != 2) bad("a pairing is two pairs of half-edges");
    Pairing p;
    for (int i = 0; i < 2; ++i) {
      const auto& pair = pj[i];
      if (!pair.is_array() || pair.size() != 2) bad("a pairing is two pairs of half-edges");
      auto d1 = dart_of_half.find(pair[0].get<std::string>());
      auto d2 = dart_of_half.find(pair[1].get<std::string>());
      if (d1 == dart_of_half.end() || d2 == dart_of_half.end()) bad("pairing references unknown half-edge");
      (i == 0 ? p.a : p.b) = {d1->second, d2->second};
    }
    return p;
  };
  for (const auto& cj : doc.at("crossings")) {
    int v = g.vertex_index(cj.at("vertex").get<std::string>());
    if (seen[v]) bad("two crossing entries for vertex " + g.vertex_id(v));
    seen[v] = true;
    a[v] = parse_pairing(cj.at("A"));
    b[v] = parse_pairing(cj.at("B"));
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v]) bad("missing crossing entry for vertex " + g.vertex_id(v));
  }
  return LinkUniverse(std::move(g), free_loops, std::move(a), std::move(b));
}

json signed_graph_to_json(const SignedRibbonGraph& sg) {
  json doc = graph_to_json(sg.graph, 0);
  json signs = json::array();
  std::vector<std::string> ids;
  for (const auto& [id, s] : sg.crossing_sign) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  for (const auto& id : ids) signs.push_back({{"id", id}, {"sign", sg.crossing_sign.at(id)}});
  doc["crossing_signs"] = signs;
  return doc;
}

SignedRibbonGraph signed_graph_from_json(const json& doc) {
  SignedRibbonGraph sg;
  sg.graph = graph_from_json(doc);
  if (!doc.contains("crossing_signs")) bad("signed graph document needs 'crossing_signs'");
  for (const auto& sj : doc.at("crossing_signs")) {
    std::string id = sj.at("id").get<std::string>();
    int s = sj.at("sign").get<int>();
    if (s != 1 && s != -1) bad("crossing sign outside {1,-1}");
    sg.graph.edge_index(id);  // existence check
    sg.crossing_sign[id] = s;
  }
  for (int e = 0; e < sg.graph.edge_count(); ++e) {
    if (!sg.crossing_sign.count(sg.graph.edge(e).id)) {
      bad("missing crossing sign for edge " + sg.graph.edge(e).id);
    }
  }
  return sg;
}

json poly_to_json(const LaurentPoly& p) {
  json doc;
  doc["vars"] = p.table().names();
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json exps = json::array();
    for (std::int32_t h : e) {
      if (h % 2 == 0) {
        exps.push_back(std::to_string(h / 2));
      } else {
        exps.push_back(std::to_string(h) + "/2");
      }
    }
    terms.push_back({{"coeff", c.get_str()}, {"exponents", exps}});
  }
  doc["terms"] = terms;
  doc["text"] = p.text();
  return doc;
}

}  // namespace ribbonforge::io
