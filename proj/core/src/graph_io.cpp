#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spinal/errors.hpp"
#include "spinal/plumbing.hpp"

namespace spinal {
namespace {

using nlohmann::ordered_json;

void reject_unknown_keys(const ordered_json& obj, std::initializer_list<std::string_view> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw InputError("graph file: unknown key '" + key + "' in " + where);
  }
}

const ordered_json& require_key(const ordered_json& obj, const char* key,
                                const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw InputError(std::string("graph file: missing key '") + key + "' in " + where);
  return *it;
}

IntMatrix matrix_from_json(const ordered_json& j, const std::string& where) {
  if (!j.is_array()) throw InputError("graph file: " + where + " must be a list of rows");
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError("graph file: " + where + " rows must be lists");
    auto& out = rows.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw InputError("graph file: " + where + " entries must be integers");
      out.emplace_back(v.get<long>());
    }
  }
  return IntMatrix::from_rows(rows);
}

ordered_json matrix_to_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).fits_slong_p())
        throw InputError("graph file: h1_action entry exceeds the 64-bit file range");
      row.push_back(m(r, c).get_si());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

PlumbingGraph parse_graph(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("graph file: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("graph file: top level must be an object");
  reject_unknown_keys(doc, {"dimension", "vertices", "edges", "h1_action"}, "graph");

  PlumbingGraph g;
  const auto& dim = require_key(doc, "dimension", "graph");
  if (!dim.is_number_integer()) throw InputError("graph file: dimension must be an integer");
  g.dimension = dim.get<int>();

  const auto& verts = require_key(doc, "vertices", "graph");
  if (!verts.is_array()) throw InputError("graph file: vertices must be a list");
  for (const auto& v : verts) {
    if (!v.is_string()) throw InputError("graph file: vertex labels must be strings");
    g.vertices.push_back(v.get<std::string>());
  }

  if (auto it = doc.find("edges"); it != doc.end()) {
    if (!it->is_array()) throw InputError("graph file: edges must be a list");
    for (const auto& e : *it) {
      if (!e.is_object()) throw InputError("graph file: each edge must be an object");
      reject_unknown_keys(e, {"between", "sign"}, "edge");
      const auto& between = require_key(e, "between", "edge");
      if (!between.is_array() || between.size() != 2 || !between[0].is_string() ||
          !between[1].is_string())
        throw InputError("graph file: 'between' must list exactly two vertex labels");
      PlumbingEdge edge;
      for (int side = 0; side < 2; ++side) {
        const auto label = between[side].get<std::string>();
        auto idx = g.index_of(label);
        if (!idx) throw InputError("graph file: edge references unknown vertex '" + label + "'");
        (side == 0 ? edge.a : edge.b) = *idx;
      }
      if (auto s = e.find("sign"); s != e.end()) {
        if (!s->is_number_integer() || (s->get<long>() != 1 && s->get<long>() != -1))
          throw InputError("graph file: sign must be 1 or -1");
        edge.sign = s->get<int>();
      }
      g.edges.push_back(edge);
    }
  }

  if (auto it = doc.find("h1_action"); it != doc.end()) {
    if (!it->is_object()) throw InputError("graph file: h1_action must be an object");
    for (const auto& [label, m] : it->items())
      g.h1_action.emplace(label, matrix_from_json(m, "h1_action['" + label + "']"));
  }
  return g;
}

PlumbingGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string emit_graph(const PlumbingGraph& graph) {
  ordered_json doc;
  doc["dimension"] = graph.dimension;
  doc["vertices"] = graph.vertices;
  ordered_json edges = ordered_json::array();
  for (const auto& e : graph.edges) {
    ordered_json edge;
    edge["between"] = {graph.vertices.at(e.a), graph.vertices.at(e.b)};
    edge["sign"] = e.sign;
    edges.push_back(std::move(edge));
  }
  doc["edges"] = std::move(edges);
  if (!graph.h1_action.empty()) {
    ordered_json action = ordered_json::object();
    for (const auto& [label, m] : graph.h1_action) action[label] = matrix_to_json(m);
    doc["h1_action"] = std::move(action);
  }
  return doc.dump();
}

}  // namespace spinal
