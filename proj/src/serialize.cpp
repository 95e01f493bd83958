#include "kleinmap/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kleinmap {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const GraphDocument& doc) {
  ordered_json j;
  j["n"] = doc.graph.order();
  j["edges"] = ordered_json::array();
  for (auto [u, v] : doc.graph.edges()) j["edges"].push_back({u, v});
  if (doc.names) j["names"] = *doc.names;
  if (doc.colors) j["colors"] = *doc.colors;
  return j.dump(2) + "\n";
}

GraphDocument graph_document_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("bad graph document: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
      !j["n"].is_number_integer() || !j["edges"].is_array())
    throw std::invalid_argument("bad graph document: expected keys n and edges");

  GraphDocument doc;
  int n = j["n"].get<int>();
  if (n < 0) throw std::invalid_argument("bad graph document: negative order");
  doc.graph = Graph(n);
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw std::invalid_argument("bad graph document: edge must be a pair of integers");
    doc.graph.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  if (j.contains("names")) {
    auto names = j["names"].get<std::vector<std::string>>();
    if (static_cast<int>(names.size()) != n)
      throw std::invalid_argument("bad graph document: names not aligned with vertices");
    doc.names = std::move(names);
  }
  if (j.contains("colors")) {
    auto colors = j["colors"].get<std::vector<int>>();
    if (static_cast<int>(colors.size()) != n)
      throw std::invalid_argument("bad graph document: colors not aligned with vertices");
    doc.colors = std::move(colors);
  }
  return doc;
}

std::string to_dot(const GraphDocument& doc, const std::string& graph_name) {
  std::ostringstream os;
  os << "graph " << graph_name << " {\n";
  for (int v = 0; v < doc.graph.order(); ++v) {
    os << "  " << v;
    bool named = doc.names && v < static_cast<int>(doc.names->size());
    bool colored = doc.colors && v < static_cast<int>(doc.colors->size());
    if (named || colored) {
      os << " [";
      if (named) os << "label=\"" << (*doc.names)[v] << "\"";
      if (named && colored) os << ", ";
      if (colored) os << "color=" << (*doc.colors)[v];
      os << "]";
    }
    os << ";\n";
  }
  for (auto [u, v] : doc.graph.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace kleinmap
