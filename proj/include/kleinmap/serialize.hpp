#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kleinmap/graph.hpp"

namespace kleinmap {

// Lossless interchange form of a graph, with optional vertex names and an
// optional vertex coloring.
struct GraphDocument {
  Graph graph;
  std::optional<std::vector<std::string>> names;
  std::optional<std::vector<int>> colors;
};

// Deterministic JSON with keys n / edges [/ names] [/ colors].
std::string to_json(const GraphDocument& doc);

// Parses and validates (simple graph, dense indices, aligned name/color
// lists); throws std::invalid_argument on malformed documents.
GraphDocument graph_document_from_json(const std::string& text);

// Undirected dot output: one stanza per vertex, one per edge.
std::string to_dot(const GraphDocument& doc, const std::string& graph_name);

}  // namespace kleinmap
