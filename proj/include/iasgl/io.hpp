#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "iasgl/labeling.hpp"
#include "iasgl/search.hpp"

namespace iasgl {

using Json = nlohmann::ordered_json;

/// Graph plus optional ground set and labels, as exchanged on disk.
///
/// Schema:
///   {"ground_set": [0,1,2],
///    "vertices": [{"id": "v0", "label": [0]}, ...],
///    "edges": [["v0","v1"], ...],
///    "edge_labels": [{"edge": ["v0","v1"], "label": [1]}, ...]}
/// Vertices may also be plain id strings. edge_labels is derived and only
/// written, never trusted on input.
struct Document {
  std::optional<IntegerSet> ground_set;
  std::vector<VertexId> vertices;
  std::map<VertexId, IntegerSet> labels;
  std::vector<std::pair<VertexId, VertexId>> edges;

  Graph graph() const;
  /// Throws Error when the ground set or some vertex label is missing.
  Labeling labeling() const;

  friend bool operator==(const Document&, const Document&) = default;
};

Document make_document(const Graph& g, const std::optional<Labeling>& f = std::nullopt);

Json to_json(const IntegerSet& s);
IntegerSet integer_set_from_json(const Json& j);
Json to_json(const Document& d);
/// Throws Error on any schema violation.
Document document_from_json(const Json& j);
Document read_document(const std::string& path);
void write_json(const std::string& path, const Json& j);

Json to_json(const Violation& v);
Json to_json(const std::vector<Violation>& vs);
Json to_json(const SearchOutcome& outcome);
Json to_json(const Classification& c);

/// `graph G { ... }` with label attributes on vertices and induced labels on
/// edges when a labeling is supplied. Output order follows the graph.
std::string to_dot(const Graph& g, const std::optional<Labeling>& f = std::nullopt);

}  // namespace iasgl
