#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "iasgl/integer_set.hpp"

namespace iasgl {

using VertexId = std::string;
using Edge = std::pair<std::size_t, std::size_t>;

/// Simple finite undirected graph without isolated vertices.
///
/// Vertices are addressed by position; ids are opaque strings kept in
/// declaration order. Edges are stored as (u, v) with u < v, sorted.
class Graph {
 public:
  /// Validates: unique ids, known endpoints, no loops, no parallel edges,
  /// no isolated vertices, at least one vertex. Throws Error otherwise.
  static Graph create(std::vector<VertexId> vertices,
                      const std::vector<std::pair<VertexId, VertexId>>& edges);
  static Graph from_indices(std::size_t vertex_count, const std::vector<Edge>& edges);

  std::size_t vertex_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<VertexId>& vertex_ids() const noexcept { return ids_; }
  const VertexId& id(std::size_t v) const { return ids_.at(v); }
  std::optional<std::size_t> index_of(const VertexId& id) const;

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const std::size_t> neighbors(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
  bool adjacent(std::size_t u, std::size_t v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.ids_ == b.ids_ && a.edges_ == b.edges_;
  }

 private:
  Graph(std::vector<VertexId> ids, std::vector<Edge> edges);

  std::vector<VertexId> ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

enum class GraphKind { Star, Path, Cycle, Complete };

/// star: K_{1,size}; path: P_size (size vertices); cycle: C_size;
/// complete: K_size. Vertex ids are "v0", "v1", ...
Graph generate(GraphKind kind, std::size_t size);

/// Degree-1 vertices in declaration order.
std::vector<VertexId> pendant_vertices(const Graph& g);

bool is_bipartite(const Graph& g);

bool is_tree(const Graph& g);
/// K_{1,m} for some m >= 1.
bool is_star(const Graph& g);

/// One representative per isomorphism class of free trees on m vertices,
/// ordered by canonical encoding. Throws Error when m < 2 or m > cap.
std::vector<Graph> enumerate_free_trees(std::size_t m, std::size_t cap = 10);

/// Isomorphism-invariant encoding of a tree (centre-rooted AHU string).
std::string tree_canonical_form(const Graph& tree);

}  // namespace iasgl
