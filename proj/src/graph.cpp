#include "iasgl/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace iasgl {

Graph::Graph(std::vector<VertexId> ids, std::vector<Edge> edges)
    : ids_(std::move(ids)), edges_(std::move(edges)), adjacency_(ids_.size()) {
  std::sort(edges_.begin(), edges_.end());
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::create(std::vector<VertexId> vertices,
                    const std::vector<std::pair<VertexId, VertexId>>& edges) {
  if (vertices.empty()) throw Error("graph has no vertices");
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (!index.emplace(vertices[i], i).second) throw Error("duplicate vertex id: " + vertices[i]);

  std::vector<Edge> indexed;
  std::set<Edge> seen;
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw Error("edge endpoint not a vertex: " + a);
    if (ib == index.end()) throw Error("edge endpoint not a vertex: " + b);
    if (ia->second == ib->second) throw Error("self-loop at " + a);
    Edge e = std::minmax(ia->second, ib->second);
    if (!seen.insert(e).second) throw Error("parallel edge " + a + "-" + b);
    indexed.push_back(e);
  }
  Graph g(std::move(vertices), std::move(indexed));
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) throw Error("isolated vertex: " + g.id(v));
  return g;
}

Graph Graph::from_indices(std::size_t vertex_count, const std::vector<Edge>& edges) {
  std::vector<VertexId> ids;
  for (std::size_t i = 0; i < vertex_count; ++i) ids.push_back("v" + std::to_string(i));
  std::vector<std::pair<VertexId, VertexId>> named;
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw Error("edge index out of range");
    named.emplace_back(ids[u], ids[v]);
  }
  return create(std::move(ids), named);
}

std::optional<std::size_t> Graph::index_of(const VertexId& id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph generate(GraphKind kind, std::size_t size) {
  std::vector<Edge> edges;
  std::size_t vertices = 0;
  switch (kind) {
    case GraphKind::Star:
      if (size < 1) throw Error("star needs at least 1 leaf");
      vertices = size + 1;
      for (std::size_t i = 1; i <= size; ++i) edges.emplace_back(0, i);
      break;
    case GraphKind::Path:
      if (size < 2) throw Error("path needs at least 2 vertices");
      vertices = size;
      for (std::size_t i = 0; i + 1 < size; ++i) edges.emplace_back(i, i + 1);
      break;
    case GraphKind::Cycle:
      if (size < 3) throw Error("cycle needs at least 3 vertices");
      vertices = size;
      for (std::size_t i = 0; i < size; ++i) edges.emplace_back(std::min(i, (i + 1) % size),
                                                               std::max(i, (i + 1) % size));
      break;
    case GraphKind::Complete:
      if (size < 2) throw Error("complete graph needs at least 2 vertices");
      vertices = size;
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j) edges.emplace_back(i, j);
      break;
  }
  return Graph::from_indices(vertices, edges);
}

std::vector<VertexId> pendant_vertices(const Graph& g) {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) out.push_back(g.id(v));
  return out;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> colour(g.vertex_count(), -1);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t w : g.neighbors(u)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          q.push(w);
        } else if (colour[w] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_tree(const Graph& g) {
  if (g.edge_count() + 1 != g.vertex_count()) return false;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.vertex_count();
}

bool is_star(const Graph& g) {
  if (!is_tree(g)) return false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) + 1 == g.vertex_count()) return true;
  return false;
}

}  // namespace iasgl
