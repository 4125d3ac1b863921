#include <algorithm>
#include <set>

#include "iasgl/graph.hpp"

namespace iasgl {

namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

std::vector<std::size_t> centres(const Adjacency& adj) {
  const std::size_t n = adj.size();
  if (n <= 2) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> layer;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = adj[v].size();
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (std::size_t leaf : layer)
      for (std::size_t w : adj[leaf])
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string encode(const Adjacency& adj, std::size_t v, std::size_t parent) {
  std::vector<std::string> children;
  for (std::size_t w : adj[v])
    if (w != parent) children.push_back(encode(adj, w, v));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ')';
  return out;
}

std::string canonical(const Adjacency& adj) {
  std::string best;
  for (std::size_t c : centres(adj)) {
    std::string e = encode(adj, c, adj.size());
    if (best.empty() || e < best) best = std::move(e);
  }
  return best;
}

// Vertices numbered in preorder of the encoding.
Adjacency decode(const std::string& code) {
  Adjacency adj;
  std::vector<std::size_t> stack;
  for (char ch : code) {
    if (ch == '(') {
      const std::size_t v = adj.size();
      adj.emplace_back();
      if (!stack.empty()) {
        adj[stack.back()].push_back(v);
        adj[v].push_back(stack.back());
      }
      stack.push_back(v);
    } else {
      stack.pop_back();
    }
  }
  return adj;
}

Graph to_graph(const Adjacency& adj) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < adj.size(); ++u)
    for (std::size_t w : adj[u])
      if (u < w) edges.emplace_back(u, w);
  return Graph::from_indices(adj.size(), edges);
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
  if (!is_tree(tree)) throw Error("not a tree");
  Adjacency adj(tree.vertex_count());
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    auto nbrs = tree.neighbors(v);
    adj[v].assign(nbrs.begin(), nbrs.end());
  }
  return canonical(adj);
}

std::vector<Graph> enumerate_free_trees(std::size_t m, std::size_t cap) {
  if (m < 2) throw Error("tree order must be at least 2");
  if (m > cap) throw Error("tree order exceeds cap of " + std::to_string(cap));

  std::set<std::string> level{"()"};
  for (std::size_t order = 1; order < m; ++order) {
    std::set<std::string> next;
    for (const auto& code : level) {
      Adjacency base = decode(code);
      for (std::size_t v = 0; v < base.size(); ++v) {
        Adjacency grown = base;
        grown.emplace_back();
        grown[v].push_back(order);
        grown[order].push_back(v);
        next.insert(canonical(grown));
      }
    }
    level = std::move(next);
  }

  std::vector<Graph> out;
  out.reserve(level.size());
  for (const auto& code : level) out.push_back(to_graph(decode(code)));
  return out;
}

}  // namespace iasgl
