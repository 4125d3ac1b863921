#include "iasgl/labeling.hpp"

#include <algorithm>
#include <set>

namespace iasgl {

Labeling::Labeling(GroundSet ground, std::map<VertexId, IntegerSet> assignment)
    : ground_(std::move(ground)), assignment_(std::move(assignment)) {
  for (const auto& [v, label] : assignment_) {
    if (label.empty()) throw Error("empty set-label at " + v);
    if (!label.is_subset_of(ground_.base()))
      throw Error("label " + label.to_string() + " at " + v + " is not a subset of the ground set");
  }
}

const IntegerSet& Labeling::at(const VertexId& v) const {
  auto it = assignment_.find(v);
  if (it == assignment_.end()) throw Error("unassigned vertex: " + v);
  return it->second;
}

Labeling Labeling::scaled(Element factor) const {
  if (factor == 0) throw Error("scale factor must be positive");
  std::map<VertexId, IntegerSet> out;
  for (const auto& [v, label] : assignment_) out.emplace(v, label.scaled(factor));
  return Labeling(GroundSet(ground_.base().scaled(factor)), std::move(out));
}

IntegerSet induced_edge_label(const Labeling& f, const VertexId& u, const VertexId& v) {
  return sumset(f.at(u), f.at(v));
}

const char* to_string(Rung rung) noexcept {
  switch (rung) {
    case Rung::None: return "none";
    case Rung::IASL: return "IASL";
    case Rung::IASI: return "IASI";
    case Rung::IASGL: return "IASGL";
  }
  return "none";
}

namespace {

void require_coverage(const Graph& g, const Labeling& f) {
  if (f.assignment().size() != g.vertex_count())
    throw Error("labeling covers " + std::to_string(f.assignment().size()) + " vertices, graph has " +
                std::to_string(g.vertex_count()));
  for (const auto& id : g.vertex_ids())
    if (!f.assignment().contains(id)) throw Error("unassigned vertex: " + id);
}

void add(Verification& r, Violation v) {
  r.passed = false;
  r.violations.push_back(std::move(v));
}

}  // namespace

Verification verify_iasl(const Graph& g, const Labeling& f) {
  require_coverage(g, f);
  Verification r;

  std::map<IntegerSet, std::vector<VertexId>> holders;
  for (const auto& id : g.vertex_ids()) holders[f.at(id)].push_back(id);
  for (const auto& [label, ids] : holders)
    if (ids.size() > 1)
      add(r, {"injective", "label " + label.to_string() + " used by " + std::to_string(ids.size()) + " vertices",
              ids, {label}});

  for (auto [u, v] : g.edges()) {
    const auto& a = g.id(u);
    const auto& b = g.id(v);
    IntegerSet s = induced_edge_label(f, a, b);
    if (!s.is_subset_of(f.ground().base()))
      add(r, {"edge-in-ground-set", "edge " + a + "-" + b + " has label " + s.to_string() + " outside X",
              {a, b}, {f.at(a), f.at(b), s}});
  }
  return r;
}

Verification verify_iasi(const Graph& g, const Labeling& f) {
  Verification r = verify_iasl(g, f);
  std::map<IntegerSet, std::vector<VertexId>> by_label;
  for (auto [u, v] : g.edges()) {
    auto& ends = by_label[induced_edge_label(f, g.id(u), g.id(v))];
    ends.push_back(g.id(u));
    ends.push_back(g.id(v));
  }
  for (const auto& [label, ends] : by_label)
    if (ends.size() > 2)
      add(r, {"edge-injective", "edge label " + label.to_string() + " used by " +
                                    std::to_string(ends.size() / 2) + " edges",
              ends, {label}});
  return r;
}

Verification verify_iasgl(const Graph& g, const Labeling& f) {
  Verification r = verify_iasi(g, f);
  const GroundSet& x = f.ground();

  std::set<IntegerSet> realised;
  for (auto [u, v] : g.edges()) realised.insert(induced_edge_label(f, g.id(u), g.id(v)));

  const IntegerSet zero{0};
  if (realised.contains(zero)) add(r, {"zero-edge-label", "an edge is labelled {0}", {}, {zero}});

  if (x.n() <= kDefaultEnumerationCap) {
    std::vector<IntegerSet> missing;
    for (const auto& target : enumerate_nonempty_subsets(x))
      if (target != zero && !realised.contains(target)) missing.push_back(target);
    if (!missing.empty())
      add(r, {"edge-labels-exhaust-targets",
              std::to_string(missing.size()) + " subsets of X are not edge labels", {}, std::move(missing)});
  }
  const std::size_t want = graceful_edge_count(x.n());
  if (g.edge_count() != want)
    add(r, {"edge-count", "graph has " + std::to_string(g.edge_count()) + " edges, need " +
                              std::to_string(want),
            {}, {}});
  return r;
}

Rung highest_rung(const Graph& g, const Labeling& f) {
  if (!verify_iasl(g, f).passed) return Rung::None;
  if (!verify_iasi(g, f).passed) return Rung::IASL;
  if (!verify_iasgl(g, f).passed) return Rung::IASI;
  return Rung::IASGL;
}

std::size_t graceful_edge_count(std::size_t n) noexcept {
  if (n >= 8 * sizeof(std::size_t) - 1) return 0;
  return (std::size_t{1} << n) - 2;
}

}  // namespace iasgl
