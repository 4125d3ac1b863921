#include <algorithm>

#include "iasgl/labeling.hpp"

namespace iasgl {

bool GateReport::violates(const std::string& rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

GateReport structural_gate(const Graph& g, const GroundSet& x, SummandMode mode) {
  if (!x.contains_zero()) throw Error("graceful ground set must contain 0");
  GateReport report;
  auto fail = [&](std::string rule, std::string detail) {
    report.passed = false;
    report.violations.push_back({std::move(rule), std::move(detail), {}, {}});
  };

  const std::size_t need_edges = graceful_edge_count(x.n());
  if (g.edge_count() != need_edges)
    fail("R1", "|E| = " + std::to_string(g.edge_count()) + " but 2^" + std::to_string(x.n()) +
                   " - 2 = " + std::to_string(need_edges));

  if (x.n() < 2) {
    fail("R2", "ground set {0} leaves no target labels");
    return report;
  }
  auto cls = classify_ground_set(x, mode);

  std::size_t max_degree = 0;
  std::size_t max_pendant_neighbours = 0;
  std::size_t pendants = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    max_degree = std::max(max_degree, g.degree(v));
    if (g.degree(v) == 1) ++pendants;
    std::size_t p = 0;
    for (std::size_t w : g.neighbors(v))
      if (g.degree(w) == 1) ++p;
    max_pendant_neighbours = std::max(max_pendant_neighbours, p);
  }

  const std::size_t non_sumsets = cls->non_sumsets.size();
  const std::size_t neither = cls->neither.size();
  if (max_degree < non_sumsets)
    fail("R2", "max degree " + std::to_string(max_degree) + " < " + std::to_string(non_sumsets) +
                   " non-sumset labels that must sit next to {0}");
  if (pendants < neither || pendants + 1 < x.n())
    fail("R3", std::to_string(pendants) + " pendant vertices, need >= " +
                   std::to_string(std::max(neither, x.n() - 1)));
  if (max_pendant_neighbours < neither)
    fail("R4", "no vertex has " + std::to_string(neither) + " pendant neighbours (best " +
                   std::to_string(max_pendant_neighbours) + ")");
  return report;
}

}  // namespace iasgl
