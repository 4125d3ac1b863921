#pragma once

#include <map>
#include <string>
#include <vector>

#include "iasgl/classification.hpp"
#include "iasgl/graph.hpp"

namespace iasgl {

/// Vertex id -> set-label over a ground set. Every label is non-empty and
/// inside the ground set; injectivity is what verify_iasl checks.
class Labeling {
 public:
  /// Throws Error on an empty label or one that leaves the ground set.
  Labeling(GroundSet ground, std::map<VertexId, IntegerSet> assignment);

  const GroundSet& ground() const noexcept { return ground_; }
  const std::map<VertexId, IntegerSet>& assignment() const noexcept { return assignment_; }
  /// Throws Error("unassigned vertex: ...").
  const IntegerSet& at(const VertexId& v) const;

  /// Every label and the ground set multiplied by `factor` > 0.
  Labeling scaled(Element factor) const;

  friend bool operator==(const Labeling& a, const Labeling& b) {
    return a.ground_ == b.ground_ && a.assignment_ == b.assignment_;
  }

 private:
  GroundSet ground_;
  std::map<VertexId, IntegerSet> assignment_;
};

/// f(u) + f(v), not truncated to X.
IntegerSet induced_edge_label(const Labeling& f, const VertexId& u, const VertexId& v);

struct Violation {
  std::string rule;
  std::string detail;
  std::vector<VertexId> vertices;
  std::vector<IntegerSet> sets;
};

struct Verification {
  bool passed = true;
  std::vector<Violation> violations;
};

/// Rungs of the ladder IASL -> IASI -> IASGL. Each verify_* also runs the
/// rungs below it, so a pass implies every lower rung passed.
enum class Rung { None, IASL, IASI, IASGL };
const char* to_string(Rung rung) noexcept;

/// Injective labels and every edge sum inside X. Throws Error when the
/// labeling does not cover exactly the graph's vertices.
Verification verify_iasl(const Graph& g, const Labeling& f);
/// verify_iasl plus pairwise distinct edge labels.
Verification verify_iasi(const Graph& g, const Labeling& f);
/// verify_iasi plus edge labels == P(X) - {empty, {0}}.
Verification verify_iasgl(const Graph& g, const Labeling& f);
Rung highest_rung(const Graph& g, const Labeling& f);

/// Necessary conditions for an IASGL over X, checked without search.
///   R1  |E| = 2^n - 2
///   R2  some vertex has degree >= |non_sumsets|
///   R3  pendant count >= |neither| and >= n - 1
///   R4  some vertex has >= |neither| pendant neighbours
struct GateReport {
  bool passed = true;
  std::vector<Violation> violations;

  bool violates(const std::string& rule) const;
};

/// Throws Error when 0 is not in X.
GateReport structural_gate(const Graph& g, const GroundSet& x,
                           SummandMode mode = SummandMode::DistinctLabels);

/// 2^n - 2 when that fits, else 0.
std::size_t graceful_edge_count(std::size_t n) noexcept;

}  // namespace iasgl
