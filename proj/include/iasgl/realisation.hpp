#pragma once

#include <map>
#include <string>
#include <vector>

#include "iasgl/labeling.hpp"

namespace iasgl {

inline constexpr std::size_t kMaxRealisationGroundSet = 10;

/// Preference among the pairs that can realise one target.
enum class PairOrder {
  /// Pairs of vertices already present, then one new vertex, then two.
  ExistingFirst,
  /// The pair ({0}, t) first, then as ExistingFirst.
  StarFirst,
};

struct AssignOptions {
  PairOrder order = PairOrder::ExistingFirst;
  /// Keep searching until the resulting graph has an odd cycle (or the tree
  /// or budget is exhausted, in which case the first solution is returned).
  bool prefer_odd_cycle = false;
  std::uint64_t node_budget = 1'000'000;
};

struct EdgeAssignment {
  /// Every target, fixed ones included, to the pair of labels realising it.
  std::map<IntegerSet, Decomposition> pairs;
  /// Labels of vertices created beyond the pool, shortlex order.
  std::vector<IntegerSet> added_vertices;
  bool has_odd_cycle = false;
  /// False when the odd-cycle search stopped on its node budget.
  bool search_complete = true;
};

/// Raised when some target cannot be realised; lists the offending targets.
class AssignmentError : public Error {
 public:
  AssignmentError(const std::string& what, std::vector<IntegerSet> unassignable)
      : Error(what), unassignable_(std::move(unassignable)) {}
  const std::vector<IntegerSet>& unassignable() const noexcept { return unassignable_; }

 private:
  std::vector<IntegerSet> unassignable_;
};

/// Exact one-to-one assignment of targets to vertex pairs (A, B), A != B,
/// A + B = target. Endpoints come from `vertex_pool` or are new vertices
/// with labels not yet in use. Targets already realised by `fixed_edges`
/// are kept as they are. Backtracks over targets ordered by fewest
/// candidate pairs. Every pool vertex ends with at least one edge.
EdgeAssignment assign_edge_labels(const std::vector<IntegerSet>& targets,
                                  const std::vector<IntegerSet>& vertex_pool,
                                  const std::vector<Decomposition>& fixed_edges, const GroundSet& x,
                                  const AssignOptions& opts = {});

struct TraceEntry {
  IntegerSet target;
  VertexId u;
  VertexId v;
  bool fixed = false;
};

struct RealisationResult {
  Graph graph;
  Labeling labeling;
  bool non_bipartite = false;
  /// One entry per target, shortlex order of targets.
  std::vector<TraceEntry> assignment_trace;
  /// Set under prefer_nonbipartite when no odd cycle was found: true if the
  /// builder's whole assignment space was searched.
  bool nonbipartite_search_complete = true;
  std::string note;
};

/// Graceful graph-realisation of X.
///
/// v0 carries {0} and is joined to every non-sumset label (those edges are
/// forced in any IASGL). Each remaining target then gets exactly one edge
/// via assign_edge_labels, so edge labels never repeat. Without
/// `prefer_nonbipartite` the star edge ({0}, t) is preferred, which yields
/// K_{1, 2^n - 2}; with it, existing vertices are paired first and the
/// search looks for an odd cycle. The result is re-verified before return.
RealisationResult build_realisation(const GroundSet& x, bool prefer_nonbipartite = false,
                                    SummandMode mode = SummandMode::DistinctLabels);

}  // namespace iasgl
