#pragma once

#include <cstdint>
#include <vector>

#include "iasgl/labeling.hpp"

namespace iasgl {

inline constexpr std::size_t kMaxSearchGroundSet = 6;

enum class SearchStatus { Found, ExhaustedNone, BudgetExceeded, GateRejected };
const char* to_string(SearchStatus status) noexcept;

/// Individually switchable pruning rules. Turning one off never changes
/// Found / ExhaustedNone, only the node count.
struct PruneRules {
  /// P1: {0} only on vertices with degree >= |non_sumsets|, and some vertex
  /// must be able to take it.
  bool zero_label_degree = true;
  /// P2: non-summand labels only on pendants hanging off the {0} vertex.
  bool non_summand_pendant = true;
  /// P3: reject as soon as an edge sum leaves X, equals {0} or repeats.
  bool incremental_edges = true;
  /// P4: every unrealised target still reachable by some open edge.
  bool target_coverage = true;
};

struct SearchConfig {
  SummandMode mode = SummandMode::DistinctLabels;
  std::uint64_t node_budget = 10'000'000;
  std::uint64_t time_budget_ms = 60'000;
  bool find_all = false;
  /// 0 keeps canonical label order; any other value shuffles it
  /// deterministically.
  std::uint64_t seed = 0;
  PruneRules prune;
  /// 0 = worker_count() default.
  std::size_t threads = 0;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned_zero_degree = 0;
  std::uint64_t pruned_non_summand = 0;
  std::uint64_t pruned_edges = 0;
  std::uint64_t pruned_coverage = 0;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

/// Found implies every witness passed verify_iasgl after the search
/// finished. ExhaustedNone implies the whole tree was explored.
/// BudgetExceeded means "unknown", never nonexistence; with find_all the
/// witnesses collected before the budget ran out are kept.
struct SearchOutcome {
  SearchStatus status = SearchStatus::ExhaustedNone;
  std::vector<Labeling> witnesses;
  SearchStats stats;
  GateReport gate;
};

/// Decides whether `g` admits an IASGL over `x`.
///
/// GateRejected is returned only when the edge count rule fails; the other
/// gate rules are reported in `gate` and enforced by the pruning, so a graph
/// that fails them ends ExhaustedNone. Vertices are labelled in descending
/// degree order (ties by declaration order). The root vertex's label
/// choices are independent branches; the parallel runner spreads them over
/// OpenMP threads and merges in branch order, so results do not depend on
/// the worker count (except when the wall-clock budget fires).
///
/// Throws Error when 0 is not in X or |X| > kMaxSearchGroundSet.
SearchOutcome search_iasgl(const Graph& g, const GroundSet& x, const SearchConfig& cfg = {});

namespace kernels {

SearchOutcome search_iasgl_serial(const Graph& g, const GroundSet& x, const SearchConfig& cfg);
SearchOutcome search_iasgl_parallel(const Graph& g, const GroundSet& x, const SearchConfig& cfg,
                                    std::size_t threads);

}  // namespace kernels

struct SweepEntry {
  GroundSet ground;
  SearchOutcome outcome;
};

/// search_iasgl over every canonical X with |X| = n, 0 in X and max element
/// <= max_element, in canonical_ground_sets order. Ground sets run in
/// parallel; each search is serial. Throws Error when the family is empty.
std::vector<SweepEntry> sweep_ground_sets(const Graph& g, std::size_t n, Element max_element,
                                          const SearchConfig& cfg = {});

}  // namespace iasgl
