#pragma once

#include <string>
#include <vector>

#include "iasgl/io.hpp"
#include "iasgl/realisation.hpp"
#include "iasgl/search.hpp"

namespace iasgl {

enum class CheckStatus { Confirmed, Refuted, UnknownBudget };
const char* to_string(CheckStatus status) noexcept;

struct CheckResult {
  std::string id;
  /// The claim being checked, in words.
  std::string anchor;
  CheckStatus status = CheckStatus::Confirmed;
  std::string evidence;
  /// Set on Refuted entries.
  Json counterexample;
};

/// Bounds for run_all. Nonexistence claims are confirmed within these
/// bounds only.
struct HarnessConfig {
  std::size_t n_min = 2;
  std::size_t n_max = 4;
  Element max_element = 8;
  std::vector<std::size_t> tree_orders{3, 7};
  /// Node budget for each search over trees of order >= 15.
  std::uint64_t large_tree_node_budget = 200'000;
  std::size_t path_cycle_min = 3;
  std::size_t path_cycle_max = 8;
  std::size_t complete_min = 2;
  std::size_t complete_max = 8;
  std::size_t diophantine_n_max = 30;
  /// Ground sets for the classification-only checks.
  std::size_t classify_n_max = 5;
  Element classify_max_element = 10;
  SearchConfig search;
};

struct Witness {
  std::string source;
  Graph graph;
  Labeling labeling;
};
using WitnessPool = std::vector<Witness>;

/// An odd k >= 0 and sign with 4k^2 + sign*k + 1 = 2^n.
struct DiophantineSolution {
  std::size_t n;
  std::uint64_t k;
  int sign;
};
/// Every solution with 0 <= n <= n_max (n_max <= 64), found through the
/// discriminant 2^(n+4) - 15.
std::vector<DiophantineSolution> diophantine_solutions(std::size_t n_max);

/// Whether X has any graceful graph-realisation with an odd cycle, by
/// enumerating every choice of realising pair per target. Throws Error when
/// |X| > 3.
std::optional<Witness> exhaustive_nonbipartite_realisation(const GroundSet& x);

std::vector<CheckResult> check_star_theorem(const HarnessConfig& cfg, WitnessPool& pool);
std::vector<CheckResult> check_tree_theorem(const HarnessConfig& cfg, WitnessPool& pool);
std::vector<CheckResult> check_path_cycle(const HarnessConfig& cfg, WitnessPool& pool);
std::vector<CheckResult> check_complete_graphs(const HarnessConfig& cfg);
std::vector<CheckResult> check_realisations(const HarnessConfig& cfg, WitnessPool& pool);
std::vector<CheckResult> check_neither_bound(const HarnessConfig& cfg);
/// Edge count, pendant, {0}-vertex, max-element and gate checks over
/// every pooled witness.
std::vector<CheckResult> check_witnesses(const WitnessPool& pool, SummandMode mode);

struct TheoremReport {
  std::vector<CheckResult> checks;
  Json bounds;
  std::size_t confirmed = 0;
  std::size_t refuted = 0;
  std::size_t unknown = 0;
  std::string generated_at;

  /// Deterministic for a fixed config apart from "generated_at".
  Json to_json() const;
};

TheoremReport run_all(const HarnessConfig& cfg = {});

}  // namespace iasgl
