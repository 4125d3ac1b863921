#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "iasgl/ground_set.hpp"

namespace iasgl {

/// Whether a decomposition C = A + B may use A == B.
///
/// DistinctLabels is the edge-realisable reading: two adjacent vertices
/// carry different labels, so {1}+{1} never labels an edge.
enum class SummandMode { DistinctLabels, AllowEqual };

const char* to_string(SummandMode mode) noexcept;

/// Partition of the non-empty subsets of X other than {0} by sumset and
/// summand status. Families are in shortlex order.
struct Classification {
  GroundSet ground;
  SummandMode mode;
  std::vector<IntegerSet> non_sumsets;
  std::vector<IntegerSet> non_summands;
  std::vector<IntegerSet> neither;

  /// Indexed by SubsetMask; bit 0 set = non-trivial sumset, bit 1 set =
  /// non-trivial summand. Entry 0 (empty set) is unused.
  std::vector<std::uint8_t> flags;

  bool is_sumset(SubsetMask m) const { return flags[m] & kSumset; }
  bool is_summand(SubsetMask m) const { return flags[m] & kSummand; }

  static constexpr std::uint8_t kSumset = 1;
  static constexpr std::uint8_t kSummand = 2;
};

using Decomposition = std::pair<IntegerSet, IntegerSet>;

/// Every unordered {A, B} of non-empty subsets of X with A, B != {0} and
/// A + B = c (A != B under DistinctLabels), ordered by (mask A, mask B) with
/// mask A <= mask B.
std::vector<Decomposition> nontrivial_sumset_decompositions(const IntegerSet& c, const GroundSet& x,
                                                            SummandMode mode);

bool is_nontrivial_sumset(const IntegerSet& c, const GroundSet& x, SummandMode mode);

/// True iff some non-empty B != {0} (and B != a under DistinctLabels) keeps
/// a + B inside X.
bool is_nontrivial_summand(const IntegerSet& a, const GroundSet& x, SummandMode mode);

/// Cached, OpenMP-parallel classification. Requires 0 in X and n >= 2.
std::shared_ptr<const Classification> classify_ground_set(const GroundSet& x,
                                                          SummandMode mode = SummandMode::DistinctLabels);

namespace kernels {

/// Raw flag tables (see Classification::flags). The serial version is the
/// reference the parallel one is tested and benchmarked against.
std::vector<std::uint8_t> classification_flags_serial(const GroundSet& x, SummandMode mode);
std::vector<std::uint8_t> classification_flags_parallel(const GroundSet& x, SummandMode mode,
                                                        std::size_t threads = 0);

}  // namespace kernels

/// Builds the family view from a flag table; no caching.
Classification make_classification(const GroundSet& x, SummandMode mode,
                                   std::vector<std::uint8_t> flags);

}  // namespace iasgl
