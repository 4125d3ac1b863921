#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "iasgl/integer_set.hpp"

namespace iasgl {

/// Bit i stands for the i-th smallest element of the ground set.
using SubsetMask = std::uint32_t;

inline constexpr std::size_t kMaxGroundSetSize = 31;
inline constexpr std::size_t kDefaultEnumerationCap = 20;

/// The distinguished set X whose power set supplies every label.
///
/// Subsets of X are mirrored as n-bit masks; `subset` and `mask_of` are the
/// two directions of that mapping. `sum_mask` is the hot path used by the
/// classification kernels, the search and the builder: it adds two subsets
/// and reports the result as a mask, or nullopt when some sum leaves X.
///
/// Copies share an immutable value-to-index table.
class GroundSet {
 public:
  /// Throws Error when `base` is empty or has more than kMaxGroundSetSize
  /// elements.
  explicit GroundSet(IntegerSet base);

  const IntegerSet& base() const noexcept { return base_; }
  std::size_t n() const noexcept { return base_.size(); }
  Element max_element() const noexcept { return base_.elements().back(); }
  bool contains_zero() const noexcept { return base_.elements().front() == 0; }

  SubsetMask full_mask() const noexcept { return static_cast<SubsetMask>((std::uint64_t{1} << n()) - 1); }
  /// Mask of {0}; only meaningful when contains_zero().
  static constexpr SubsetMask zero_mask() noexcept { return 1; }

  IntegerSet subset(SubsetMask mask) const;
  std::optional<SubsetMask> mask_of(const IntegerSet& set) const;
  /// Position of `value` in the sorted base, or -1.
  int index_of(Element value) const noexcept;

  std::optional<SubsetMask> sum_mask(SubsetMask a, SubsetMask b) const noexcept;

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.base_ == b.base_; }

 private:
  IntegerSet base_;
  // Dense value -> index table when the max element is small, else empty and
  // index_of falls back to binary search.
  std::shared_ptr<const std::vector<std::int8_t>> dense_index_;
};

/// All 2^n - 1 non-empty subsets in ascending mask order. Throws
/// Error("ground set too large") when n exceeds `cap`.
std::vector<IntegerSet> enumerate_nonempty_subsets(const GroundSet& x,
                                                   std::size_t cap = kDefaultEnumerationCap);

/// X divided by the gcd of its nonzero elements. Requires 0 in X and n >= 2.
GroundSet canonicalize_ground_set(const GroundSet& x);
bool is_canonical(const GroundSet& x);

/// Every canonical X with |X| = n, 0 in X and max element <= max_element,
/// in lexicographic order of the element sequence.
std::vector<GroundSet> canonical_ground_sets(std::size_t n, Element max_element);

}  // namespace iasgl
