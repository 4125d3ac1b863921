#include "iasgl/classification.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <mutex>

#include "iasgl/parallel.hpp"

namespace iasgl {

const char* to_string(SummandMode mode) noexcept {
  return mode == SummandMode::DistinctLabels ? "distinct-labels" : "allow-equal";
}

namespace {

SubsetMask zero_mask_of(const GroundSet& x) { return x.contains_zero() ? GroundSet::zero_mask() : 0; }

SubsetMask require_subset(const IntegerSet& s, const GroundSet& x) {
  if (s.empty()) throw Error("empty set-label");
  auto m = x.mask_of(s);
  if (!m) throw Error("not a subset of ground set: " + s.to_string());
  return *m;
}

void require_classifiable(const GroundSet& x) {
  if (!x.contains_zero()) throw Error("graceful ground set must contain 0");
  if (x.n() < 2) throw Error("ground set needs at least 2 elements");
  if (x.n() > kDefaultEnumerationCap) throw Error("ground set too large");
}

// Marks every pair (a, b), a fixed, b > a (or b >= a), whose sum stays in X.
inline void mark_row(const GroundSet& x, SubsetMask a, SubsetMask zero, bool allow_equal,
                     std::vector<std::uint8_t>& flags) {
  const SubsetMask full = x.full_mask();
  for (SubsetMask b = allow_equal ? a : a + 1; b <= full && b != 0; ++b) {
    if (b == zero) continue;
    if (auto s = x.sum_mask(a, b)) {
      flags[*s] |= Classification::kSumset;
      flags[a] |= Classification::kSummand;
      flags[b] |= Classification::kSummand;
    }
  }
}

}  // namespace

std::vector<Decomposition> nontrivial_sumset_decompositions(const IntegerSet& c, const GroundSet& x,
                                                            SummandMode mode) {
  const SubsetMask target = require_subset(c, x);
  const SubsetMask zero = zero_mask_of(x);
  const bool allow_equal = mode == SummandMode::AllowEqual;
  std::vector<Decomposition> out;
  for (SubsetMask a = 1; a <= x.full_mask() && a != 0; ++a) {
    if (a == zero) continue;
    for (SubsetMask b = allow_equal ? a : a + 1; b <= x.full_mask() && b != 0; ++b) {
      if (b == zero) continue;
      auto s = x.sum_mask(a, b);
      if (s && *s == target) out.emplace_back(x.subset(a), x.subset(b));
    }
  }
  return out;
}

bool is_nontrivial_sumset(const IntegerSet& c, const GroundSet& x, SummandMode mode) {
  return !nontrivial_sumset_decompositions(c, x, mode).empty();
}

bool is_nontrivial_summand(const IntegerSet& a, const GroundSet& x, SummandMode mode) {
  const SubsetMask am = require_subset(a, x);
  const SubsetMask zero = zero_mask_of(x);
  for (SubsetMask b = 1; b <= x.full_mask() && b != 0; ++b) {
    if (b == zero || (b == am && mode == SummandMode::DistinctLabels)) continue;
    if (x.sum_mask(am, b)) return true;
  }
  return false;
}

namespace kernels {

std::vector<std::uint8_t> classification_flags_serial(const GroundSet& x, SummandMode mode) {
  require_classifiable(x);
  std::vector<std::uint8_t> flags(std::size_t{x.full_mask()} + 1, 0);
  const SubsetMask zero = zero_mask_of(x);
  const bool allow_equal = mode == SummandMode::AllowEqual;
  for (SubsetMask a = 1; a <= x.full_mask(); ++a) {
    if (a == zero) continue;
    mark_row(x, a, zero, allow_equal, flags);
  }
  return flags;
}

std::vector<std::uint8_t> classification_flags_parallel(const GroundSet& x, SummandMode mode,
                                                        std::size_t threads) {
  require_classifiable(x);
  const std::size_t size = std::size_t{x.full_mask()} + 1;
  std::vector<std::uint8_t> flags(size, 0);
  const SubsetMask zero = zero_mask_of(x);
  const bool allow_equal = mode == SummandMode::AllowEqual;
  const long long full = x.full_mask();

#pragma omp parallel num_threads(static_cast<int>(worker_count(threads)))
  {
    std::vector<std::uint8_t> local(size, 0);
#pragma omp for schedule(dynamic, 16) nowait
    for (long long a = 1; a <= full; ++a) {
      if (static_cast<SubsetMask>(a) == zero) continue;
      mark_row(x, static_cast<SubsetMask>(a), zero, allow_equal, local);
    }
#pragma omp critical(iasgl_classification_merge)
    for (std::size_t i = 0; i < size; ++i) flags[i] |= local[i];
  }
  return flags;
}

}  // namespace kernels

Classification make_classification(const GroundSet& x, SummandMode mode, std::vector<std::uint8_t> flags) {
  Classification c{x, mode, {}, {}, {}, std::move(flags)};
  const SubsetMask zero = zero_mask_of(x);
  for (SubsetMask m = 1; m <= x.full_mask(); ++m) {
    if (m == zero) continue;
    const bool sumset = c.is_sumset(m);
    const bool summand = c.is_summand(m);
    if (!sumset) c.non_sumsets.push_back(x.subset(m));
    if (!summand) c.non_summands.push_back(x.subset(m));
    if (!sumset && !summand) c.neither.push_back(x.subset(m));
  }
  for (auto* family : {&c.non_sumsets, &c.non_summands, &c.neither})
    std::sort(family->begin(), family->end(), shortlex_less);
  return c;
}

std::shared_ptr<const Classification> classify_ground_set(const GroundSet& x, SummandMode mode) {
  using Key = std::pair<IntegerSet, SummandMode>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const Classification>> cache;

  Key key{x.base(), mode};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  // Computed outside the lock; a racing writer produces an identical value.
  auto computed = std::make_shared<const Classification>(
      make_classification(x, mode, kernels::classification_flags_parallel(x, mode)));
  std::lock_guard lock(mutex);
  return cache.emplace(std::move(key), std::move(computed)).first->second;
}

}  // namespace iasgl
