#include "iasgl/ground_set.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace iasgl {

namespace {

constexpr Element kDenseIndexLimit = 1u << 16;

}  // namespace

GroundSet::GroundSet(IntegerSet base) : base_(std::move(base)) {
  if (base_.empty()) throw Error("ground set must be non-empty");
  if (base_.size() > kMaxGroundSetSize) throw Error("ground set too large");
  if (max_element() <= kDenseIndexLimit) {
    auto table = std::make_shared<std::vector<std::int8_t>>(max_element() + 1, std::int8_t{-1});
    for (std::size_t i = 0; i < base_.size(); ++i)
      (*table)[base_.elements()[i]] = static_cast<std::int8_t>(i);
    dense_index_ = std::move(table);
  }
}

IntegerSet GroundSet::subset(SubsetMask mask) const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  for (std::size_t i = 0; i < n(); ++i)
    if (mask >> i & 1u) out.push_back(base_.elements()[i]);
  return IntegerSet::from_sorted_unique(std::move(out));
}

std::optional<SubsetMask> GroundSet::mask_of(const IntegerSet& set) const {
  SubsetMask mask = 0;
  for (Element e : set) {
    int i = index_of(e);
    if (i < 0) return std::nullopt;
    mask |= SubsetMask{1} << i;
  }
  return mask;
}

int GroundSet::index_of(Element value) const noexcept {
  if (dense_index_) return value < dense_index_->size() ? (*dense_index_)[value] : -1;
  auto elems = base_.elements();
  auto it = std::lower_bound(elems.begin(), elems.end(), value);
  return it != elems.end() && *it == value ? static_cast<int>(it - elems.begin()) : -1;
}

std::optional<SubsetMask> GroundSet::sum_mask(SubsetMask a, SubsetMask b) const noexcept {
  if (a == 0 || b == 0) return std::nullopt;
  auto elems = base_.elements();
  const int top_a = 31 - std::countl_zero(a);
  const int top_b = 31 - std::countl_zero(b);
  if (elems[top_a] + elems[top_b] > max_element()) return std::nullopt;
  SubsetMask out = 0;
  for (SubsetMask ra = a; ra; ra &= ra - 1) {
    const Element x = elems[std::countr_zero(ra)];
    for (SubsetMask rb = b; rb; rb &= rb - 1) {
      int i = index_of(x + elems[std::countr_zero(rb)]);
      if (i < 0) return std::nullopt;
      out |= SubsetMask{1} << i;
    }
  }
  return out;
}

std::vector<IntegerSet> enumerate_nonempty_subsets(const GroundSet& x, std::size_t cap) {
  if (x.n() > cap) throw Error("ground set too large");
  std::vector<IntegerSet> out;
  out.reserve(x.full_mask());
  for (SubsetMask m = 1; m <= x.full_mask(); ++m) out.push_back(x.subset(m));
  return out;
}

namespace {

Element nonzero_gcd(const IntegerSet& s) {
  Element g = 0;
  for (Element e : s) g = std::gcd(g, e);
  return g;
}

void require_graceful_shape(const GroundSet& x) {
  if (!x.contains_zero()) throw Error("graceful ground set must contain 0");
  if (x.n() < 2) throw Error("ground set needs at least 2 elements");
}

}  // namespace

GroundSet canonicalize_ground_set(const GroundSet& x) {
  require_graceful_shape(x);
  const Element g = nonzero_gcd(x.base());
  std::vector<Element> out;
  for (Element e : x.base()) out.push_back(e / g);
  return GroundSet(IntegerSet::from_sorted_unique(std::move(out)));
}

bool is_canonical(const GroundSet& x) {
  require_graceful_shape(x);
  return nonzero_gcd(x.base()) == 1;
}

std::vector<GroundSet> canonical_ground_sets(std::size_t n, Element max_element) {
  std::vector<GroundSet> out;
  if (n < 2 || max_element + 1 < n) return out;
  // choose n-1 distinct values from 1..max_element in lexicographic order
  std::vector<Element> pick(n - 1);
  std::iota(pick.begin(), pick.end(), Element{1});
  while (true) {
    Element g = 0;
    for (Element e : pick) g = std::gcd(g, e);
    if (g == 1) {
      std::vector<Element> elems{0};
      elems.insert(elems.end(), pick.begin(), pick.end());
      out.emplace_back(IntegerSet::from_sorted_unique(std::move(elems)));
    }
    std::size_t i = pick.size();
    while (i > 0 && pick[i - 1] == max_element - (pick.size() - i)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace iasgl
