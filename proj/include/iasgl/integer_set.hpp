#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace iasgl {

using Element = std::uint64_t;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite set of non-negative integers, stored strictly ascending.
///
/// Every set-label, edge label and ground set is an IntegerSet. The empty
/// set is representable (it shows up while building sets) but the
/// labeling layer never hands one out.
class IntegerSet {
 public:
  IntegerSet() = default;
  IntegerSet(std::initializer_list<Element> elements);
  /// Sorts and deduplicates.
  explicit IntegerSet(std::vector<Element> elements);

  /// Adopts an already strictly ascending sequence without re-sorting.
  static IntegerSet from_sorted_unique(std::vector<Element> elements);

  bool empty() const noexcept { return elements_.empty(); }
  std::size_t size() const noexcept { return elements_.size(); }
  Element min() const;
  Element max() const;

  bool contains(Element value) const noexcept;
  bool is_subset_of(const IntegerSet& other) const noexcept;

  std::span<const Element> elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  /// Every element multiplied by `factor`.
  IntegerSet scaled(Element factor) const;

  /// "{0,1,3}"
  std::string to_string() const;

  friend bool operator==(const IntegerSet&, const IntegerSet&) = default;
  friend auto operator<=>(const IntegerSet&, const IntegerSet&) = default;

 private:
  std::vector<Element> elements_;
};

std::ostream& operator<<(std::ostream& os, const IntegerSet& set);

/// Cardinality first, then lexicographic on the element sequence.
bool shortlex_less(const IntegerSet& a, const IntegerSet& b);

/// Sumset A + B = {a + b : a in A, b in B}, computed in the non-negative
/// integers (never truncated). Throws Error("empty set-label") on an empty
/// operand.
IntegerSet sumset(const IntegerSet& a, const IntegerSet& b);

/// Parses "0,1,3" (any order). Duplicates are dropped and reported through
/// `had_duplicates` when it is non-null.
IntegerSet parse_integer_set(const std::string& text, bool* had_duplicates = nullptr);

}  // namespace iasgl
