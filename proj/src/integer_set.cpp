#include "iasgl/integer_set.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

namespace iasgl {

IntegerSet::IntegerSet(std::initializer_list<Element> elements)
    : IntegerSet(std::vector<Element>(elements)) {}

IntegerSet::IntegerSet(std::vector<Element> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

IntegerSet IntegerSet::from_sorted_unique(std::vector<Element> elements) {
  IntegerSet s;
  s.elements_ = std::move(elements);
  return s;
}

Element IntegerSet::min() const {
  if (elements_.empty()) throw Error("min of empty set");
  return elements_.front();
}

Element IntegerSet::max() const {
  if (elements_.empty()) throw Error("max of empty set");
  return elements_.back();
}

bool IntegerSet::contains(Element value) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), value);
}

bool IntegerSet::is_subset_of(const IntegerSet& other) const noexcept {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

IntegerSet IntegerSet::scaled(Element factor) const {
  std::vector<Element> out;
  out.reserve(elements_.size());
  for (Element e : elements_) out.push_back(e * factor);
  // factor 0 collapses everything onto 0
  return factor == 0 ? IntegerSet(std::move(out)) : from_sorted_unique(std::move(out));
}

std::string IntegerSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(elements_[i]);
  }
  s += '}';
  return s;
}

std::ostream& operator<<(std::ostream& os, const IntegerSet& set) { return os << set.to_string(); }

bool shortlex_less(const IntegerSet& a, const IntegerSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

IntegerSet sumset(const IntegerSet& a, const IntegerSet& b) {
  if (a.empty() || b.empty()) throw Error("empty set-label");
  std::vector<Element> out;
  out.reserve(a.size() * b.size());
  for (Element x : a)
    for (Element y : b) out.push_back(x + y);
  return IntegerSet(std::move(out));
}

IntegerSet parse_integer_set(const std::string& text, bool* had_duplicates) {
  std::vector<Element> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string token = text.substr(pos, comma - pos);
    auto first = token.find_first_not_of(" \t");
    auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) throw Error("malformed set literal: '" + text + "'");
    token = token.substr(first, last - first + 1);
    Element v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw Error("malformed set literal: '" + text + "'");
    values.push_back(v);
    pos = comma + 1;
  }
  IntegerSet set(values);
  if (had_duplicates) *had_duplicates = set.size() != values.size();
  return set;
}

}  // namespace iasgl
