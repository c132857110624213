#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dessins/perm_group.hpp"

namespace dessins {

// Explicit element list of a small group with O(1) lookup. Element 0 is the
// identity.
class ElementIndex {
 public:
  ElementIndex(const PermGroup& g, std::uint64_t cap = Limits{}.enumeration_cap);

  std::size_t size() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }

  std::optional<std::size_t> find(const Permutation& p) const;
  // Throws InvalidArgument if p is not an element.
  std::size_t index_of(const Permutation& p) const;

 private:
  std::size_t degree_;
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> slots_;  // open addressing, UINT32_MAX = empty
};

struct ConjClass {
  Permutation representative;
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
  std::string label;
  CycleType cycle_type;
};

// Conjugacy classes of an enumerable group. Classes are sorted by element
// order, then size, then the least canonical rendering among members; the
// representative is that least member and labels are "1A", "2A", "7A", "7B"...
class ClassStructure {
 public:
  explicit ClassStructure(const PermGroup& g, const Limits& limits = {});

  const PermGroup& group() const { return group_; }
  const ElementIndex& elements() const { return elements_; }
  const std::vector<ConjClass>& classes() const { return classes_; }
  std::uint64_t order() const { return elements_.size(); }
  // lcm of element orders
  std::uint64_t exponent() const { return exponent_; }

  std::size_t class_of_element(std::size_t element) const { return class_of_[element]; }
  std::size_t class_of(const Permutation& g) const;
  std::uint64_t element_order(std::size_t element) const { return element_order_[element]; }

  // class containing the k-th powers of the given class
  std::size_t power_map(std::size_t cls, long long k) const;
  std::size_t inverse_class(std::size_t cls) const { return power_map(cls, -1); }

  std::optional<std::size_t> find_label(std::string_view label) const;
  std::vector<std::size_t> classes_of_order(std::uint64_t order) const;

 private:
  PermGroup group_;
  ElementIndex elements_;
  std::vector<ConjClass> classes_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint32_t> element_order_;
  std::uint64_t exponent_ = 1;
};

inline ClassStructure conjugacy_classes(const PermGroup& g, const Limits& limits = {}) {
  return ClassStructure(g, limits);
}

inline std::size_t power_map(const ClassStructure& cs, std::size_t cls, long long k) {
  return cs.power_map(cls, k);
}

// "A", "B", ..., "Z", "AA", "AB", ...
std::string class_letters(std::size_t index);

}  // namespace dessins
