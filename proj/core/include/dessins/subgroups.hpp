#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dessins/group_elements.hpp"
#include "dessins/perm_group.hpp"

namespace dessins {

// Multiplication table of a small enumerated group (element indices as in
// the ElementIndex; index 0 is the identity).
class CayleyTable {
 public:
  explicit CayleyTable(const ElementIndex& elements);

  std::size_t size() const { return n_; }
  std::uint16_t mul(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  std::uint16_t inverse(std::size_t a) const { return inverse_[a]; }
  std::uint32_t order(std::size_t a) const { return order_[a]; }

 private:
  std::size_t n_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inverse_;
  std::vector<std::uint32_t> order_;
};

// A subset of the element indices.
using ElementSet = std::vector<std::uint64_t>;

struct SubgroupClass {
  std::uint64_t order = 0;
  std::vector<std::uint16_t> generators;  // of the representative
  std::vector<ElementSet> conjugates;     // conjugates[0] is the representative
  std::size_t size() const { return conjugates.size(); }
};

// All subgroups of a small group, grouped into conjugacy classes and sorted
// by order. Built bottom-up: every subgroup K > 1 is <H, z> for a maximal
// subgroup H of K and any z in K \ H, so extending each class
// representative by every cyclic subgroup reaches all classes.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(const PermGroup& g, const Limits& limits = {});

  const PermGroup& group() const { return group_; }
  const ElementIndex& elements() const { return elements_; }
  const CayleyTable& table() const { return table_; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  std::size_t total_subgroups() const;
  std::uint64_t group_order() const { return elements_.size(); }
  std::uint64_t index(std::size_t cls) const { return group_order() / classes_[cls].order; }

  std::vector<std::size_t> members(const ElementSet& s) const;
  PermGroup representative(std::size_t cls) const;
  std::vector<Permutation> representative_elements(std::size_t cls) const;

  // Number of conjugates in class k that contain the representative of h
  // (h itself counts when h == k).
  std::size_t containing_count(std::size_t h, std::size_t k) const { return containing_[h][k]; }
  bool is_core_free(std::size_t cls) const;
  bool is_normal(std::size_t cls) const { return classes_[cls].size() == 1; }
  std::vector<std::size_t> classes_of_index(std::uint64_t idx) const;
  std::vector<std::size_t> maximal_classes() const;
  // (h, k): some conjugate of k contains rep h with no subgroup strictly between
  std::vector<std::pair<std::size_t, std::size_t>> maximal_inclusions() const;
  std::size_t top() const { return classes_.size() - 1; }

 private:
  ElementSet closure(const std::vector<std::uint16_t>& gens) const;

  PermGroup group_;
  ElementIndex elements_;
  CayleyTable table_;
  std::vector<SubgroupClass> classes_;
  std::vector<std::vector<std::size_t>> containing_;
};

inline SubgroupLattice all_subgroups(const PermGroup& g, const Limits& limits = {}) {
  return SubgroupLattice(g, limits);
}

// Number of conjugacy classes of core-free subgroups of index n.
std::size_t count_faithful_quotients(const SubgroupLattice& lattice, std::uint64_t n);

struct SubgroupQuery {
  enum class Kind { Sylow, Dihedral, Cyclic, Order };
  Kind kind;
  std::uint64_t value;  // p for Sylow, the order otherwise
};

// Throws InvalidArgument if no such subgroup exists.
PermGroup find_subgroup(const PermGroup& g, const SubgroupQuery& q, const Limits& limits = {});

}  // namespace dessins
