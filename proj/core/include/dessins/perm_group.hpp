#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "dessins/numeric.hpp"
#include "dessins/permutation.hpp"

namespace dessins {

// Resource caps. Operations that need an explicit element list, a subgroup
// lattice or a constructed cover check the matching cap and throw
// CapExceeded rather than degrade.
struct Limits {
  std::uint64_t enumeration_cap = 1'000'000;
  std::uint64_t lattice_cap = 2'000;
  std::uint64_t degree_cap = 100'000;
};

// One level of a stabiliser chain: base point, the strong generators fixing
// all earlier base points, and the basic orbit with coset representatives
// (base^rep == orbit point).
struct ChainLevel {
  Point base_point = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<std::int32_t> orbit_slot;  // point -> index into orbit / reps, -1 if absent
  std::vector<Permutation> reps;
};

class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                  std::span<const Point> base_prefix);

  std::size_t degree() const { return degree_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  std::vector<Point> base() const;
  BigInt order() const;

  // Strips g through levels [from, end). Returns the residue and the level at
  // which stripping stopped (== levels().size() if it went all the way).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from = 0) const;
  bool contains(const Permutation& g) const;

 private:
  void build(std::span<const Permutation> generators, std::span<const Point> base_prefix);
  void rebuild_orbit(ChainLevel& level) const;
  Point choose_base_point(const Permutation& moved_by) const;

  std::size_t degree_;
  std::vector<ChainLevel> levels_;
};

// A permutation group given by generators. The stabiliser chain is built
// deterministically on first use and shared by copies; after that the group
// is read-only and safe to use from several threads.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators);
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<Point> base_prefix);

  static PermGroup trivial(std::size_t degree);
  static PermGroup symmetric(std::size_t degree);
  static PermGroup alternating(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  const StabilizerChain& chain() const;
  BigInt order() const;
  // Throws CapExceeded if the order does not fit.
  std::uint64_t order_u64() const;
  bool contains(const Permutation& g) const;

  std::vector<Point> orbit(Point p) const;
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  // Stabiliser of a point, via a chain whose base starts at that point.
  PermGroup stabilizer(Point p) const;

  // Visits every element exactly once in a fixed order, identity first.
  // Throws CapExceeded if |G| > cap.
  void for_each_element(const std::function<void(const Permutation&)>& visit,
                        std::uint64_t cap) const;
  std::vector<Permutation> elements(std::uint64_t cap = Limits{}.enumeration_cap) const;

  bool is_subgroup_of(const PermGroup& g) const;
  bool is_normal_in(const PermGroup& g) const;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Point> base_prefix_;
  struct Lazy {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
  };
  std::shared_ptr<Lazy> lazy_;
};

PermGroup subgroup_generated(std::size_t degree, std::vector<Permutation> gens);
// Group generated by a list of elements, keeping only the elements that
// enlarge the group built so far.
PermGroup group_from_elements(std::size_t degree, std::span<const Permutation> elements);
BigInt group_order(const PermGroup& g);

}  // namespace dessins
