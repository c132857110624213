#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dessins/dessin.hpp"
#include "dessins/numeric.hpp"

namespace dessins {

// Constraint on the cycle type of one of x, y, z.
struct CycleConstraint {
  enum class Kind { Any, Divides, Exact, Within };
  Kind kind = Kind::Any;
  std::uint64_t order = 0;  // Divides: every cycle length divides this
  CycleType type;           // Exact: equal; Within: a sub-multiset of this

  static CycleConstraint any() { return {}; }
  static CycleConstraint divides(std::uint64_t d) { return {Kind::Divides, d, {}}; }
  static CycleConstraint exact(CycleType t) { return {Kind::Exact, 0, std::move(t)}; }
  static CycleConstraint within(CycleType t) { return {Kind::Within, 0, std::move(t)}; }

  bool allows(const CycleType& t) const;
  std::string str() const;
};

struct EnumQuery {
  std::size_t degree = 1;
  CycleConstraint x, y, z;
  std::size_t workers = 1;
  std::uint64_t node_budget = 2'000'000'000;
};

struct DessinReport {
  Dessin dessin;
  Passport passport;
  std::uint64_t genus = 0;
  BigInt monodromy_order;
  std::size_t automorphisms = 1;
  bool primitive = false;
  std::size_t minimal_block_systems = 0;
};

struct CensusResult {
  std::vector<DessinReport> dessins;  // pairwise non-isomorphic, in canonical order
  std::uint64_t search_nodes = 0;
  // sum of 1/|Aut| over the listed dessins
  Rational weighted_count() const;
};

// Canonical code of a dessin rooted at edge r: breadth-first relabelling
// visiting x(i) then y(i) for i = 0, 1, ...; the code is x'(0), y'(0), x'(1), ...
std::vector<std::uint32_t> rooted_code(const Permutation& x, const Permutation& y, Point root);
// Relabelled so that the least rooted code is the identity labelling.
Dessin canonical_form(const Dessin& d);

// Every transitive (x, y) of the given degree satisfying the constraints,
// once per isomorphism class. Throws CapExceeded past the node budget.
CensusResult enumerate(const EnumQuery& q);

// Degrees lo..hi, z = 7^k 1^(n-7k), x and y of orders dividing 3 and 2.
CensusResult census_seven_faces(std::size_t faces, std::size_t lo, std::size_t hi, std::size_t workers = 1);
inline CensusResult count_one_seven_face(std::size_t workers = 1) { return census_seven_faces(1, 7, 13, workers); }
inline CensusResult census_two_seven_faces(std::size_t workers = 1) {
  return census_seven_faces(2, 14, 20, workers);
}

// A non-transitive triple up to relabelling: a multiset of connected
// components, weighted by 1/|Aut| = 1/prod(|Aut D_i|^k_i k_i!).
struct DisconnectedConfiguration {
  std::vector<std::pair<Dessin, std::size_t>> components;  // (component, multiplicity)
  Rational weight;
};

// All disconnected configurations with exactly the cycle types (x, y, z).
std::vector<DisconnectedConfiguration> disconnected_configurations(const CycleType& x, const CycleType& y,
                                                                   const CycleType& z, std::size_t workers = 1);

}  // namespace dessins
