#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "dessins/group_elements.hpp"

namespace dessins {

// Known |Aut(G)| values keyed by group_signature(); consulted before any
// search.
struct AutomorphismOverride {
  std::string signature;
  std::uint64_t value;
};

// Order plus the sorted (element order, class size) multiset, e.g.
// "168:1x1,2x21,3x56,4x42,7x24,7x24".
std::string group_signature(const ClassStructure& cs);

// A pair generating G, chosen to make the automorphism search cheap.
std::optional<std::pair<Permutation, Permutation>> cheap_generating_pair(const ClassStructure& cs);

// True iff a -> a2, b -> b2 extends to an automorphism of G = <a, b>.
bool extends_to_automorphism(const ClassStructure& cs, const Permutation& a, const Permutation& b,
                             const Permutation& a2, const Permutation& b2);

// |Aut(G)|: images of a fixed generating pair are counted up to inner
// automorphisms, class representative by class representative.
std::uint64_t automorphism_count(const ClassStructure& cs,
                                 std::span<const AutomorphismOverride> overrides = {});

}  // namespace dessins
