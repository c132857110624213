#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dessins/group_elements.hpp"
#include "dessins/subgroups.hpp"

namespace dessins {

// Exact element orders of x, y and z = (xy)^-1.
using TripleType = std::array<std::uint64_t, 3>;

struct MoebiusRow {
  std::uint64_t order = 0;
  std::size_t class_size = 0;
  long long mu = 0;
  BigInt sigma;
};

struct MoebiusTable {
  std::vector<MoebiusRow> rows;  // one per subgroup class, as in the lattice
  BigInt phi;                    // sum of class_size * mu * sigma
};

// Triples of the given type in the subgroup with these element indices.
BigInt sigma_brute(const SubgroupLattice& lat, const std::vector<std::size_t>& members, const TripleType& t);
// The same count through the character table of h.
BigInt sigma_frobenius(const PermGroup& h, const TripleType& t, const Limits& limits = {});

// mu_G by top-down recursion over subgroup classes.
std::vector<long long> mobius_function(const SubgroupLattice& lat);
// sum over K >= H of mu(K) is 1 for H = G and 0 otherwise, for every class
bool mobius_identity_holds(const SubgroupLattice& lat, const std::vector<long long>& mu);

MoebiusTable mobius_table(const SubgroupLattice& lat, const TripleType& t);

// Generating triples of type t by iterating y over all of G for each class
// representative x. Returns (generating, all) counts.
std::pair<BigInt, BigInt> triple_sweep(const ClassStructure& cs, const TripleType& t);
// Brute-force count of generating triples, for small groups.
BigInt phi_brute(const ClassStructure& cs, const TripleType& t);

// phi / |Aut(G)|; throws VerificationFailure unless integral.
BigInt regular_dessin_count(const BigInt& phi, std::uint64_t automorphisms);

struct PairStatistics {
  BigInt generating_pairs;
  BigInt orbits;  // normal subgroups of F_2 with quotient G
  std::size_t faithful_representations = 0;
  BigInt dessins;
};
PairStatistics generating_pair_statistics(const PermGroup& g, const Limits& limits = {});

}  // namespace dessins
