#pragma once

#include <array>
#include <string>
#include <vector>

#include "dessins/actions.hpp"
#include "dessins/dessin.hpp"
#include "dessins/group_elements.hpp"
#include "dessins/numeric.hpp"

namespace dessins {

// Lines {i, i+1, i+3} mod 7.
std::vector<std::array<Point, 3>> fano_plane();

// Left tree: x = (1,5,2)(3,4,6), y = (0,4)(1,6). Right tree: x^-1 with z^-1.
std::pair<Dessin, Dessin> fano_tree_triples();

// The degree-28 PSL_2(27) map, from its printed 1-based listing.
Dessin psl2_27_triple();

// AGL_3(2) on the eight vectors of F_2^3 (bit i = coordinate i).
PermGroup agl32();
std::uint64_t max_element_order(const ClassStructure& cs);

// The three labelled degree-14 maps with blocks {2i, 2i+1}: left, middle, right.
std::array<Dessin, 3> genus17_triples();
BlockSystem genus17_blocks();

struct NonsplitWitness {
  std::size_t degree8_dessins = 0;
  BigInt degree8_monodromy_order;
  BigInt kernel_order;
  bool kernel_elementary_abelian = false;
  std::uint64_t order_yz3 = 0;
  std::uint64_t agl32_max_order = 0;
  bool holds() const;
};
NonsplitWitness nonsplit_witness();

struct HurwitzParams {
  int alpha, beta, gamma;
};
// q = alpha mod 3, beta mod 4, gamma mod 7; throws unless each is +-1
HurwitzParams hurwitz_params(std::uint32_t q);
// (q - 28 alpha - 21 beta - 36 gamma)/84, with 7, 8, 27 giving 0, 0, 1
std::int64_t quotient_genus_psl2(std::uint32_t q);
// |PSL_2(q)|/84 + 1
BigInt hurwitz_cover_genus(std::uint32_t q);
// genus of an actual (3,2,7) dessin on P^1(q)
std::uint64_t natural_quotient_genus(std::uint32_t q);

struct MonotonicityReport {
  std::uint32_t q = 0;
  std::size_t n = 0, n2 = 0;  // Sylow-p quotient, then the other one
  std::uint64_t g = 0, g2 = 0;
  std::string other;  // description of the second subgroup
};
// Quotients of the PSL_2(q) Hurwitz dessin by a Sylow p-subgroup and by a
// dihedral subgroup of order q - 1 (cyclic of order 7 for q = 8).
MonotonicityReport monotonicity_failure_demo(std::uint32_t q, const Limits& limits = {});

struct HurwitzCount {
  BigInt phi;
  std::uint64_t automorphisms = 0;
  BigInt count;
  std::string method;  // "lattice" or "sweep"
};
// Regular (3,2,7) dessins with automorphism group PSL_2(q).
HurwitzCount hurwitz_dessin_count(std::uint32_t q, const Limits& limits = {});

}  // namespace dessins
