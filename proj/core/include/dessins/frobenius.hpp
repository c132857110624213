#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dessins/character_table.hpp"
#include "dessins/group_elements.hpp"

namespace dessins {

// #{(x, y, z) in X x Y x Z : xyz = 1}
// = |X||Y||Z|/|G| * sum_chi chi(x)chi(y)chi(z)/chi(1), evaluated exactly.
// Throws VerificationFailure unless the value is a natural number.
BigInt frobenius_count(const CharacterTable& t, std::size_t x, std::size_t y, std::size_t z);

// k-class version: denominator chi(1)^(k-2).
BigInt frobenius_count_k(const CharacterTable& t, std::span<const std::size_t> classes);

// The character sum alone (without the |X||Y||Z|/|G| factor); the count is
// the naive estimate |X||Y||Z|/|G| times this sum, where the trivial
// character contributes exactly 1.
Cyclotomic frobenius_character_sum(const CharacterTable& t, std::span<const std::size_t> classes);
Rational naive_estimate(const CharacterTable& t, std::span<const std::size_t> classes);

// Direct iteration over X x Y.
BigInt brute_force_triple_count(const ClassStructure& cs, std::size_t x, std::size_t y, std::size_t z);

// All r^3 class-triple counts at once: N[x][y][z] = |X| * #{y in Y : (x_rep y)^-1 in Z}.
std::vector<std::vector<std::vector<BigInt>>> triple_count_tally(const ClassStructure& cs);

// Sum of frobenius_count over class triples whose element orders are
// exactly (p, q, r).
BigInt triple_count_by_type(const CharacterTable& t, std::uint64_t p, std::uint64_t q, std::uint64_t r);

}  // namespace dessins
