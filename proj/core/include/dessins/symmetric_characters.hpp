#pragma once

#include <cstdint>
#include <vector>

#include "dessins/numeric.hpp"
#include "dessins/permutation.hpp"

namespace dessins {

using Partition = std::vector<std::size_t>;  // parts in descending order

// All partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions(std::size_t n);

// chi^lambda on the class of cycle type mu, by the Murnaghan-Nakayama rule
// on beta-sets (border strips removed one part of mu at a time).
BigInt sym_char_value(const Partition& lambda, const Partition& mu);

// |class of cycle type mu| in S_n = n! / z_mu
BigInt sym_class_size(const Partition& mu);
BigInt factorial(std::size_t n);

// Frobenius sum over S_n for three cycle types, divided by n!: triples with
// product 1, each counted with weight 1/|Aut| and no transitivity demanded.
Rational weighted_passport_count(std::size_t n, const Partition& lambda, const Partition& mu,
                                 const Partition& nu);

// Number of (x, y) with x, y, (xy)^-1 of the given cycle types in S_n.
BigInt sym_triple_count(std::size_t n, const Partition& lambda, const Partition& mu,
                        const Partition& nu);

inline Partition partition_of(const CycleType& t) { return t.parts(); }

}  // namespace dessins
