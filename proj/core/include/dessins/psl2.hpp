#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dessins/dessin.hpp"
#include "dessins/finite_field.hpp"

namespace dessins {

// P^1(q): point i < q is the field element i, point q is infinity.
inline Point infinity_point(const FField& f) { return f.order(); }
std::string projective_label(const FField& f, Point p);

// t -> (a t + b) / (c t + d), ad - bc != 0
struct Mobius {
  FField::Elem a, b, c, d;
};
Permutation mobius_permutation(const FField& f, const Mobius& m);
// m1 then m2 as permutations is the matrix product m2 m1
Mobius mobius_compose(const FField& f, const Mobius& m1, const Mobius& m2);

// |PSL_2(q)| = q(q^2 - 1)/gcd(2, q - 1)
BigInt psl2_order(std::uint32_t q);
PermGroup psl2_group(const FField& f);

// The (3,2,7) dessin of degree 8 built from y: a -> -1/a, z: a -> a+1, x = (yz)^-1.
Dessin psl2_natural_triple_7();

// Dessins on P^1(q) with x: t -> -1/(t+1), y an involution, z = (xy)^-1 of
// order 7 and <x, y> = PSL_2(q). One per admissible y, in the order found.
std::vector<Dessin> hurwitz_triples(const FField& f, std::size_t limit = SIZE_MAX);

}  // namespace dessins
