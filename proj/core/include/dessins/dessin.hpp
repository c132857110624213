#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dessins/actions.hpp"
#include "dessins/errors.hpp"
#include "dessins/numeric.hpp"
#include "dessins/perm_group.hpp"

namespace dessins {

// <x, y> has more than one orbit. Kept distinct from other input errors so
// that counting code can tell disconnected triples apart from bad data.
class NotTransitive : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A dessin of degree n: permutations x, y, z of the n edges with xyz = 1
// and <x, y> transitive. Both invariants hold for every value of the type.
class Dessin {
 public:
  // z = (xy)^-1. Throws NotTransitive or InvalidArgument.
  static Dessin from_pair(Permutation x, Permutation y);
  // nullopt iff <x, y> is not transitive
  static std::optional<Dessin> try_from_pair(Permutation x, Permutation y);
  // Validates xyz = 1 as well.
  static Dessin from_triple(Permutation x, Permutation y, Permutation z);
  // The one-edge dessin.
  static Dessin trivial();

  std::size_t degree() const { return x_.degree(); }
  const Permutation& x() const { return x_; }
  const Permutation& y() const { return y_; }
  const Permutation& z() const { return z_; }

  friend bool operator==(const Dessin&, const Dessin&) = default;

 private:
  Dessin(Permutation x, Permutation y, Permutation z)
      : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}
  Permutation x_, y_, z_;
};

inline Dessin dessin_from_pair(Permutation x, Permutation y) {
  return Dessin::from_pair(std::move(x), std::move(y));
}

struct Passport {
  CycleType x, y, z;
  // "(3^2 1^2, 2^4, 7 1)"
  std::string str() const;
  friend bool operator==(const Passport&, const Passport&) = default;
  friend auto operator<=>(const Passport&, const Passport&) = default;
};

Passport passport(const Dessin& d);
// element orders of x, y, z
std::array<std::uint64_t, 3> type(const Dessin& d);

// 2 - 2g = c(x) + c(y) + c(z) - n
std::uint64_t genus(const Dessin& d);
// (n - 28u - 21v - 36w)/84 + 1 for a (3,2,7) dessin with u, v, w fixed
// points of x, y, z
Rational genus_327(std::int64_t n, std::int64_t u, std::int64_t v, std::int64_t w);

PermGroup monodromy(const Dessin& d);
PermGroup automorphisms(const Dessin& d);
std::size_t automorphism_order(const Dessin& d);
bool is_regular(const Dessin& d);
bool is_primitive(const Dessin& d);

// Dessin on the right cosets of H <= monodromy(r).
Dessin coset_dessin(const Dessin& r, const PermGroup& h, const Limits& limits = {});

struct RegularCover {
  Dessin dessin;
  CosetAction action;  // of monodromy(base) on itself; point i is coset_reps()[i]
  // image of an element of monodromy(base) in the cover's monodromy
  Permutation lift(const Permutation& g) const { return action.image_of(g); }
};
RegularCover regular_cover(const Dessin& d, const Limits& limits = {});

// Genus of the regular cover from |G| and the orders (p, q, r) of x, y, z.
BigInt cover_genus(const Dessin& d);
BigInt cover_genus(const BigInt& group_order, std::uint64_t p, std::uint64_t q, std::uint64_t r);

// The point stabiliser has trivial core in the monodromy group.
bool is_faithful(const Dessin& d, const Limits& limits = {});
// coset_dessin(r, h) is a faithful quotient of r
bool is_faithful_quotient(const Dessin& r, const PermGroup& h, const Limits& limits = {});

Dessin block_quotient(const Dessin& d, const BlockSystem& b);

// g with g^-1 x1 g = x2 and g^-1 y1 g = y2
std::optional<Permutation> isomorphic(const Dessin& a, const Dessin& b);
// (x^-1, y^-1)
Dessin mirror(const Dessin& d);

}  // namespace dessins
