#include <set>

#include "doctest.h"
#include "helpers.hpp"

#include "dessins/enumerate.hpp"
#include "dessins/symmetric_characters.hpp"

using namespace dessins;

namespace {

// Brute force over S_n: orbits of transitive pairs under simultaneous conjugation.
Rational brute_weighted(std::size_t n, const CycleConstraint& cx, const CycleConstraint& cy,
                        const CycleConstraint& cz, std::size_t& classes) {
  auto all = PermGroup::symmetric(n).elements();
  std::vector<Permutation> xs, ys;
  for (const auto& p : all) {
    if (cx.allows(cycle_type(p))) xs.push_back(p);
    if (cy.allows(cycle_type(p))) ys.push_back(p);
  }
  std::set<std::vector<std::uint32_t>> codes;
  std::uint64_t transitive = 0;
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      if (!cz.allows(cycle_type((x * y).inverse()))) continue;
      auto d = Dessin::try_from_pair(x, y);
      if (!d) continue;
      ++transitive;
      auto c = canonical_form(*d);
      codes.insert(rooted_code(c.x(), c.y(), 0));
    }
  }
  classes = codes.size();
  Rational w(from_u64(transitive), factorial(n));
  w.canonicalize();
  return w;
}

}  // namespace

TEST_CASE("enumeration matches brute force on small degrees") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto [cx, cy] : {std::pair{CycleConstraint::divides(3), CycleConstraint::divides(2)},
                          std::pair{CycleConstraint::any(), CycleConstraint::divides(2)}}) {
      std::size_t classes = 0;
      Rational w = brute_weighted(n, cx, cy, CycleConstraint::any(), classes);
      for (std::size_t workers : {1, 3}) {
        auto r = enumerate({n, cx, cy, CycleConstraint::any(), workers});
        CHECK(r.dessins.size() == classes);
        CHECK(r.weighted_count() == w);
      }
    }
  }
}

TEST_CASE("one seven-face census") {
  auto r = count_one_seven_face(2);
  REQUIRE(r.dessins.size() == 4);
  std::vector<std::size_t> degrees;
  std::vector<BigInt> orders;
  for (const auto& d : r.dessins) {
    degrees.push_back(d.dessin.degree());
    orders.push_back(d.monodromy_order);
  }
  CHECK(degrees == std::vector<std::size_t>{7, 7, 8, 9});
  CHECK(orders == std::vector<BigInt>{168, 168, 168, 504});
  CHECK(r.dessins[2].passport.str() == "(3^2 1^2, 2^4, 7^1 1^1)");
  // the two trees form a chiral pair
  CHECK_FALSE(isomorphic(r.dessins[0].dessin, r.dessins[1].dessin));
  CHECK(isomorphic(mirror(r.dessins[0].dessin), r.dessins[1].dessin));
}

TEST_CASE("disconnected configurations of (6 3 2 1, 2^6, 6 3 2 1)") {
  auto t = CycleType({6, 3, 2, 1});
  auto inv = CycleType({2, 2, 2, 2, 2, 2});
  auto r = enumerate({12, CycleConstraint::exact(t), CycleConstraint::exact(inv), CycleConstraint::exact(t), 2});
  CHECK(r.dessins.size() == 18);
  CHECK(r.weighted_count() == 18);
  auto cfgs = disconnected_configurations(t, inv, t);
  CHECK(cfgs.size() == 2);
  Rational rest = 0;
  bool half = false;
  for (const auto& c : cfgs) {
    rest += c.weight;
    half = half || c.weight == Rational(1, 2);
  }
  CHECK(rest == Rational(3, 2));
  CHECK(half);
  CHECK(r.weighted_count() + rest == weighted_passport_count(12, {6, 3, 2, 1}, {2, 2, 2, 2, 2, 2}, {6, 3, 2, 1}));
}

TEST_CASE("canonical form is a class invariant") {
  auto d = Dessin::from_pair(test::perm(7, "(1,5,2)(3,4,6)"), test::perm(7, "(0,4)(1,6)"));
  auto g = test::perm(7, "(0,6,2)(3,5)");
  auto e = Dessin::from_pair(conjugate(d.x(), g), conjugate(d.y(), g));
  CHECK(canonical_form(d) == canonical_form(e));
  CHECK_THROWS_AS(enumerate({5, CycleConstraint::any(), CycleConstraint::any(), CycleConstraint::any(), 1, 10}),
                  CapExceeded);
}
