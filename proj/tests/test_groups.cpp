#include <set>

#include "doctest.h"
#include "helpers.hpp"

#include "dessins/actions.hpp"
#include "dessins/automorphisms.hpp"
#include "dessins/group_elements.hpp"
#include "dessins/subgroups.hpp"

using namespace dessins;

namespace {

// Closure of the generators by breadth-first multiplication.
std::set<Permutation> closure(const PermGroup& g) {
  std::set<Permutation> seen{Permutation::identity(g.degree())};
  std::vector<Permutation> queue(seen.begin(), seen.end());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& s : g.generators()) {
      auto p = queue[i] * s;
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("Schreier-Sims order agrees with brute closure") {
  for (const auto& g : {test::psl32(), test::a5(), PermGroup::symmetric(5),
                        PermGroup(6, {test::perm(6, "(0,1,2,3,4,5)"), test::perm(6, "(0,5)(1,4)(2,3)")})}) {
    auto all = closure(g);
    CHECK(g.order() == BigInt(static_cast<unsigned long>(all.size())));
    auto listed = g.elements();
    CHECK(listed.front().is_identity());
    CHECK(std::set<Permutation>(listed.begin(), listed.end()) == all);
    for (const auto& p : all) CHECK(g.contains(p));
  }
}

TEST_CASE("large symmetric and alternating orders") {
  CHECK(PermGroup::alternating(15).order() == BigInt("653837184000"));
  CHECK(PermGroup::symmetric(12).order() == BigInt("479001600"));
  CHECK_FALSE(PermGroup::alternating(6).contains(test::perm(6, "(0,1)")));
}

TEST_CASE("PSL(3,2) classes") {
  auto cs = conjugacy_classes(test::psl32());
  REQUIRE(cs.order() == 168);
  std::vector<std::uint64_t> sizes;
  for (const auto& c : cs.classes()) sizes.push_back(c.size);
  CHECK(sizes == std::vector<std::uint64_t>{1, 21, 56, 42, 24, 24});
  CHECK(cs.classes()[4].label == "7A");
  CHECK(cs.classes()[5].label == "7B");
  CHECK(cs.inverse_class(4) == 5);
  CHECK(cs.power_map(3, 2) == 1);
  CHECK(cs.exponent() == 84);
}

TEST_CASE("subgroup lattices") {
  struct Case {
    PermGroup g;
    std::size_t classes, total;
  };
  for (const auto& c : {Case{test::a5(), 9, 59}, Case{PermGroup::symmetric(4), 11, 30},
                        Case{test::psl32(), 15, 179}}) {
    SubgroupLattice lat(c.g);
    CHECK(lat.classes().size() == c.classes);
    CHECK(lat.total_subgroups() == c.total);
    CHECK(lat.classes().front().order == 1);
    CHECK(lat.classes()[lat.top()].order == lat.group_order());
  }
  SubgroupLattice psl(test::psl32());
  CHECK(count_faithful_quotients(psl, 7) == 2);
  CHECK(count_faithful_quotients(psl, 8) == 1);
  CHECK(count_faithful_quotients(psl, 14) == 2);
  CHECK(psl.maximal_classes().size() == 3);
}

TEST_CASE("find_subgroup") {
  auto g = test::psl32();
  CHECK(find_subgroup(g, {SubgroupQuery::Kind::Sylow, 2}).order() == 8);
  CHECK(find_subgroup(g, {SubgroupQuery::Kind::Sylow, 7}).order() == 7);
  CHECK(find_subgroup(g, {SubgroupQuery::Kind::Dihedral, 6}).order() == 6);
  CHECK(find_subgroup(g, {SubgroupQuery::Kind::Order, 21}).order() == 21);
  CHECK_THROWS_AS(find_subgroup(g, {SubgroupQuery::Kind::Cyclic, 6}), InvalidArgument);
}

TEST_CASE("automorphism group orders") {
  CHECK(automorphism_count(conjugacy_classes(test::psl32())) == 336);
  CHECK(automorphism_count(conjugacy_classes(test::a5())) == 120);
  CHECK(automorphism_count(conjugacy_classes(PermGroup::symmetric(4))) == 24);
  CHECK(automorphism_count(conjugacy_classes(PermGroup(4, {test::perm(4, "(0,1,2,3)")}))) == 2);
}

TEST_CASE("cosets, cores and blocks") {
  auto g = test::psl32();
  auto h = find_subgroup(g, {SubgroupQuery::Kind::Sylow, 7});
  CosetAction act(g, h);
  CHECK(act.index() == 24);
  CHECK(act.image().order() == 168);
  CHECK(core(g, h).order() == 1);
  auto n = PermGroup::symmetric(4);
  auto v4 = PermGroup(4, {test::perm(4, "(0,1)(2,3)"), test::perm(4, "(0,2)(1,3)")});
  CHECK(core(n, v4).order() == 4);
  CHECK(CosetAction(n, v4).image().order() == 6);

  auto d8 = PermGroup(4, {test::perm(4, "(0,1,2,3)"), test::perm(4, "(1,3)")});
  CHECK_FALSE(is_primitive(d8));
  auto sys = all_minimal_block_systems(d8);
  REQUIRE(sys.size() == 1);
  CHECK(sys[0].blocks == std::vector<std::vector<Point>>{{0, 2}, {1, 3}});
  CHECK(block_kernel(d8, sys[0]).order() == 4);
  CHECK(is_primitive(g));
}

TEST_CASE("centralisers of transitive groups") {
  auto c6 = PermGroup(6, {test::perm(6, "(0,1,2,3,4,5)")});
  CHECK(centralizer_in_sym(c6).order() == 6);
  CHECK(centralizer_in_sym(test::psl32()).order() == 1);
  auto regular = CosetAction(test::a5(), PermGroup::trivial(5)).image();
  CHECK(centralizer_in_sym(regular).order() == 60);

  const Permutation a[] = {test::perm(4, "(0,1,2,3)")};
  const Permutation b[] = {test::perm(4, "(0,2,1,3)")};
  auto g = simultaneous_conjugator(a, b);
  REQUIRE(g);
  CHECK(conjugate(a[0], *g) == b[0]);
}
