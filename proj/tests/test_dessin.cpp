#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"

#include "dessins/belyi.hpp"
#include "dessins/character_table.hpp"
#include "dessins/constructions.hpp"
#include "dessins/dessin_io.hpp"
#include "dessins/enumerate.hpp"
#include "dessins/frobenius.hpp"
#include "dessins/moebius.hpp"
#include "dessins/psl2.hpp"

using namespace dessins;

namespace {

Dessin fano_left() {
  return Dessin::from_pair(test::perm(7, "(1,5,2)(3,4,6)"), test::perm(7, "(0,4)(1,6)"));
}

PermGroup cyclic(std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Permutation(img)});
}

}  // namespace

TEST_CASE("dessin invariants hold by construction") {
  auto d = fano_left();
  CHECK((d.x() * d.y() * d.z()).is_identity());
  CHECK(genus(d) == 0);
  CHECK(type(d) == std::array<std::uint64_t, 3>{3, 2, 7});
  CHECK_THROWS_AS(Dessin::from_pair(test::perm(4, "(0,1)"), test::perm(4, "(2,3)")), NotTransitive);
  CHECK_THROWS_AS(Dessin::from_triple(d.x(), d.y(), d.x()), InvalidArgument);
  CHECK(Dessin::trivial().degree() == 1);
  CHECK(genus(Dessin::trivial()) == 0);
}

TEST_CASE("genus of the (3,2,7) formula matches the Euler count") {
  for (const auto& r : count_one_seven_face().dessins) {
    const auto& d = r.dessin;
    const auto fixed = [](const Permutation& p) {
      std::int64_t k = 0;
      for (Point i = 0; i < p.degree(); ++i) k += p[i] == i;
      return k;
    };
    const Rational g = genus_327(static_cast<std::int64_t>(d.degree()), fixed(d.x()), fixed(d.y()), fixed(d.z()));
    CHECK(g == Rational(static_cast<long>(genus(d))));
  }
}

TEST_CASE("mirror is an involution and preserves the passport") {
  for (const auto& r : census_two_seven_faces().dessins) {
    const auto& d = r.dessin;
    CHECK(mirror(mirror(d)) == d);
    CHECK(passport(mirror(d)).x == passport(d).x);
    CHECK(genus(mirror(d)) == genus(d));
  }
}

TEST_CASE("isomorphism is found exactly for conjugate dessins") {
  auto d = fano_left();
  const auto g = test::perm(7, "(0,3,6,2)(1,5)");
  auto e = Dessin::from_pair(conjugate(d.x(), g), conjugate(d.y(), g));
  auto iso = isomorphic(d, e);
  REQUIRE(iso.has_value());
  CHECK(conjugate(d.x(), *iso) == e.x());
  CHECK(conjugate(d.y(), *iso) == e.y());
  CHECK(canonical_form(d) == canonical_form(e));
}

TEST_CASE("a dessin is regular iff its monodromy group has order n") {
  auto check = [](const Dessin& d) {
    CHECK(is_regular(d) == (monodromy(d).order() == from_u64(d.degree())));
  };
  check(fano_left());
  for (const auto& r : count_one_seven_face().dessins) check(r.dessin);
  check(Dessin::from_pair(test::perm(4, "(0,1,2,3)"), test::perm(4, "(0,3,2,1)")));
}

TEST_CASE("regular cover and stabiliser quotient round trip") {
  auto d = fano_left();
  auto cover = regular_cover(d);
  CHECK(cover.dessin.degree() == 168);
  CHECK(is_regular(cover.dessin));
  CHECK(cover.lift(d.x()) == cover.dessin.x());
  CHECK(cover.lift(d.y()) == cover.dessin.y());
  CHECK(cover_genus(d) == 3);
  CHECK(cover_genus(cover.dessin) == genus(cover.dessin));

  // the cover's monodromy, acting on cosets of the stabiliser of the
  // identity coset's image of point 0, gives d back
  const PermGroup stab = monodromy(d).stabilizer(0);
  auto back = coset_dessin(d, stab);
  CHECK(isomorphic(back, d).has_value());
  CHECK(is_faithful_quotient(d, stab));
  CHECK(is_faithful(d));
}

TEST_CASE("a regular dessin is its own regular cover") {
  auto d = Dessin::from_pair(test::perm(4, "(0,1,2,3)"), test::perm(4, "(0,3,2,1)"));
  REQUIRE(is_regular(d));
  CHECK(isomorphic(regular_cover(d).dessin, d).has_value());
}

TEST_CASE("block quotients of the genus 17 maps are the Fano trees") {
  const auto blocks = genus17_blocks();
  auto [left, right] = fano_tree_triples();
  std::set<std::vector<std::uint32_t>> trees{rooted_code(canonical_form(left).x(), canonical_form(left).y(), 0),
                                             rooted_code(canonical_form(right).x(), canonical_form(right).y(), 0)};
  for (const auto& d : genus17_triples()) {
    CHECK(d.degree() == 14);
    CHECK(genus(d) == 0);
    auto q = block_quotient(d, blocks);
    CHECK(q.degree() == 7);
    CHECK(monodromy(q).order() == 168);
    auto c = canonical_form(q);
    CHECK(trees.count(rooted_code(c.x(), c.y(), 0)) == 1);
  }
  // the degree 8 map is primitive, so no pairing of points is invariant
  CHECK_THROWS_AS(block_quotient(psl2_natural_triple_7(), BlockSystem::from_blocks(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}})),
                  InvalidArgument);
}

TEST_CASE("Fano plane and its trees") {
  const auto lines = fano_plane();
  REQUIRE(lines.size() == 7);
  for (Point a = 0; a < 7; ++a) {
    for (Point b = a + 1; b < 7; ++b) {
      int through = 0;
      for (const auto& l : lines) through += std::count(l.begin(), l.end(), a) && std::count(l.begin(), l.end(), b);
      CHECK(through == 1);
    }
  }
  auto [left, right] = fano_tree_triples();
  // y fixes exactly the points of one line
  std::vector<Point> fixed;
  for (Point i = 0; i < 7; ++i) {
    if (left.y()[i] == i) fixed.push_back(i);
  }
  CHECK(fixed == std::vector<Point>{2, 3, 5});
  CHECK(passport(left) == passport(right));
  CHECK(monodromy(left).order() == 168);
  CHECK(monodromy(right).order() == 168);
  CHECK_FALSE(isomorphic(left, right).has_value());
  CHECK(genus(left) == 0);
}

TEST_CASE("PSL2 constructions") {
  auto d = psl2_natural_triple_7();
  CHECK(d.degree() == 8);
  CHECK(type(d) == std::array<std::uint64_t, 3>{3, 2, 7});
  CHECK(monodromy(d).order() == 168);
  CHECK(passport(d).str() == "(3^2 1^2, 2^4, 7^1 1^1)");

  CHECK(psl2_order(7) == 168);
  CHECK(psl2_order(8) == 504);
  CHECK(psl2_order(27) == 9828);
  const FField f8(2, 3);
  CHECK(psl2_group(f8).order() == 504);
  for (const auto& t : hurwitz_triples(f8)) {
    CHECK(type(t) == std::array<std::uint64_t, 3>{3, 2, 7});
    CHECK(t.degree() == 9);
  }

  auto p27 = psl2_27_triple();
  CHECK(p27.degree() == 28);
  CHECK(monodromy(p27).order() == 9828);
  CHECK(type(p27) == std::array<std::uint64_t, 3>{3, 2, 7});
}

TEST_CASE("Mobius transformations compose like permutations") {
  const FField f7(7, 1);
  // Mobius composition agrees with permutation composition
  const Mobius m1{1, 1, 0, 1}, m2{0, 6, 1, 0};
  CHECK(mobius_permutation(f7, m1) * mobius_permutation(f7, m2) ==
        mobius_permutation(f7, mobius_compose(f7, m1, m2)));
}

TEST_CASE("AGL(3,2)") {
  auto g = agl32();
  CHECK(g.order() == 1344);
  CHECK(g.is_transitive());
  CHECK(max_element_order(conjugacy_classes(g)) == 7);
  auto w = nonsplit_witness();
  CHECK(w.holds());
}

TEST_CASE("Hurwitz parameters") {
  CHECK(quotient_genus_psl2(7) == 0);
  CHECK(quotient_genus_psl2(8) == 0);
  CHECK(quotient_genus_psl2(27) == 1);
  CHECK(hurwitz_cover_genus(7) == 3);
  CHECK(hurwitz_cover_genus(8) == 7);
  CHECK(hurwitz_cover_genus(13) == 14);
  CHECK_THROWS(hurwitz_params(5));
  for (std::uint32_t q : {13u, 29u, 41u, 43u}) {
    CHECK(natural_quotient_genus(q) == static_cast<std::uint64_t>(quotient_genus_psl2(q)));
  }
}

TEST_CASE("Mobius function on cyclic groups") {
  SubgroupLattice c7(cyclic(7));
  auto mu = mobius_function(c7);
  REQUIRE(mu.size() == 2);
  CHECK(mu[0] == -1);
  CHECK(mu[1] == 1);
  CHECK(mobius_identity_holds(c7, mu));

  // mu(1) in C_n is the number-theoretic Mobius function of n
  for (std::size_t n : {6u, 10u, 12u, 30u}) {
    SubgroupLattice lat(cyclic(n));
    auto m = mobius_function(lat);
    const int expected = n == 6 || n == 10 ? 1 : n == 30 ? -1 : 0;
    CHECK(m[0] == expected);
  }
}

TEST_CASE("phi agrees with brute force on small groups") {
  struct Case {
    PermGroup g;
    TripleType t;
  };
  std::vector<Case> cases{{cyclic(6), {6, 6, 3}}, {cyclic(6), {6, 6, 6}}, {test::a5(), {3, 2, 5}},
                          {test::a5(), {5, 5, 5}}, {PermGroup::symmetric(4), {4, 2, 3}}, {test::psl32(), {3, 2, 7}}};
  for (const auto& c : cases) {
    SubgroupLattice lat(c.g);
    const auto cs = conjugacy_classes(c.g);
    const auto tab = mobius_table(lat, c.t);
    CHECK(tab.phi == phi_brute(cs, c.t));
    CHECK(triple_sweep(cs, c.t).first == tab.phi);
  }
}

TEST_CASE("sigma through characters equals the direct count") {
  SubgroupLattice lat(test::psl32());
  for (std::size_t k = 0; k < lat.classes().size(); ++k) {
    const auto& cls = lat.classes()[k];
    const auto h = lat.representative(k);
    for (TripleType t : {TripleType{3, 2, 7}, TripleType{2, 2, 2}, TripleType{3, 3, 3}, TripleType{4, 2, 4}}) {
      CHECK(sigma_frobenius(h, t) == sigma_brute(lat, lat.members(cls.conjugates[0]), t));
    }
  }
}

TEST_CASE("regular dessin count must be integral") {
  CHECK(regular_dessin_count(336, 336) == 1);
  CHECK_THROWS_AS(regular_dessin_count(100, 336), VerificationFailure);
}

TEST_CASE("generating pair statistics for A5") {
  auto s = generating_pair_statistics(test::a5());
  CHECK(s.generating_pairs == 2280);
  CHECK(s.orbits == 19);
}

TEST_CASE("quadratic field arithmetic") {
  const QuadElem a = QuadElem::a();
  CHECK(a * a == QuadElem{-4, -3});
  const QuadElem s{3, 2};
  CHECK(s * s == QuadElem{-7, 0});
  CHECK(a.conj() == QuadElem{-3, -1});
  CHECK((a * a.conj()) == QuadElem{a.norm(), 0});
  CHECK(a.norm() == 4);
  CHECK(s * s.inverse() == QuadElem{1, 0});
  CHECK_THROWS(QuadElem{}.inverse());

  const QuadPoly t({QuadElem{0, 0}, QuadElem{1, 0}});
  CHECK(t.pow(3).derivative() == QuadPoly({QuadElem{0, 0}, QuadElem{0, 0}, QuadElem{3, 0}}));
  CHECK((t - t).degree() == -1);
  for (const auto& c : verify_klein_tree_belyi()) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
}

TEST_CASE("dessin text and JSON round trip") {
  for (const auto& r : census_two_seven_faces().dessins) {
    CHECK(parse_dessin(format_dessin_text(r.dessin)) == r.dessin);
    CHECK(parse_dessin(dessin_to_json(r.dessin)) == r.dessin);
  }
  const auto d = fano_left();
  CHECK(parse_dessin_text("# comment\ndegree 7\nx = (1,5,2)(3,4,6)\ny = (0,4)(1,6)\n") == d);
  CHECK_THROWS_AS(parse_dessin_text("degree 7\nx = (1,5,2)(3,4,6)\ny = (0,4)(1,6)\nz = (0,1)\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_dessin_text("degree 7\nx = (1,5,2)\n"), InvalidArgument);
  CHECK_THROWS_AS(dessin_from_json("{\"degree\": 3}"), InvalidArgument);
  const auto dot = dessin_to_dot(d);
  CHECK(dot.find("graph") != std::string::npos);
}

TEST_CASE("group files round trip") {
  auto g = agl32();
  auto h = parse_group(group_to_json(g));
  CHECK(h.order() == g.order());
  auto k = parse_group("degree 7\na = (1,5,2)(3,4,6)\n(0,4)(1,6)\n");
  CHECK(k.order() == 168);
  CHECK_THROWS_AS(parse_group("degree 3\n(0,5)\n"), InvalidArgument);
}

TEST_CASE("Frobenius counts equal brute force on every class triple") {
  for (const auto& g : {test::a5(), PermGroup::symmetric(4), agl32(), PermGroup::alternating(6)}) {
    const auto cs = conjugacy_classes(g);
    const auto t = dixon_table(cs);
    const auto tally = triple_count_tally(cs);
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = 0; b < t.size(); ++b) {
        for (std::size_t c = 0; c < t.size(); ++c) CHECK(frobenius_count(t, a, b, c) == tally[a][b][c]);
      }
    }
  }
}
