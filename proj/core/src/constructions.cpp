#include "dessins/constructions.hpp"

#include "dessins/automorphisms.hpp"
#include "dessins/character_table.hpp"
#include "dessins/enumerate.hpp"
#include "dessins/frobenius.hpp"
#include "dessins/moebius.hpp"
#include "dessins/psl2.hpp"

namespace dessins {

std::vector<std::array<Point, 3>> fano_plane() {
  std::vector<std::array<Point, 3>> lines;
  for (Point i = 0; i < 7; ++i) lines.push_back({i, (i + 1) % 7, (i + 3) % 7});
  return lines;
}

std::pair<Dessin, Dessin> fano_tree_triples() {
  const Permutation x = parse_permutation("(1,5,2)(3,4,6)", 7);
  const Permutation y = parse_permutation("(0,4)(1,6)", 7);
  Dessin left = Dessin::from_pair(x, y);
  const Permutation xr = x.inverse(), zr = left.z().inverse();
  Dessin right = Dessin::from_triple(xr, (zr * xr).inverse(), zr);
  return {left, right};
}

Dessin psl2_27_triple() {
  const LabelSet labels = LabelSet::range(1, 28);
  const auto x = parse_labelled(
      "(1,2,4)(5,8,24)(6,21,10)(7,16,15)(9,25,28)(11,13,14)(12,27,23)(17,26,18)(19,20,22)", labels);
  const auto y = parse_labelled(
      "(1,13)(2,25)(3,27)(4,23)(5,16)(6,12)(7,26)(8,22)(9,11)(10,17)(14,18)(15,21)(19,24)(20,28)", labels);
  const auto z = parse_labelled(
      "(1,11,28,19,8,20,25)(2,9,14,26,15,6,23)(3,12,10,18,13,4,27)(5,7,17,21,16,24,22)", labels);
  return Dessin::from_triple(x, y, z);
}

PermGroup agl32() {
  // v -> vA for a 3x3 matrix A over F_2 given by its rows
  auto linear = [](std::array<unsigned, 3> rows) {
    std::vector<Point> img(8);
    for (unsigned v = 0; v < 8; ++v) {
      unsigned w = 0;
      for (unsigned i = 0; i < 3; ++i) {
        if (v >> i & 1) w ^= rows[i];
      }
      img[v] = w;
    }
    return Permutation(std::move(img));
  };
  std::vector<Point> shift(8);
  for (unsigned v = 0; v < 8; ++v) shift[v] = v ^ 1;
  return PermGroup(8, {Permutation(std::move(shift)), linear({2, 4, 1}), linear({3, 2, 4})});
}

std::uint64_t max_element_order(const ClassStructure& cs) {
  std::uint64_t m = 1;
  for (const auto& c : cs.classes()) m = std::max<std::uint64_t>(m, c.element_order);
  return m;
}

std::array<Dessin, 3> genus17_triples() {
  auto p = [](const char* s) { return parse_permutation(s, 14); };
  const auto x = p("(0,2,4)(1,3,5)(6,8,10)(7,9,11)");
  const auto z1 = p("(0,5,11,9,13,7,3)(1,4,10,8,12,6,2)");
  const auto z2 = p("(0,4,10,9,13,7,3)(1,5,11,8,12,6,2)");
  return {Dessin::from_triple(x, p("(0,1)(2,3)(4,6)(5,7)(8,12)(9,13)"), z1),
          Dessin::from_triple(x, p("(2,3)(4,6)(5,7)(8,12)(9,13)(10,11)"), z2),
          // printed with the middle map's z, which does not close up here
          Dessin::from_pair(x, p("(0,1)(4,6)(5,7)(8,12)(9,13)(10,11)"))};
}

BlockSystem genus17_blocks() {
  std::vector<std::vector<Point>> blocks;
  for (Point i = 0; i < 7; ++i) blocks.push_back({2 * i, 2 * i + 1});
  return BlockSystem::from_blocks(14, std::move(blocks));
}

bool NonsplitWitness::holds() const {
  return degree8_dessins == 1 && degree8_monodromy_order == 168 && kernel_order == 8 && kernel_elementary_abelian &&
         order_yz3 == 8 && agl32_max_order < 8;
}

NonsplitWitness nonsplit_witness() {
  NonsplitWitness w;
  auto census = enumerate({8, CycleConstraint::divides(3), CycleConstraint::divides(2), CycleConstraint::divides(7)});
  w.degree8_dessins = census.dessins.size();
  if (!census.dessins.empty()) w.degree8_monodromy_order = census.dessins.front().monodromy_order;

  const Dessin d = genus17_triples()[0];
  const PermGroup g = monodromy(d);
  const PermGroup t = block_kernel(g, genus17_blocks());
  w.kernel_order = t.order();
  w.kernel_elementary_abelian = true;
  for (const auto& a : t.generators()) {
    if (!(a * a).is_identity()) w.kernel_elementary_abelian = false;
    for (const auto& b : t.generators()) {
      if (a * b != b * a) w.kernel_elementary_abelian = false;
    }
  }
  w.order_yz3 = order(d.y() * d.z().pow(3));
  w.agl32_max_order = max_element_order(conjugacy_classes(agl32()));
  return w;
}

HurwitzParams hurwitz_params(std::uint32_t q) {
  auto sign = [q](std::uint32_t m) {
    const std::uint32_t r = q % m;
    if (r == 1) return 1;
    if (r == m - 1) return -1;
    throw InvalidArgument("q = " + std::to_string(q) + " is not +-1 mod " + std::to_string(m));
  };
  return {sign(3), sign(4), sign(7)};
}

std::int64_t quotient_genus_psl2(std::uint32_t q) {
  if (q == 7 || q == 8) return 0;
  if (q == 27) return 1;
  if (prime_power(q).first == 0) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  const auto [a, b, c] = hurwitz_params(q);
  const std::int64_t num = static_cast<std::int64_t>(q) - 28 * a - 21 * b - 36 * c;
  if (num % 84 != 0 || num < 0) throw VerificationFailure("genus formula is not a natural number");
  return num / 84;
}

BigInt hurwitz_cover_genus(std::uint32_t q) { return psl2_order(q) / 84 + 1; }

std::uint64_t natural_quotient_genus(std::uint32_t q) {
  auto triples = hurwitz_triples(FField::of_order(q), 1);
  if (triples.empty()) throw InvalidArgument("PSL_2(" + std::to_string(q) + ") has no (3,2,7) generating triple");
  return genus(triples.front());
}

MonotonicityReport monotonicity_failure_demo(std::uint32_t q, const Limits& limits) {
  const FField f = FField::of_order(q);
  auto triples = hurwitz_triples(f, 1);
  if (triples.empty()) throw InvalidArgument("PSL_2(" + std::to_string(q) + ") is not a Hurwitz group");
  const Dessin& d = triples.front();
  const PermGroup g = monodromy(d);
  MonotonicityReport r;
  r.q = q;
  const PermGroup h = find_subgroup(g, {SubgroupQuery::Kind::Sylow, f.characteristic()}, limits);
  const Dessin dq = coset_dessin(d, h, limits);
  r.n = dq.degree();
  r.g = genus(dq);
  PermGroup h2 = q % 2 == 0 ? find_subgroup(g, {SubgroupQuery::Kind::Cyclic, 7}, limits)
                            : find_subgroup(g, {SubgroupQuery::Kind::Dihedral, q - 1}, limits);
  r.other = q % 2 == 0 ? "C7" : "D" + std::to_string(q - 1);
  const Dessin dq2 = coset_dessin(d, h2, limits);
  r.n2 = dq2.degree();
  r.g2 = genus(dq2);
  return r;
}

HurwitzCount hurwitz_dessin_count(std::uint32_t q, const Limits& limits) {
  const PermGroup g = psl2_group(FField::of_order(q));
  const ClassStructure cs(g, limits);
  HurwitzCount out;
  out.automorphisms = automorphism_count(cs);
  const TripleType t{3, 2, 7};
  if (g.order() <= from_u64(limits.lattice_cap)) {
    out.phi = mobius_table(SubgroupLattice(g, limits), t).phi;
    out.method = "lattice";
  } else {
    auto [gen, all] = triple_sweep(cs, t);
    if (all != triple_count_by_type(dixon_table(cs), 3, 2, 7)) {
      throw VerificationFailure("triple sweep disagrees with the Frobenius count");
    }
    out.phi = gen;
    out.method = "sweep";
  }
  out.count = regular_dessin_count(out.phi, out.automorphisms);
  return out;
}

}  // namespace dessins
