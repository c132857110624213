#include "dessins/acceptance_checks.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "dessins/automorphisms.hpp"
#include "dessins/belyi.hpp"
#include "dessins/character_table.hpp"
#include "dessins/constructions.hpp"
#include "dessins/enumerate.hpp"
#include "dessins/frobenius.hpp"
#include "dessins/moebius.hpp"
#include "dessins/psl2.hpp"
#include "dessins/symmetric_characters.hpp"

namespace dessins {

namespace {

// Collects failed expectations; the outcome passes iff none failed.
class Ledger {
 public:
  template <typename A, typename B>
  void eq(const std::string& what, const A& got, const B& want) {
    std::ostringstream s;
    s << what << " = " << got;
    if (!(got == want)) {
      s << " (want " << want << ")";
      ok_ = false;
    }
    add(s.str());
  }
  void that(const std::string& what, bool cond) {
    if (!cond) ok_ = false;
    add(what + (cond ? "" : " FAILED"));
  }
  CheckOutcome done() const { return {ok_, text_}; }

 private:
  void add(const std::string& s) { text_ += (text_.empty() ? "" : "; ") + s; }
  bool ok_ = true;
  std::string text_;
};

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x.get_str();
  return s;
}

PermGroup psl32() {
  return PermGroup(7, {parse_permutation("(1,5,2)(3,4,6)", 7), parse_permutation("(0,4)(1,6)", 7)});
}

CheckOutcome check_chartab(const CheckSettings& s) {
  Ledger l;
  auto cs = conjugacy_classes(psl32());
  auto t = dixon_table(cs, s.seed);
  std::vector<std::uint64_t> degrees = t.degrees, sizes;
  for (const auto& c : t.classes) sizes.push_back(c.size);
  std::sort(sizes.begin(), sizes.end());
  l.that("degrees 1,3,3,6,7,8", degrees == std::vector<std::uint64_t>{1, 3, 3, 6, 7, 8});
  l.eq("classes", t.classes.size(), 6u);
  l.that("class sizes 1,21,24,24,42,56", sizes == std::vector<std::uint64_t>{1, 21, 24, 24, 42, 56});
  // (-1 + sqrt(-7))/2 = E(7)+E(7)^2+E(7)^4, its conjugate E(7)^3+E(7)^5+E(7)^6
  const Cyclotomic b7 = Cyclotomic::zeta(7, 1) + Cyclotomic::zeta(7, 2) + Cyclotomic::zeta(7, 4);
  const auto sevens = cs.classes_of_order(7);
  bool pair = sevens.size() == 2;
  int rows = 0;
  for (std::size_t i = 0; pair && i < t.size(); ++i) {
    const auto& u = t.rows[i][sevens[0]];
    const auto& v = t.rows[i][sevens[1]];
    if ((u == b7 && v == b7.conj()) || (u == b7.conj() && v == b7)) ++rows;
    else if (!u.is_rational() || u != v) pair = false;
  }
  l.that("order-7 values (-1+-sqrt(-7))/2 on two degree-3 rows", pair && rows == 2);
  l.that("orthogonality", rows_orthonormal(t) && columns_orthogonal(t));
  return l.done();
}

CheckOutcome check_frobenius(const CheckSettings& s) {
  Ledger l;
  auto cs = conjugacy_classes(psl32());
  auto t = dixon_table(cs, s.seed);
  const auto c3 = cs.classes_of_order(3), c2 = cs.classes_of_order(2), c7 = cs.classes_of_order(7);
  l.eq("(3A,2A,7A)", frobenius_count(t, c3[0], c2[0], c7[0]), 168);
  l.eq("(3A,2A,7B)", frobenius_count(t, c3[0], c2[0], c7[1]), 168);
  l.eq("type (3,2,7) total", triple_count_by_type(t, 3, 2, 7), 336);
  l.that("brute force agrees", brute_force_triple_count(cs, c3[0], c2[0], c7[0]) == 168 &&
                                   brute_force_triple_count(cs, c3[0], c2[0], c7[1]) == 168);
  return l.done();
}

CheckOutcome check_passport_count(const CheckSettings& s) {
  Ledger l;
  const Partition lam{6, 3, 2, 1}, inv{2, 2, 2, 2, 2, 2};
  const Rational total = weighted_passport_count(12, lam, inv, lam);
  l.eq("weighted count", total, Rational(39, 2));
  const CycleType t(lam), y(inv);
  auto census = enumerate({12, CycleConstraint::exact(t), CycleConstraint::exact(y), CycleConstraint::exact(t), s.workers});
  l.eq("connected maps", census.dessins.size(), 18u);
  l.that("each of weight 1", std::all_of(census.dessins.begin(), census.dessins.end(),
                                         [](const DessinReport& r) { return r.automorphisms == 1; }));
  Rational rest = 0;
  bool half = false;
  auto cfgs = disconnected_configurations(t, y, t, s.workers);
  for (const auto& c : cfgs) {
    rest += c.weight;
    half = half || c.weight == Rational(1, 2);
  }
  l.eq("disconnected configurations", cfgs.size(), 2u);
  l.eq("disconnected weight", rest, Rational(3, 2));
  l.that("one configuration of weight 1/2", half);
  l.that("18 + 3/2 = 39/2", census.weighted_count() + rest == total);
  return l.done();
}

CheckOutcome check_a5(const CheckSettings&) {
  Ledger l;
  auto st = generating_pair_statistics(PermGroup::alternating(5));
  l.eq("generating pairs", st.generating_pairs, 2280);
  l.eq("orbits", st.orbits, 19);
  l.eq("faithful transitive representations", st.faithful_representations, 8u);
  l.eq("dessins", st.dessins, 152);
  return l.done();
}

CheckOutcome check_mobius(const CheckSettings&) {
  Ledger l;
  const PermGroup g = psl32();
  SubgroupLattice lat(g);
  auto mu = mobius_function(lat);
  l.that("sum of mu over overgroups is delta at every class", mobius_identity_holds(lat, mu));
  auto tab = mobius_table(lat, {3, 2, 7});
  auto cs = conjugacy_classes(g);
  l.eq("phi by inversion", tab.phi, 336);
  l.eq("phi by brute force", phi_brute(cs, {3, 2, 7}), 336);
  l.eq("regular dessins", regular_dessin_count(tab.phi, automorphism_count(cs)), 1);
  return l.done();
}

CheckOutcome check_one_face(const CheckSettings& s) {
  Ledger l;
  auto r = count_one_seven_face(s.workers);
  std::vector<std::size_t> degrees;
  std::vector<BigInt> orders;
  for (const auto& d : r.dessins) {
    degrees.push_back(d.dessin.degree());
    orders.push_back(d.monodromy_order);
  }
  l.eq("maps", r.dessins.size(), 4u);
  l.that("degrees 7,7,8,9", degrees == std::vector<std::size_t>{7, 7, 8, 9});
  std::sort(orders.begin(), orders.end());
  l.eq("monodromy orders", join(orders), "168,168,168,504");
  return l.done();
}

CheckOutcome check_two_faces(const CheckSettings& s) {
  Ledger l;
  auto r = census_two_seven_faces(s.workers);
  std::vector<BigInt> o14;
  std::size_t n15 = 0, later = 0;
  bool passport15 = true, order15 = true;
  const Passport want{CycleType({3, 3, 3, 3, 3}), CycleType({2, 2, 2, 2, 2, 2, 1, 1, 1}), CycleType({7, 7, 1})};
  const BigInt half15 = factorial(15) / 2;
  for (const auto& d : r.dessins) {
    const auto n = d.dessin.degree();
    if (n == 14) o14.push_back(d.monodromy_order);
    if (n == 15) {
      ++n15;
      passport15 = passport15 && d.passport == want;
      order15 = order15 && d.monodromy_order == half15;
    }
    if (n > 15) ++later;
  }
  std::sort(o14.begin(), o14.end());
  l.eq("maps", r.dessins.size(), 12u);
  l.eq("degree 14 orders", join(o14), "168,168,1092,1092,1092,1344,1344,1344,1344");
  l.eq("degree 15", n15, 3u);
  l.that("degree 15 passport (3^5, 2^6 1^3, 7^2 1^1)", passport15);
  l.that("degree 15 monodromy order 15!/2", order15);
  l.eq("degrees 16-20", later, 0u);
  return l.done();
}

CheckOutcome check_hurwitz_counts(const CheckSettings&) {
  Ledger l;
  for (auto [q, want] : {std::pair{7u, 1}, {13u, 3}, {8u, 1}, {29u, 3}, {27u, 1}}) {
    auto c = hurwitz_dessin_count(q);
    l.eq("q=" + std::to_string(q) + " (" + c.method + ")", c.count, want);
  }
  return l.done();
}

CheckOutcome check_genus17(const CheckSettings&) {
  Ledger l;
  auto w = nonsplit_witness();
  l.eq("degree-8 (3,2,7) dessins", w.degree8_dessins, 1u);
  l.eq("their monodromy order", w.degree8_monodromy_order, 168);
  auto maps = genus17_triples();
  l.eq("monodromy orders", join({monodromy(maps[0]).order(), monodromy(maps[1]).order(), monodromy(maps[2]).order()}),
       "1344,1344,168");
  l.eq("block kernel order", w.kernel_order, 8);
  l.that("block kernel has exponent 2", w.kernel_elementary_abelian);
  l.eq("order of yz^3", w.order_yz3, 8u);
  l.eq("largest element order in AGL(3,2)", w.agl32_max_order, 7u);
  return l.done();
}

CheckOutcome check_psl2_27(const CheckSettings&) {
  Ledger l;
  const Dessin d = psl2_27_triple();  // from_triple validates xyz = 1 and transitivity
  l.eq("passport", passport(d).str(), "(3^9 1^1, 2^14, 7^4)");
  l.eq("genus", genus(d), 1u);
  l.that("transitive", monodromy(d).is_transitive());
  l.eq("monodromy order", monodromy(d).order(), 9828);
  l.eq("cover genus", cover_genus(d), 118);
  return l.done();
}

CheckOutcome check_genus_table(const CheckSettings&) {
  Ledger l;
  for (auto [q, want] : {std::pair{13u, 0}, {29u, 0}, {43u, 0}, {41u, 1}, {71u, 1}, {97u, 1}, {83u, 2}}) {
    l.eq("q=" + std::to_string(q), quotient_genus_psl2(q), want);
  }
  for (auto q : {13u, 29u, 41u, 43u}) {
    l.eq("constructed q=" + std::to_string(q), natural_quotient_genus(q),
         static_cast<std::uint64_t>(quotient_genus_psl2(q)));
  }
  return l.done();
}

CheckOutcome check_monotonicity(const CheckSettings&) {
  Ledger l;
  auto r13 = monotonicity_failure_demo(13);
  l.eq("q=13 Sylow quotient (n,g)", std::to_string(r13.n) + "," + std::to_string(r13.g), "84,2");
  l.eq("q=13 " + r13.other + " quotient (n,g)", std::to_string(r13.n2) + "," + std::to_string(r13.g2), "91,0");
  auto r8 = monotonicity_failure_demo(8);
  l.eq("q=8 g", r8.g, 0u);
  l.eq("q=8 g' (" + r8.other + ")", r8.g2, 1u);
  auto r27 = monotonicity_failure_demo(27);
  l.eq("q=27 g", r27.g, 1u);
  l.eq("q=27 g' (" + r27.other + ")", r27.g2, 2u);
  return l.done();
}

CheckOutcome check_belyi(const CheckSettings&) {
  Ledger l;
  for (const auto& c : verify_klein_tree_belyi()) l.that(c.name + " [" + c.detail + "]", c.passed);
  return l.done();
}

CheckOutcome check_cover_genera(const CheckSettings& s) {
  Ledger l;
  auto a15 = census_seven_faces(2, 15, 15, s.workers);
  l.that("degree-15 map found", !a15.dessins.empty());
  if (!a15.dessins.empty()) l.eq("A15", cover_genus(a15.dessins.front().dessin), BigInt("7783776001"));
  auto nine = census_seven_faces(1, 9, 9, s.workers);
  l.that("degree-9 map found", nine.dessins.size() == 1);
  if (!nine.dessins.empty()) l.eq("PSL2(8)", cover_genus(nine.dessins.front().dessin), 7);
  l.eq("PSL3(2)", cover_genus(fano_tree_triples().first), 3);
  return l.done();
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all = {
      {1, "PSL(3,2) character table", 1, check_chartab},
      {2, "Frobenius counts in PSL(3,2)", 1, check_frobenius},
      {3, "weighted passport count 39/2 = 18 + 3/2", 300, check_passport_count},
      {4, "A5 generating pairs 2280 -> 19 x 8 = 152", 10, check_a5},
      {5, "Mobius inversion for PSL(3,2), type (3,2,7)", 30, check_mobius},
      {6, "census of (3,2,7) maps with one 7-face", 120, check_one_face},
      {7, "census of (3,2,7) maps with two 7-faces", 1800, check_two_faces},
      {8, "regular Hurwitz dessins for PSL(2,q)", 600, check_hurwitz_counts},
      {9, "genus-17 non-split extension chain", 60, check_genus17},
      {10, "PSL(2,27) map of genus 1", 10, check_psl2_27},
      {11, "genus of the natural PSL(2,q) quotient", 120, check_genus_table},
      {12, "failure of genus monotonicity", 300, check_monotonicity},
      {13, "Belyi polynomial identities over Q(sqrt(-7))", 1, check_belyi},
      {14, "regular cover genera without construction", 1, check_cover_genera},
  };
  return all;
}

CriterionResult run_criterion(const Criterion& c, const CheckSettings& s) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckOutcome out;
  try {
    out = c.run(s);
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > c.budget_seconds) {
    out.passed = false;
    out.detail += "; exceeded the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
  }
  return {c.id, c.title, out.passed, secs, out.detail};
}

}  // namespace dessins
