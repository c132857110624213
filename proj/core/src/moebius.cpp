#include "dessins/moebius.hpp"

#include "dessins/character_table.hpp"
#include "dessins/automorphisms.hpp"
#include "dessins/frobenius.hpp"

namespace dessins {

BigInt sigma_brute(const SubgroupLattice& lat, const std::vector<std::size_t>& members, const TripleType& t) {
  const auto& tab = lat.table();
  std::vector<std::size_t> xs, ys;
  for (auto m : members) {
    if (tab.order(m) == t[0]) xs.push_back(m);
    if (tab.order(m) == t[1]) ys.push_back(m);
  }
  std::uint64_t count = 0;
  for (auto a : xs) {
    for (auto b : ys) {
      if (tab.order(tab.mul(a, b)) == t[2]) ++count;
    }
  }
  return from_u64(count);
}

BigInt sigma_frobenius(const PermGroup& h, const TripleType& t, const Limits& limits) {
  auto cs = conjugacy_classes(h, limits);
  return triple_count_by_type(dixon_table(cs), t[0], t[1], t[2]);
}

std::vector<long long> mobius_function(const SubgroupLattice& lat) {
  const auto& cls = lat.classes();
  std::vector<long long> mu(cls.size(), 0);
  for (std::size_t h = cls.size(); h-- > 0;) {
    if (h == lat.top()) {
      mu[h] = 1;
      continue;
    }
    long long s = 0;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      if (cls[k].order > cls[h].order) s += static_cast<long long>(lat.containing_count(h, k)) * mu[k];
    }
    mu[h] = -s;
  }
  return mu;
}

bool mobius_identity_holds(const SubgroupLattice& lat, const std::vector<long long>& mu) {
  const auto& cls = lat.classes();
  for (std::size_t h = 0; h < cls.size(); ++h) {
    long long s = 0;
    for (std::size_t k = 0; k < cls.size(); ++k) s += static_cast<long long>(lat.containing_count(h, k)) * mu[k];
    if (s != (h == lat.top() ? 1 : 0)) return false;
  }
  return true;
}

MoebiusTable mobius_table(const SubgroupLattice& lat, const TripleType& t) {
  MoebiusTable tab;
  const auto mu = mobius_function(lat);
  if (!mobius_identity_holds(lat, mu)) throw VerificationFailure("Mobius identity fails");
  tab.phi = 0;
  for (std::size_t h = 0; h < lat.classes().size(); ++h) {
    const auto& c = lat.classes()[h];
    MoebiusRow row{c.order, c.size(), mu[h], 0};
    if (mu[h] != 0) row.sigma = sigma_brute(lat, lat.members(c.conjugates[0]), t);
    tab.phi += BigInt(static_cast<long>(mu[h])) * from_u64(c.size()) * row.sigma;
    tab.rows.push_back(std::move(row));
  }
  if (tab.phi < 0) throw VerificationFailure("negative phi");
  return tab;
}

std::pair<BigInt, BigInt> triple_sweep(const ClassStructure& cs, const TripleType& t) {
  const auto& elems = cs.elements();
  const BigInt order = cs.group().order();
  BigInt gen = 0, all = 0;
  for (const auto& cls : cs.classes()) {
    if (cls.element_order != t[0]) continue;
    const BigInt size = from_u64(cls.size);
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (cs.element_order(j) != t[1]) continue;
      const Permutation& y = elems[j];
      if (dessins::order(cls.representative * y) != t[2]) continue;
      all += size;
      if (PermGroup(cs.group().degree(), {cls.representative, y}).order() == order) gen += size;
    }
  }
  return {gen, all};
}

BigInt phi_brute(const ClassStructure& cs, const TripleType& t) {
  const auto& elems = cs.elements();
  const BigInt order = cs.group().order();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (cs.element_order(i) != t[0]) continue;
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (cs.element_order(j) != t[1]) continue;
      if (dessins::order(elems[i] * elems[j]) != t[2]) continue;
      if (PermGroup(cs.group().degree(), {elems[i], elems[j]}).order() == order) ++count;
    }
  }
  return from_u64(count);
}

BigInt regular_dessin_count(const BigInt& phi, std::uint64_t automorphisms) {
  const BigInt a = from_u64(automorphisms);
  if (phi % a != 0) {
    throw VerificationFailure("phi = " + to_string(phi) + " is not divisible by |Aut(G)| = " + to_string(a));
  }
  return phi / a;
}

PairStatistics generating_pair_statistics(const PermGroup& g, const Limits& limits) {
  SubgroupLattice lat(g, limits);
  const auto& tab = lat.table();
  const std::size_t n = tab.size();

  // brute force: <a, b> = G by closure in the Cayley table
  std::uint64_t pairs = 0;
  std::vector<std::uint8_t> in(n);
  std::vector<std::size_t> queue;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::fill(in.begin(), in.end(), 0);
      queue.assign(1, 0);
      in[0] = 1;
      for (std::size_t k = 0; k < queue.size(); ++k) {
        for (std::size_t s : {a, b}) {
          const std::size_t p = tab.mul(queue[k], s);
          if (!in[p]) {
            in[p] = 1;
            queue.push_back(p);
          }
        }
      }
      if (queue.size() == n) ++pairs;
    }
  }

  // Hall: the same count by Mobius inversion of sigma(H) = |H|^2
  const auto mu = mobius_function(lat);
  BigInt hall = 0;
  for (std::size_t h = 0; h < lat.classes().size(); ++h) {
    const BigInt o = from_u64(lat.classes()[h].order);
    hall += BigInt(static_cast<long>(mu[h])) * from_u64(lat.classes()[h].size()) * o * o;
  }
  if (hall != from_u64(pairs)) throw VerificationFailure("Mobius pair count disagrees with brute force");

  PairStatistics st;
  st.generating_pairs = from_u64(pairs);
  const auto aut = automorphism_count(conjugacy_classes(g, limits));
  st.orbits = regular_dessin_count(st.generating_pairs, aut);
  for (std::size_t h = 0; h < lat.classes().size(); ++h) {
    if (h != lat.top() && lat.is_core_free(h)) ++st.faithful_representations;
  }
  st.dessins = st.orbits * from_u64(st.faithful_representations);
  return st;
}

}  // namespace dessins
