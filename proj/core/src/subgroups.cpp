#include "dessins/subgroups.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "dessins/errors.hpp"

namespace dessins {

namespace {

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : s) h = (h ^ w) * 1099511628211ULL;
    return h;
  }
};

bool test_bit(const ElementSet& s, std::size_t i) { return (s[i >> 6] >> (i & 63)) & 1ULL; }
void set_bit(ElementSet& s, std::size_t i) { s[i >> 6] |= 1ULL << (i & 63); }

bool is_subset(const ElementSet& a, const ElementSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

std::size_t popcount(const ElementSet& s) {
  std::size_t c = 0;
  for (auto w : s) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

}  // namespace

CayleyTable::CayleyTable(const ElementIndex& elements) : n_(elements.size()) {
  if (n_ > 65535) throw CapExceeded("Cayley table limited to 65535 elements");
  table_.resize(n_ * n_);
  inverse_.resize(n_);
  order_.resize(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      auto c = static_cast<std::uint16_t>(elements.index_of(elements[a] * elements[b]));
      table_[a * n_ + b] = c;
      if (c == 0) inverse_[a] = static_cast<std::uint16_t>(b);
    }
    order_[a] = static_cast<std::uint32_t>(dessins::order(elements[a]));
  }
}

SubgroupLattice::SubgroupLattice(const PermGroup& g, const Limits& limits)
    : group_(g),
      elements_([&] {
        if (g.order() > from_u64(limits.lattice_cap)) {
          throw CapExceeded("group of order " + to_string(g.order()) +
                            " exceeds the subgroup-lattice cap " + std::to_string(limits.lattice_cap));
        }
        return ElementIndex(g, limits.enumeration_cap);
      }()),
      table_(elements_) {
  const std::size_t n = elements_.size();
  const std::size_t words = (n + 63) / 64;

  std::vector<std::uint16_t> g_gens;
  for (const auto& s : g.generators()) g_gens.push_back(static_cast<std::uint16_t>(elements_.index_of(s)));

  // distinct cyclic subgroups, each with a generator
  std::vector<std::pair<std::uint16_t, ElementSet>> cyclics;
  {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (std::size_t e = 1; e < n; ++e) {
      ElementSet s(words, 0);
      std::size_t x = 0;
      do {
        set_bit(s, x);
        x = table_.mul(x, e);
      } while (x != 0);
      if (seen.insert(s).second) cyclics.emplace_back(static_cast<std::uint16_t>(e), std::move(s));
    }
  }

  std::unordered_set<ElementSet, ElementSetHash> known;
  auto conjugate_set = [&](const ElementSet& s, std::size_t by) {
    ElementSet out(words, 0);
    std::size_t inv = table_.inverse(by);
    for (std::size_t x = 0; x < n; ++x) {
      if (test_bit(s, x)) set_bit(out, table_.mul(table_.mul(inv, x), by));
    }
    return out;
  };
  auto add_class = [&](ElementSet rep, std::vector<std::uint16_t> gens) {
    SubgroupClass c;
    c.order = popcount(rep);
    c.generators = std::move(gens);
    c.conjugates.push_back(rep);
    known.insert(std::move(rep));
    for (std::size_t k = 0; k < c.conjugates.size(); ++k) {
      for (auto s : g_gens) {
        ElementSet t = conjugate_set(c.conjugates[k], s);
        if (known.insert(t).second) c.conjugates.push_back(std::move(t));
      }
    }
    classes_.push_back(std::move(c));
  };

  ElementSet trivial(words, 0);
  set_bit(trivial, 0);
  add_class(trivial, {});
  for (std::size_t ci = 0; ci < classes_.size(); ++ci) {
    for (const auto& [z, zset] : cyclics) {
      if (is_subset(zset, classes_[ci].conjugates[0])) continue;
      std::vector<std::uint16_t> gens = classes_[ci].generators;
      gens.push_back(z);
      ElementSet k = closure(gens);
      if (known.count(k)) continue;
      add_class(std::move(k), std::move(gens));
    }
  }

  std::stable_sort(classes_.begin(), classes_.end(),
                   [](const SubgroupClass& a, const SubgroupClass& b) { return a.order < b.order; });
  if (classes_.back().order != n) throw VerificationFailure("lattice top is not the whole group");

  const std::size_t r = classes_.size();
  containing_.assign(r, std::vector<std::size_t>(r, 0));
  for (std::size_t h = 0; h < r; ++h) {
    for (std::size_t k = 0; k < r; ++k) {
      if (classes_[k].order % classes_[h].order != 0) continue;
      for (const auto& K : classes_[k].conjugates) {
        if (is_subset(classes_[h].conjugates[0], K)) ++containing_[h][k];
      }
    }
  }
}

ElementSet SubgroupLattice::closure(const std::vector<std::uint16_t>& gens) const {
  const std::size_t n = elements_.size();
  ElementSet s((n + 63) / 64, 0);
  std::vector<std::uint16_t> list{0};
  set_bit(s, 0);
  for (std::size_t k = 0; k < list.size(); ++k) {
    for (auto g : gens) {
      std::uint16_t v = table_.mul(list[k], g);
      if (!test_bit(s, v)) {
        set_bit(s, v);
        list.push_back(v);
      }
    }
  }
  return s;
}

std::size_t SubgroupLattice::total_subgroups() const {
  std::size_t t = 0;
  for (const auto& c : classes_) t += c.size();
  return t;
}

std::vector<std::size_t> SubgroupLattice::members(const ElementSet& s) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (test_bit(s, i)) out.push_back(i);
  }
  return out;
}

std::vector<Permutation> SubgroupLattice::representative_elements(std::size_t cls) const {
  std::vector<Permutation> out;
  for (auto i : members(classes_.at(cls).conjugates[0])) out.push_back(elements_[i]);
  return out;
}

PermGroup SubgroupLattice::representative(std::size_t cls) const {
  std::vector<Permutation> gens;
  for (auto i : classes_.at(cls).generators) gens.push_back(elements_[i]);
  return PermGroup(elements_.degree(), std::move(gens));
}

bool SubgroupLattice::is_core_free(std::size_t cls) const {
  ElementSet meet = classes_.at(cls).conjugates[0];
  for (const auto& c : classes_[cls].conjugates) {
    for (std::size_t w = 0; w < meet.size(); ++w) meet[w] &= c[w];
  }
  return popcount(meet) == 1;
}

std::vector<std::size_t> SubgroupLattice::classes_of_index(std::uint64_t idx) const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (index(c) == idx) out.push_back(c);
  }
  return out;
}

std::vector<std::size_t> SubgroupLattice::maximal_classes() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k + 1 < classes_.size(); ++k) {
    bool maximal = true;
    for (std::size_t m = 0; m + 1 < classes_.size() && maximal; ++m) {
      if (classes_[m].order > classes_[k].order && containing_[k][m] > 0) maximal = false;
    }
    if (maximal) out.push_back(k);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> SubgroupLattice::maximal_inclusions() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t h = 0; h < classes_.size(); ++h) {
    const ElementSet& H = classes_[h].conjugates[0];
    for (std::size_t k = h + 1; k < classes_.size(); ++k) {
      if (classes_[k].order <= classes_[h].order || containing_[h][k] == 0) continue;
      bool covered = false;
      for (const auto& K : classes_[k].conjugates) {
        if (!is_subset(H, K)) continue;
        bool between = false;
        for (std::size_t m = 0; m < classes_.size() && !between; ++m) {
          if (classes_[m].order <= classes_[h].order || classes_[m].order >= classes_[k].order) continue;
          if (classes_[k].order % classes_[m].order != 0) continue;
          for (const auto& M : classes_[m].conjugates) {
            if (is_subset(H, M) && is_subset(M, K)) {
              between = true;
              break;
            }
          }
        }
        if (!between) {
          covered = true;
          break;
        }
      }
      if (covered) out.emplace_back(h, k);
    }
  }
  return out;
}

std::size_t count_faithful_quotients(const SubgroupLattice& lattice, std::uint64_t n) {
  std::size_t count = 0;
  for (auto c : lattice.classes_of_index(n)) {
    if (lattice.is_core_free(c)) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------

namespace {

bool is_power_of(std::uint64_t v, std::uint64_t p) {
  while (v > 1 && v % p == 0) v /= p;
  return v == 1;
}

}  // namespace

PermGroup find_subgroup(const PermGroup& g, const SubgroupQuery& q, const Limits& limits) {
  using Kind = SubgroupQuery::Kind;
  const std::size_t n = g.degree();
  if (q.kind == Kind::Order) {
    SubgroupLattice lat(g, limits);
    for (std::size_t c = 0; c < lat.classes().size(); ++c) {
      if (lat.classes()[c].order == q.value) return lat.representative(c);
    }
    throw InvalidArgument("no subgroup of order " + std::to_string(q.value));
  }

  ElementIndex elems(g, limits.enumeration_cap);
  std::vector<std::uint64_t> orders(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) orders[i] = order(elems[i]);

  if (q.kind == Kind::Cyclic) {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (orders[i] == q.value) return PermGroup(n, {elems[i]});
    }
    throw InvalidArgument("no cyclic subgroup of order " + std::to_string(q.value));
  }

  if (q.kind == Kind::Dihedral) {
    if (q.value < 4 || q.value % 2 != 0) throw InvalidArgument("dihedral order must be even and >= 4");
    const std::uint64_t half = q.value / 2;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (orders[i] != half) continue;
      const Permutation& r = elems[i];
      const Permutation r_inv = r.inverse();
      PermGroup cyc(n, {r});
      for (std::size_t j = 0; j < elems.size(); ++j) {
        if (orders[j] != 2) continue;
        const Permutation& s = elems[j];
        if (s * r * s != r_inv || cyc.contains(s)) continue;
        PermGroup d(n, {r, s});
        if (d.order() == static_cast<unsigned long>(q.value)) return d;
      }
    }
    throw InvalidArgument("no dihedral subgroup of order " + std::to_string(q.value));
  }

  // Sylow: grow a p-subgroup by p-elements of its normaliser.
  const std::uint64_t p = q.value;
  BigInt target = 1;
  {
    BigInt rest = g.order();
    while (rest % static_cast<unsigned long>(p) == 0) {
      rest /= static_cast<unsigned long>(p);
      target *= static_cast<unsigned long>(p);
    }
  }
  std::vector<Permutation> gens;
  PermGroup cur = PermGroup::trivial(n);
  while (cur.order() < target) {
    bool grown = false;
    for (std::size_t i = 0; i < elems.size() && !grown; ++i) {
      if (orders[i] == 1 || !is_power_of(orders[i], p) || cur.contains(elems[i])) continue;
      const Permutation& e = elems[i];
      bool normalises = std::all_of(gens.begin(), gens.end(), [&](const Permutation& s) {
        return cur.contains(conjugate(s, e));
      });
      if (!normalises) continue;
      gens.push_back(e);
      cur = PermGroup(n, gens);
      grown = true;
    }
    if (!grown) throw VerificationFailure("Sylow growth stalled");
  }
  return cur;
}

}  // namespace dessins
