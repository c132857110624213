#include "dessins/automorphisms.hpp"

#include <algorithm>
#include <map>

#include "dessins/errors.hpp"

namespace dessins {

std::string group_signature(const ClassStructure& cs) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> parts;
  for (const auto& c : cs.classes()) parts.emplace_back(c.element_order, c.size);
  std::sort(parts.begin(), parts.end());
  std::string s = std::to_string(cs.order()) + ":";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i].first) + "x" + std::to_string(parts[i].second);
  }
  return s;
}

namespace {

// classes indistinguishable from c by element order and size
std::vector<std::size_t> look_alike(const ClassStructure& cs, std::size_t c) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < cs.classes().size(); ++k) {
    if (cs.classes()[k].element_order == cs.classes()[c].element_order &&
        cs.classes()[k].size == cs.classes()[c].size) {
      out.push_back(k);
    }
  }
  return out;
}

}  // namespace

std::optional<std::pair<Permutation, Permutation>> cheap_generating_pair(const ClassStructure& cs) {
  const auto& classes = cs.classes();
  const auto& elems = cs.elements();
  const BigInt full = from_u64(cs.order());
  if (cs.order() == 1) return std::make_pair(elems[0], elems[0]);

  // members of each class, in element order
  std::vector<std::vector<std::size_t>> members(classes.size());
  for (std::size_t i = 0; i < elems.size(); ++i) members[cs.class_of_element(i)].push_back(i);

  std::optional<std::pair<Permutation, Permutation>> best;
  std::uint64_t best_cost = UINT64_MAX;
  constexpr std::size_t kTries = 24;
  for (std::size_t ca = 0; ca < classes.size(); ++ca) {
    const std::uint64_t a_alike = look_alike(cs, ca).size();
    for (std::size_t cb = 0; cb < classes.size(); ++cb) {
      std::uint64_t b_pool = 0;
      for (auto k : look_alike(cs, cb)) b_pool += classes[k].size;
      std::uint64_t cost = a_alike * b_pool;
      if (cost >= best_cost) continue;
      const Permutation& a = classes[ca].representative;
      for (std::size_t t = 0; t < members[cb].size() && t < kTries; ++t) {
        const Permutation& b = elems[members[cb][t]];
        if (PermGroup(elems.degree(), {a, b}).order() == full) {
          best = std::make_pair(a, b);
          best_cost = cost;
          break;
        }
      }
    }
  }
  return best;
}

bool extends_to_automorphism(const ClassStructure& cs, const Permutation& a, const Permutation& b,
                             const Permutation& a2, const Permutation& b2) {
  const auto& elems = cs.elements();
  const std::size_t n = elems.size();
  constexpr std::uint32_t unset = UINT32_MAX;
  std::vector<std::uint32_t> img(n, unset);
  std::vector<bool> used(n, false);
  std::vector<std::uint32_t> queue{0};
  img[0] = 0;
  used[0] = true;
  const std::pair<const Permutation*, const Permutation*> steps[] = {{&a, &a2}, {&b, &b2}};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    std::uint32_t u = queue[k];
    for (const auto& [src, dst] : steps) {
      auto v = static_cast<std::uint32_t>(elems.index_of(elems[u] * *src));
      auto w = static_cast<std::uint32_t>(elems.index_of(elems[img[u]] * *dst));
      if (img[v] == unset) {
        if (used[w]) return false;
        img[v] = w;
        used[w] = true;
        queue.push_back(v);
      } else if (img[v] != w) {
        return false;
      }
    }
  }
  return queue.size() == n;
}

std::uint64_t automorphism_count(const ClassStructure& cs,
                                 std::span<const AutomorphismOverride> overrides) {
  if (!overrides.empty()) {
    const std::string sig = group_signature(cs);
    for (const auto& o : overrides) {
      if (o.signature == sig) return o.value;
    }
  }
  auto pair = cheap_generating_pair(cs);
  if (!pair) throw CapExceeded("no generating pair found for the automorphism search");
  const auto& [a, b] = *pair;
  const auto& elems = cs.elements();
  const std::size_t ca = cs.class_of(a);
  const std::size_t cb = cs.class_of(b);
  const std::uint64_t ab_order = order(a * b);

  std::vector<std::size_t> b_classes = look_alike(cs, cb);
  std::uint64_t total = 0;
  for (std::size_t r : look_alike(cs, ca)) {
    const Permutation& a2 = cs.classes()[r].representative;
    std::uint64_t hits = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (std::find(b_classes.begin(), b_classes.end(), cs.class_of_element(i)) == b_classes.end()) continue;
      const Permutation& b2 = elems[i];
      if (order(a2 * b2) != ab_order) continue;
      if (extends_to_automorphism(cs, a, b, a2, b2)) ++hits;
    }
    total += hits * cs.classes()[r].size;
  }
  return total;
}

}  // namespace dessins
