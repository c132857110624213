#include "dessins/group_elements.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <tuple>

#include "dessins/errors.hpp"

namespace dessins {

namespace {
constexpr std::uint32_t kEmpty = UINT32_MAX;
}

ElementIndex::ElementIndex(const PermGroup& g, std::uint64_t cap) : degree_(g.degree()) {
  elements_ = g.elements(cap);
  std::size_t cap_slots = std::bit_ceil(std::max<std::size_t>(4, elements_.size() * 2));
  slots_.assign(cap_slots, kEmpty);
  const std::size_t mask = cap_slots - 1;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    std::size_t h = elements_[i].hash() & mask;
    while (slots_[h] != kEmpty) h = (h + 1) & mask;
    slots_[h] = static_cast<std::uint32_t>(i);
  }
}

std::optional<std::size_t> ElementIndex::find(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t h = p.hash() & mask; slots_[h] != kEmpty; h = (h + 1) & mask) {
    if (elements_[slots_[h]] == p) return slots_[h];
  }
  return std::nullopt;
}

std::size_t ElementIndex::index_of(const Permutation& p) const {
  if (auto i = find(p)) return *i;
  throw InvalidArgument("permutation " + render(p) + " is not a group element");
}

std::string class_letters(std::size_t index) {
  std::string s;
  ++index;
  while (index > 0) {
    --index;
    s.insert(s.begin(), static_cast<char>('A' + index % 26));
    index /= 26;
  }
  return s;
}

ClassStructure::ClassStructure(const PermGroup& g, const Limits& limits)
    : group_(g), elements_(g, limits.enumeration_cap) {
  const std::size_t n = elements_.size();
  element_order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    element_order_[i] = static_cast<std::uint32_t>(dessins::order(elements_[i]));
    exponent_ = std::lcm(exponent_, static_cast<std::uint64_t>(element_order_[i]));
  }

  std::vector<Permutation> gen_inverses;
  for (const auto& s : g.generators()) gen_inverses.push_back(s.inverse());

  struct Raw {
    std::vector<std::uint32_t> members;
    std::string min_render;
    std::uint32_t min_member = 0;
  };
  std::vector<Raw> raw;
  std::vector<std::int64_t> raw_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw_of[i] >= 0) continue;
    Raw r;
    r.members.push_back(static_cast<std::uint32_t>(i));
    raw_of[i] = static_cast<std::int64_t>(raw.size());
    for (std::size_t k = 0; k < r.members.size(); ++k) {
      const Permutation& e = elements_[r.members[k]];
      for (std::size_t s = 0; s < gen_inverses.size(); ++s) {
        std::size_t j = elements_.index_of(gen_inverses[s] * e * g.generators()[s]);
        if (raw_of[j] < 0) {
          raw_of[j] = static_cast<std::int64_t>(raw.size());
          r.members.push_back(static_cast<std::uint32_t>(j));
        }
      }
    }
    r.min_render = render(elements_[r.members[0]]);
    r.min_member = r.members[0];
    for (auto m : r.members) {
      std::string s = render(elements_[m]);
      if (s < r.min_render) {
        r.min_render = std::move(s);
        r.min_member = m;
      }
    }
    raw.push_back(std::move(r));
  }

  std::vector<std::size_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return std::forward_as_tuple(element_order_[raw[a].min_member], raw[a].members.size(),
                                 raw[a].min_render) <
           std::forward_as_tuple(element_order_[raw[b].min_member], raw[b].members.size(),
                                 raw[b].min_render);
  });

  class_of_.assign(n, 0);
  std::map<std::uint64_t, std::size_t> per_order;
  for (std::size_t c = 0; c < perm.size(); ++c) {
    const Raw& r = raw[perm[c]];
    ConjClass cc;
    cc.representative = elements_[r.min_member];
    cc.size = r.members.size();
    cc.element_order = element_order_[r.min_member];
    cc.label = std::to_string(cc.element_order) + class_letters(per_order[cc.element_order]++);
    cc.cycle_type = cycle_type(cc.representative);
    for (auto m : r.members) class_of_[m] = static_cast<std::uint32_t>(c);
    classes_.push_back(std::move(cc));
  }
}

std::size_t ClassStructure::class_of(const Permutation& g) const {
  return class_of_[elements_.index_of(g)];
}

std::size_t ClassStructure::power_map(std::size_t cls, long long k) const {
  return class_of(classes_.at(cls).representative.pow(k));
}

std::optional<std::size_t> ClassStructure::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].label == label) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> ClassStructure::classes_of_order(std::uint64_t ord) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].element_order == ord) out.push_back(i);
  }
  return out;
}

}  // namespace dessins
