#include "dessins/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <numeric>

#include "dessins/errors.hpp"

namespace dessins {

namespace {

// u * x * v^-1 without intermediate allocations
Permutation schreier_generator(const Permutation& u, const Permutation& x,
                               const Permutation& v_inv) {
  std::vector<Point> im(u.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = v_inv[x[u[i]]];
  return Permutation(std::move(im));
}

void check_degree(const Permutation& p, std::size_t degree) {
  if (p.degree() != degree) {
    throw InvalidArgument("generator of degree " + std::to_string(p.degree()) +
                          " in a group of degree " + std::to_string(degree));
  }
}

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                                 std::span<const Point> base_prefix)
    : degree_(degree) {
  build(generators, base_prefix);
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.base_point);
  return b;
}

BigInt StabilizerChain::order() const {
  BigInt n = 1;
  for (const auto& l : levels_) n *= static_cast<unsigned long>(l.orbit.size());
  return n;
}

void StabilizerChain::rebuild_orbit(ChainLevel& level) const {
  level.orbit.assign(1, level.base_point);
  level.orbit_slot.assign(degree_, -1);
  level.orbit_slot[level.base_point] = 0;
  level.reps.assign(1, Permutation::identity(degree_));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point d = level.orbit[k];
    for (const auto& s : level.generators) {
      Point e = s[d];
      if (level.orbit_slot[e] >= 0) continue;
      level.orbit_slot[e] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(e);
      level.reps.push_back(level.reps[k] * s);
    }
  }
}

Point StabilizerChain::choose_base_point(const Permutation& moved_by) const {
  // first point of a longest cycle
  Point best = 0;
  std::size_t best_len = 0;
  for (const auto& c : cycles(moved_by)) {
    if (c.size() > best_len) {
      best_len = c.size();
      best = c.front();
    }
  }
  return best;
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation g,
                                                           std::size_t from) const {
  for (std::size_t j = from; j < levels_.size(); ++j) {
    const auto& l = levels_[j];
    std::int32_t slot = l.orbit_slot[g[l.base_point]];
    if (slot < 0) return {std::move(g), j};
    g = g * l.reps[static_cast<std::size_t>(slot)].inverse();
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [h, j] = strip(g);
  return j == levels_.size() && h.is_identity();
}

void StabilizerChain::build(std::span<const Permutation> generators,
                            std::span<const Point> base_prefix) {
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    check_degree(g, degree_);
    if (!g.is_identity()) gens.push_back(g);
  }
  for (Point p : base_prefix) {
    if (p >= degree_) throw InvalidArgument("base point out of range");
    levels_.push_back(ChainLevel{p, {}, {}, {}, {}});
  }
  if (levels_.empty() && !gens.empty()) {
    // greedy start: least point of a largest orbit
    std::vector<bool> seen(degree_, false);
    std::size_t best_len = 0;
    Point best = 0;
    for (Point p = 0; p < degree_; ++p) {
      if (seen[p]) continue;
      std::vector<Point> orb{p};
      seen[p] = true;
      for (std::size_t k = 0; k < orb.size(); ++k) {
        for (const auto& s : gens) {
          if (!seen[s[orb[k]]]) {
            seen[s[orb[k]]] = true;
            orb.push_back(s[orb[k]]);
          }
        }
      }
      if (orb.size() > best_len) {
        best_len = orb.size();
        best = p;
      }
    }
    levels_.push_back(ChainLevel{best, {}, {}, {}, {}});
  }
  for (const auto& s : gens) {
    bool fixes_base = std::all_of(levels_.begin(), levels_.end(),
                                  [&](const ChainLevel& l) { return s[l.base_point] == l.base_point; });
    if (fixes_base) levels_.push_back(ChainLevel{choose_base_point(s), {}, {}, {}, {}});
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& s : gens) {
      bool fixes = true;
      for (std::size_t k = 0; k < i && fixes; ++k) {
        fixes = s[levels_[k].base_point] == levels_[k].base_point;
      }
      if (fixes) levels_[i].generators.push_back(s);
    }
    rebuild_orbit(levels_[i]);
  }

  // Deterministic Schreier-Sims: test every Schreier generator at level i;
  // on failure extend the chain and restart from the level reached.
  auto check_level = [&](std::size_t i) -> std::optional<std::size_t> {
    const std::size_t orbit_size = levels_[i].orbit.size();
    for (std::size_t oi = 0; oi < orbit_size; ++oi) {
      for (std::size_t gi = 0; gi < levels_[i].generators.size(); ++gi) {
        const auto& l = levels_[i];
        const Permutation& x = l.generators[gi];
        Point image = x[l.orbit[oi]];
        const Permutation& v = l.reps[static_cast<std::size_t>(l.orbit_slot[image])];
        Permutation g = schreier_generator(l.reps[oi], x, v.inverse());
        if (g.is_identity()) continue;
        auto [h, j] = strip(std::move(g), i + 1);
        if (j == levels_.size() && h.is_identity()) continue;
        if (j == levels_.size()) levels_.push_back(ChainLevel{choose_base_point(h), {}, {}, {}, {}});
        for (std::size_t k = i + 1; k <= j; ++k) {
          levels_[k].generators.push_back(h);
          rebuild_orbit(levels_[k]);
        }
        return j;
      }
    }
    return std::nullopt;
  };

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    if (auto j = check_level(static_cast<std::size_t>(i))) {
      i = static_cast<std::ptrdiff_t>(*j);
    } else {
      --i;
    }
  }
}

// ---------------------------------------------------------------------------

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : PermGroup(degree, std::move(generators), {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<Point> base_prefix)
    : degree_(degree),
      generators_(std::move(generators)),
      base_prefix_(std::move(base_prefix)),
      lazy_(std::make_shared<Lazy>()) {
  for (const auto& g : generators_) check_degree(g, degree_);
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::symmetric(std::size_t degree) {
  if (degree < 2) return trivial(degree);
  std::vector<Point> all(degree);
  std::iota(all.begin(), all.end(), Point{0});
  return PermGroup(degree, {Permutation::from_cycles(degree, {all}),
                            Permutation::from_cycles(degree, {{0, 1}})});
}

PermGroup PermGroup::alternating(std::size_t degree) {
  if (degree < 3) return trivial(degree);
  std::vector<Point> rest(degree % 2 == 1 ? degree : degree - 1);
  std::iota(rest.begin(), rest.end(), Point{degree % 2 == 1 ? 0u : 1u});
  return PermGroup(degree, {Permutation::from_cycles(degree, {{0, 1, 2}}),
                            Permutation::from_cycles(degree, {rest})});
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(lazy_->once, [this] {
    lazy_->chain = std::make_unique<StabilizerChain>(degree_, generators_, base_prefix_);
  });
  return *lazy_->chain;
}

BigInt PermGroup::order() const { return chain().order(); }

std::uint64_t PermGroup::order_u64() const { return to_u64(order()); }

bool PermGroup::contains(const Permutation& g) const { return chain().contains(g); }

std::vector<Point> PermGroup::orbit(Point p) const {
  std::vector<bool> seen(degree_, false);
  std::vector<Point> orb{p};
  seen[p] = true;
  for (std::size_t k = 0; k < orb.size(); ++k) {
    for (const auto& s : generators_) {
      Point q = s[orb[k]];
      if (!seen[q]) {
        seen[q] = true;
        orb.push_back(q);
      }
    }
  }
  return orb;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::vector<Point>> out;
  for (Point p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto orb = orbit(p);
    for (Point q : orb) seen[q] = true;
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const {
  return degree_ <= 1 || orbit(0).size() == degree_;
}

PermGroup PermGroup::stabilizer(Point p) const {
  StabilizerChain c(degree_, generators_, std::vector<Point>{p});
  std::vector<Permutation> gens;
  if (c.levels().size() > 1) gens = c.levels()[1].generators;
  return PermGroup(degree_, std::move(gens));
}

void PermGroup::for_each_element(const std::function<void(const Permutation&)>& visit,
                                 std::uint64_t cap) const {
  const auto& c = chain();
  if (c.order() > from_u64(cap)) {
    throw CapExceeded("group of order " + to_string(c.order()) +
                      " exceeds the enumeration cap " + std::to_string(cap));
  }
  const auto& levels = c.levels();
  // element = t_{k-1} ... t_1 t_0 with t_i drawn from level i
  auto rec = [&](auto&& self, std::ptrdiff_t level, const Permutation& acc) -> void {
    if (level < 0) {
      visit(acc);
      return;
    }
    for (const auto& t : levels[static_cast<std::size_t>(level)].reps) self(self, level - 1, acc * t);
  };
  rec(rec, static_cast<std::ptrdiff_t>(levels.size()) - 1, Permutation::identity(degree_));
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  std::vector<Permutation> out;
  for_each_element([&](const Permutation& g) { out.push_back(g); }, cap);
  return out;
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (g.degree() != degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& h) { return g.contains(h); });
}

bool PermGroup::is_normal_in(const PermGroup& g) const {
  if (!is_subgroup_of(g)) return false;
  for (const auto& a : g.generators()) {
    for (const auto& h : generators_) {
      if (!contains(conjugate(h, a))) return false;
    }
  }
  return true;
}

PermGroup subgroup_generated(std::size_t degree, std::vector<Permutation> gens) {
  return PermGroup(degree, std::move(gens));
}

PermGroup group_from_elements(std::size_t degree, std::span<const Permutation> elements) {
  std::vector<Permutation> gens;
  PermGroup cur = PermGroup::trivial(degree);
  for (const auto& e : elements) {
    if (e.is_identity() || cur.contains(e)) continue;
    gens.push_back(e);
    cur = PermGroup(degree, gens);
  }
  return cur;
}

BigInt group_order(const PermGroup& g) { return g.order(); }

}  // namespace dessins
