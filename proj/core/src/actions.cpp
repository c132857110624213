#include "dessins/actions.hpp"

#include <algorithm>
#include <numeric>

#include "dessins/errors.hpp"

namespace dessins {

namespace {

void require_transitive(const PermGroup& g, const char* what) {
  if (!g.is_transitive()) throw InvalidArgument(std::string(what) + " needs a transitive group");
}

// The unique g with g(0) = anchor and g(p^a[i]) = g(p)^b[i], if any.
std::optional<Permutation> propagate(std::span<const Permutation> a,
                                     std::span<const Permutation> b, Point anchor) {
  const std::size_t n = a.empty() ? b.front().degree() : a.front().degree();
  constexpr Point unset = UINT32_MAX;
  std::vector<Point> img(n, unset);
  std::vector<bool> used(n, false);
  std::vector<Point> queue{0};
  img[0] = anchor;
  used[anchor] = true;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    Point p = queue[k];
    for (std::size_t i = 0; i < a.size(); ++i) {
      Point q = a[i][p];
      Point want = b[i][img[p]];
      if (img[q] == unset) {
        if (used[want]) return std::nullopt;
        img[q] = want;
        used[want] = true;
        queue.push_back(q);
      } else if (img[q] != want) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != n) return std::nullopt;
  return Permutation(std::move(img));
}

}  // namespace

BlockSystem BlockSystem::from_blocks(std::size_t degree, std::vector<std::vector<Point>> blocks) {
  BlockSystem b;
  for (auto& blk : blocks) std::sort(blk.begin(), blk.end());
  std::sort(blocks.begin(), blocks.end());
  b.block_of.assign(degree, UINT32_MAX);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty() || blocks[i].size() != blocks.front().size()) {
      throw InvalidArgument("blocks must be non-empty and of equal size");
    }
    for (Point p : blocks[i]) {
      if (p >= degree || b.block_of[p] != UINT32_MAX) throw InvalidArgument("blocks do not partition the points");
      b.block_of[p] = static_cast<std::uint32_t>(i);
      ++covered;
    }
  }
  if (covered != degree) throw InvalidArgument("blocks do not cover the points");
  b.blocks = std::move(blocks);
  return b;
}

BlockSystem BlockSystem::singletons(std::size_t degree) {
  std::vector<std::vector<Point>> blocks(degree);
  for (Point p = 0; p < degree; ++p) blocks[p] = {p};
  return from_blocks(degree, std::move(blocks));
}

BlockSystem minimal_blocks(const PermGroup& g, Point seed) {
  require_transitive(g, "minimal_blocks");
  const std::size_t n = g.degree();
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point p) {
    while (parent[p] != p) p = parent[p] = parent[parent[p]];
    return p;
  };
  std::vector<std::pair<Point, Point>> queue;
  if (seed != 0) {
    parent[seed] = 0;
    queue.emplace_back(0, seed);
  }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    auto [a, b] = queue[k];
    for (const auto& s : g.generators()) {
      Point u = find(s[a]);
      Point v = find(s[b]);
      if (u == v) continue;
      if (v < u) std::swap(u, v);
      parent[v] = u;
      queue.emplace_back(u, v);
    }
  }
  std::vector<std::vector<Point>> blocks;
  std::vector<std::int64_t> slot(n, -1);
  for (Point p = 0; p < n; ++p) {
    Point r = find(p);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int64_t>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(slot[r])].push_back(p);
  }
  return BlockSystem::from_blocks(n, std::move(blocks));
}

std::vector<BlockSystem> all_minimal_block_systems(const PermGroup& g) {
  require_transitive(g, "all_minimal_block_systems");
  const std::size_t n = g.degree();
  std::vector<BlockSystem> found;
  for (Point b = 1; b < n; ++b) {
    BlockSystem s = minimal_blocks(g, b);
    if (s.block_count() == 1) continue;
    if (std::find(found.begin(), found.end(), s) == found.end()) found.push_back(std::move(s));
  }
  // keep those whose block of 0 contains no other found block of 0
  std::vector<BlockSystem> minimal;
  for (const auto& s : found) {
    const auto& mine = s.blocks[s.block_of[0]];
    bool refined = std::any_of(found.begin(), found.end(), [&](const BlockSystem& t) {
      const auto& theirs = t.blocks[t.block_of[0]];
      return theirs.size() < mine.size() &&
             std::includes(mine.begin(), mine.end(), theirs.begin(), theirs.end());
    });
    if (!refined) minimal.push_back(s);
  }
  return minimal;
}

bool is_block_system(std::span<const Permutation> gens, const BlockSystem& b) {
  for (const auto& s : gens) {
    if (s.degree() != b.block_of.size()) return false;
    for (const auto& blk : b.blocks) {
      std::uint32_t target = b.block_of[s[blk.front()]];
      for (Point p : blk) {
        if (b.block_of[s[p]] != target) return false;
      }
    }
  }
  return true;
}

bool is_primitive(const PermGroup& g) {
  return g.is_transitive() && all_minimal_block_systems(g).empty();
}

Permutation block_image(const Permutation& p, const BlockSystem& b) {
  std::vector<Point> im(b.blocks.size());
  for (std::size_t i = 0; i < b.blocks.size(); ++i) im[i] = b.block_of[p[b.blocks[i].front()]];
  return Permutation(std::move(im));
}

PermGroup block_action(const PermGroup& g, const BlockSystem& b) {
  if (!is_block_system(g.generators(), b)) throw InvalidArgument("not a block system for the group");
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(block_image(s, b));
  return PermGroup(b.block_count(), std::move(gens));
}

PermGroup block_kernel(const PermGroup& g, const BlockSystem& b, const Limits& limits) {
  if (!is_block_system(g.generators(), b)) throw InvalidArgument("not a block system for the group");
  std::vector<Permutation> kernel;
  g.for_each_element(
      [&](const Permutation& e) {
        for (std::size_t p = 0; p < e.degree(); ++p) {
          if (b.block_of[e[static_cast<Point>(p)]] != b.block_of[p]) return;
        }
        kernel.push_back(e);
      },
      limits.enumeration_cap);
  return group_from_elements(g.degree(), kernel);
}

// ---------------------------------------------------------------------------

CosetAction::CosetAction(const PermGroup& g, const PermGroup& h, const Limits& limits) {
  if (!h.is_subgroup_of(g)) throw InvalidArgument("coset_action: H is not a subgroup of G");
  BigInt idx = g.order() / h.order();
  if (idx > from_u64(limits.degree_cap)) {
    throw CapExceeded("index " + to_string(idx) + " exceeds the degree cap");
  }
  h_elements_ = h.elements(limits.enumeration_cap);
  const std::size_t n = g.degree();
  reps_.push_back(Permutation::identity(n));
  index_.emplace(reps_.back(), 0);
  std::vector<std::vector<Point>> images(g.generators().size());
  for (std::size_t k = 0; k < reps_.size(); ++k) {
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      Permutation c = canonical(reps_[k] * g.generators()[s]);
      auto [it, fresh] = index_.emplace(c, static_cast<std::uint32_t>(reps_.size()));
      if (fresh) reps_.push_back(std::move(c));
      images[s].push_back(it->second);
    }
  }
  if (from_u64(reps_.size()) != idx) throw VerificationFailure("coset count differs from the index");
  for (auto& im : images) gen_images_.emplace_back(std::move(im));
}

Permutation CosetAction::canonical(const Permutation& g) const {
  Permutation best = g;
  for (const auto& e : h_elements_) {
    Permutation c = e * g;
    if (c < best) best = std::move(c);
  }
  return best;
}

std::size_t CosetAction::coset_of(const Permutation& g) const {
  auto it = index_.find(canonical(g));
  if (it == index_.end()) throw InvalidArgument("element outside the acting group");
  return it->second;
}

Permutation CosetAction::image_of(const Permutation& g) const {
  std::vector<Point> im(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) im[i] = static_cast<Point>(coset_of(reps_[i] * g));
  return Permutation(std::move(im));
}

PermGroup core(const PermGroup& g, const PermGroup& h, const Limits& limits) {
  CosetAction act(g, h, limits);
  std::vector<Permutation> kernel;
  for (const auto& e : h.elements(limits.enumeration_cap)) {
    bool inside = std::all_of(act.coset_reps().begin(), act.coset_reps().end(),
                              [&](const Permutation& c) { return h.contains(c * e * c.inverse()); });
    if (inside) kernel.push_back(e);
  }
  return group_from_elements(g.degree(), kernel);
}

// ---------------------------------------------------------------------------

PermGroup centralizer_in_sym(const PermGroup& g) {
  require_transitive(g, "centralizer_in_sym");
  const std::size_t n = g.degree();
  std::vector<Permutation> gens;
  std::vector<bool> reached(n, false);
  reached[0] = true;
  std::vector<Point> orbit{0};
  for (Point t = 1; t < n; ++t) {
    if (reached[t]) continue;
    auto c = propagate(g.generators(), g.generators(), t);
    if (!c) continue;
    gens.push_back(*c);
    // regrow the orbit of 0 under the centraliser found so far
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& s : gens) {
        Point q = s[orbit[k]];
        if (!reached[q]) {
          reached[q] = true;
          orbit.push_back(q);
        }
      }
    }
  }
  return PermGroup(n, std::move(gens));
}

std::size_t centralizer_order(std::span<const Permutation> gens) {
  if (gens.empty()) return 1;
  std::size_t count = 0;
  for (Point t = 0; t < gens.front().degree(); ++t) {
    if (propagate(gens, gens, t)) ++count;
  }
  return count;
}

std::optional<Permutation> simultaneous_conjugator(std::span<const Permutation> a,
                                                   std::span<const Permutation> b) {
  if (a.size() != b.size() || a.empty()) throw InvalidArgument("tuples of different lengths");
  const std::size_t n = a.front().degree();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].degree() != n || b[i].degree() != n) throw InvalidArgument("degree mismatch");
  }
  for (Point t = 0; t < n; ++t) {
    if (auto g = propagate(a, b, t)) return g;
  }
  return std::nullopt;
}

}  // namespace dessins
