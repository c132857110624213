#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "dessins/perm_group.hpp"

namespace dessins {

// A G-invariant partition of {0..n-1} into equal blocks. Blocks are sorted
// internally and ordered by least point.
struct BlockSystem {
  std::vector<std::vector<Point>> blocks;
  std::vector<std::uint32_t> block_of;

  static BlockSystem from_blocks(std::size_t degree, std::vector<std::vector<Point>> blocks);
  static BlockSystem singletons(std::size_t degree);
  std::size_t block_count() const { return blocks.size(); }
  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
  friend bool operator==(const BlockSystem& a, const BlockSystem& b) { return a.blocks == b.blocks; }
};

// Finest block system with 0 and seed in the same block (union-find).
BlockSystem minimal_blocks(const PermGroup& g, Point seed);
// Minimal non-trivial block systems; empty iff g is primitive.
std::vector<BlockSystem> all_minimal_block_systems(const PermGroup& g);
bool is_block_system(std::span<const Permutation> gens, const BlockSystem& b);
bool is_primitive(const PermGroup& g);

// Induced permutation of the blocks.
Permutation block_image(const Permutation& p, const BlockSystem& b);
PermGroup block_action(const PermGroup& g, const BlockSystem& b);
// Elements acting trivially on the blocks; needs enumeration.
PermGroup block_kernel(const PermGroup& g, const BlockSystem& b, const Limits& limits = {});

// Action of G on the right cosets Hg. Coset 0 is H itself; each coset is
// stored by its least element under Permutation ordering.
class CosetAction {
 public:
  CosetAction(const PermGroup& g, const PermGroup& h, const Limits& limits = {});

  std::size_t index() const { return reps_.size(); }
  const std::vector<Permutation>& coset_reps() const { return reps_; }
  const std::vector<Permutation>& generator_images() const { return gen_images_; }
  PermGroup image() const { return PermGroup(reps_.size(), gen_images_); }
  // Image of any element of G.
  Permutation image_of(const Permutation& g) const;
  std::size_t coset_of(const Permutation& g) const;

 private:
  Permutation canonical(const Permutation& g) const;

  std::vector<Permutation> h_elements_;
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::vector<Permutation> gen_images_;
};

inline CosetAction coset_action(const PermGroup& g, const PermGroup& h, const Limits& limits = {}) {
  return CosetAction(g, h, limits);
}

// Largest normal subgroup of G contained in H.
PermGroup core(const PermGroup& g, const PermGroup& h, const Limits& limits = {});

// Centraliser of a transitive group in Sym(n), by anchoring the image of
// point 0. It is semiregular, so its order is the number of admissible
// anchors.
PermGroup centralizer_in_sym(const PermGroup& g);
std::size_t centralizer_order(std::span<const Permutation> gens);

// g with g^-1 a[i] g == b[i] for all i, assuming <a> is transitive.
std::optional<Permutation> simultaneous_conjugator(std::span<const Permutation> a,
                                                   std::span<const Permutation> b);

}  // namespace dessins
