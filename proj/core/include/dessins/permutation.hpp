#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dessins {

using Point = std::uint32_t;

// A bijection of {0..n-1}. Products are read left to right: i^(pq) = (i^p)^q.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidArgument unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  // Cycles are given as point lists; unlisted points are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long k) const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b);

  std::size_t hash() const noexcept;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

// Partition of n, parts sorted in descending order.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<std::size_t> parts);

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t degree() const;
  std::size_t count(std::size_t length) const;
  std::size_t cycle_count() const { return parts_.size(); }
  // lcm of the parts
  std::uint64_t order() const;

  // "3^2 1^2"
  std::string str() const;
  // Accepts "3^2 1^2", "3^2.1^2", "3,3,1,1", "7^2,1".
  static CycleType parse(std::string_view text);

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

 private:
  std::vector<std::size_t> parts_;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
std::uint64_t order(const Permutation& p);
CycleType cycle_type(const Permutation& p);
std::size_t cycle_count(const Permutation& p);
std::vector<Point> fixed_points(const Permutation& p);
std::vector<std::vector<Point>> cycles(const Permutation& p, bool include_fixed = false);
// g^-1 p g
Permutation conjugate(const Permutation& p, const Permutation& g);

// ---------------------------------------------------------------------------
// Cycle notation.
//
// Canonical text: each cycle starts at its least point, cycles ordered by
// least point, fixed points omitted, no whitespace; the identity is "()".

std::string render(const Permutation& p);

// Points are the integers 0..degree-1 as written.
Permutation parse_permutation(std::string_view text, std::size_t degree);

// A cycle label as written in source text: an integer or the symbol
// "∞" (also "inf" / "oo"), which sorts after every integer.
struct Label {
  bool infinity = false;
  long long value = 0;

  static Label inf() { return {true, 0}; }
  static Label integer(long long v) { return {false, v}; }

  friend bool operator==(const Label&, const Label&) = default;
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (a.infinity != b.infinity) return a.infinity ? std::strong_ordering::greater
                                                    : std::strong_ordering::less;
    return a.value <=> b.value;
  }
  std::string str() const;
};

// An ordered set of labels; label k of the set becomes point k.
class LabelSet {
 public:
  explicit LabelSet(std::vector<Label> labels);
  // {lo, lo+1, ..., hi}
  static LabelSet range(long long lo, long long hi);
  // Union of all labels occurring in the given cycle strings.
  static LabelSet from_texts(std::span<const std::string_view> texts);

  std::size_t size() const { return labels_.size(); }
  const std::vector<Label>& labels() const { return labels_; }
  std::optional<Point> index_of(const Label& l) const;

 private:
  std::vector<Label> labels_;
};

// Parses cycles over arbitrary labels and normalises to 0..n-1 by sorted
// label order of the declared support.
Permutation parse_labelled(std::string_view text, const LabelSet& support);

// Raw cycle structure of a text, before normalisation.
std::vector<std::vector<Label>> parse_cycle_labels(std::string_view text);

}  // namespace dessins

template <>
struct std::hash<dessins::Permutation> {
  std::size_t operator()(const dessins::Permutation& p) const noexcept { return p.hash(); }
};
