#include "dessins/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "dessins/errors.hpp"
#include "dessins/numeric.hpp"

namespace dessins {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw InvalidArgument("images do not form a bijection of {0.." +
                            std::to_string(images_.size()) + "-1}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  return Permutation(std::move(im), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      Point a = c[k];
      if (a >= degree) {
        throw InvalidArgument("cycle point " + std::to_string(a) +
                              " out of range for degree " + std::to_string(degree));
      }
      if (used[a]) throw InvalidArgument("repeated point " + std::to_string(a));
      used[a] = true;
      im[a] = c[(k + 1) % c.size()];
    }
  }
  return Permutation(std::move(im), Unchecked{});
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ULL
                               : static_cast<unsigned long long>(k);
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1ULL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw InvalidArgument("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                          std::to_string(q.degree()));
  }
  std::vector<Point> im(p.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = q.images_[p.images_[i]];
  return Permutation(std::move(im), Permutation::Unchecked{});
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.images_.size() <=> b.images_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(),
                                                b.images_.begin(), b.images_.end());
}

std::size_t Permutation::hash() const noexcept {
  // FNV-1a over the image array
  std::uint64_t h = 1469598103934665603ULL;
  for (Point v : images_) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------

CycleType::CycleType(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end()) {
    throw InvalidArgument("cycle type parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::size_t CycleType::degree() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

std::size_t CycleType::count(std::size_t length) const {
  return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), length));
}

std::uint64_t CycleType::order() const {
  std::uint64_t o = 1;
  for (std::size_t p : parts_) o = checked_lcm(o, p);
  return o;
}

std::string CycleType::str() const {
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!first) out << ' ';
    first = false;
    out << parts_[i] << '^' << (j - i);
    i = j;
  }
  return out.str();
}

CycleType CycleType::parse(std::string_view text) {
  std::vector<std::size_t> parts;
  std::size_t i = 0;
  auto read_int = [&](std::size_t& out) {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    out = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      out = out * 10 + static_cast<std::size_t>(text[i] - '0');
      ++i;
    }
    return true;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == ',' || c == '.' || c == '\t') {
      ++i;
      continue;
    }
    std::size_t len = 0;
    if (!read_int(len) || len == 0) {
      throw InvalidArgument("malformed cycle type '" + std::string(text) + "'");
    }
    std::size_t mult = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (!read_int(mult)) throw InvalidArgument("malformed cycle type '" + std::string(text) + "'");
    }
    parts.insert(parts.end(), mult, len);
  }
  return CycleType(std::move(parts));
}

// ---------------------------------------------------------------------------

Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }
Permutation inverse(const Permutation& p) { return p.inverse(); }

std::vector<std::vector<Point>> cycles(const Permutation& p, bool include_fixed) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::vector<Point> c;
    Point j = i;
    do {
      seen[j] = true;
      c.push_back(j);
      j = p[j];
    } while (j != i);
    if (c.size() > 1 || include_fixed) out.push_back(std::move(c));
  }
  return out;
}

CycleType cycle_type(const Permutation& p) {
  std::vector<std::size_t> parts;
  for (const auto& c : cycles(p, true)) parts.push_back(c.size());
  return CycleType(std::move(parts));
}

std::size_t cycle_count(const Permutation& p) {
  std::size_t n = 0;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    ++n;
    for (Point j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return n;
}

std::uint64_t order(const Permutation& p) { return cycle_type(p).order(); }

std::vector<Point> fixed_points(const Permutation& p) {
  std::vector<Point> out;
  for (Point i = 0; i < p.degree(); ++i) {
    if (p[i] == i) out.push_back(i);
  }
  return out;
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  return g.inverse() * p * g;
}

// ---------------------------------------------------------------------------

std::string render(const Permutation& p) {
  std::string out;
  for (const auto& c : cycles(p, false)) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(c[k]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string Label::str() const { return infinity ? "inf" : std::to_string(value); }

namespace {

class CycleScanner {
 public:
  explicit CycleScanner(std::string_view text) : text_(text) {}

  std::vector<std::vector<Label>> run() {
    std::vector<std::vector<Label>> out;
    skip_space();
    while (pos_ < text_.size()) {
      expect('(');
      std::vector<Label> cycle;
      skip_space();
      if (peek() == ')') {
        ++pos_;
        if (!out.empty() || has_more()) fail("empty cycle");
        return out;
      }
      for (;;) {
        skip_space();
        cycle.push_back(read_label());
        skip_space();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect(')');
        break;
      }
      out.push_back(std::move(cycle));
      skip_space();
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool has_more() {
    skip_space();
    return pos_ < text_.size();
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("malformed cycle notation (" + what + ") at offset " +
                          std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  Label read_label() {
    static constexpr std::string_view kInfinity = "\xE2\x88\x9E";
    if (text_.substr(pos_, kInfinity.size()) == kInfinity) {
      pos_ += kInfinity.size();
      return Label::inf();
    }
    for (std::string_view word : {std::string_view("inf"), std::string_view("oo")}) {
      if (text_.substr(pos_, word.size()) == word) {
        pos_ += word.size();
        return Label::inf();
      }
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a label");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return Label::integer(v);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::vector<Label>> parse_cycle_labels(std::string_view text) {
  return CycleScanner(text).run();
}

LabelSet::LabelSet(std::vector<Label> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw InvalidArgument("repeated label in support");
  }
}

LabelSet LabelSet::range(long long lo, long long hi) {
  std::vector<Label> ls;
  for (long long v = lo; v <= hi; ++v) ls.push_back(Label::integer(v));
  return LabelSet(std::move(ls));
}

LabelSet LabelSet::from_texts(std::span<const std::string_view> texts) {
  std::vector<Label> all;
  for (auto t : texts) {
    for (const auto& c : parse_cycle_labels(t)) all.insert(all.end(), c.begin(), c.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return LabelSet(std::move(all));
}

std::optional<Point> LabelSet::index_of(const Label& l) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l) return std::nullopt;
  return static_cast<Point>(it - labels_.begin());
}

Permutation parse_labelled(std::string_view text, const LabelSet& support) {
  std::vector<std::vector<Point>> cs;
  for (const auto& c : parse_cycle_labels(text)) {
    std::vector<Point> pts;
    for (const auto& l : c) {
      auto idx = support.index_of(l);
      if (!idx) throw InvalidArgument("label " + l.str() + " not in declared support");
      pts.push_back(*idx);
    }
    cs.push_back(std::move(pts));
  }
  return Permutation::from_cycles(support.size(), cs);
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cs;
  for (const auto& c : parse_cycle_labels(text)) {
    std::vector<Point> pts;
    for (const auto& l : c) {
      if (l.infinity || l.value < 0 || static_cast<std::size_t>(l.value) >= degree) {
        throw InvalidArgument("label " + l.str() + " out of range for degree " +
                              std::to_string(degree));
      }
      pts.push_back(static_cast<Point>(l.value));
    }
    cs.push_back(std::move(pts));
  }
  return Permutation::from_cycles(degree, cs);
}

}  // namespace dessins
