#include "dessins/frobenius.hpp"

#include "dessins/errors.hpp"

namespace dessins {

namespace {

Rational as_rational(std::uint64_t v) { return Rational(from_u64(v)); }

}  // namespace

Cyclotomic frobenius_character_sum(const CharacterTable& t, std::span<const std::size_t> classes) {
  if (classes.size() < 2) throw InvalidArgument("need at least two classes");
  for (auto c : classes) {
    if (c >= t.classes.size()) throw InvalidArgument("class index out of range");
  }
  Cyclotomic sum;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    Cyclotomic term(Rational(1));
    for (auto c : classes) term *= t.rows[i][c];
    BigInt denom = 1;
    for (std::size_t k = 2; k < classes.size(); ++k) denom *= static_cast<unsigned long>(t.degrees[i]);
    term *= Rational(1) / Rational(denom);
    sum += term;
  }
  return sum;
}

Rational naive_estimate(const CharacterTable& t, std::span<const std::size_t> classes) {
  Rational v = 1;
  for (auto c : classes) v *= as_rational(t.classes[c].size);
  v /= as_rational(t.group_order);
  v.canonicalize();
  return v;
}

BigInt frobenius_count_k(const CharacterTable& t, std::span<const std::size_t> classes) {
  Cyclotomic s = frobenius_character_sum(t, classes) * naive_estimate(t, classes);
  if (!s.is_rational()) throw VerificationFailure("Frobenius count is not rational: " + s.str());
  Rational v = s.rational();
  v.canonicalize();
  if (!is_integer(v) || v < 0) throw VerificationFailure("Frobenius count is not a natural number: " + to_string(v));
  return v.get_num();
}

BigInt frobenius_count(const CharacterTable& t, std::size_t x, std::size_t y, std::size_t z) {
  const std::size_t cls[] = {x, y, z};
  return frobenius_count_k(t, cls);
}

BigInt brute_force_triple_count(const ClassStructure& cs, std::size_t x, std::size_t y, std::size_t z) {
  const auto& elems = cs.elements();
  std::vector<std::size_t> xs, ys;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (cs.class_of_element(i) == x) xs.push_back(i);
    if (cs.class_of_element(i) == y) ys.push_back(i);
  }
  std::uint64_t count = 0;
  for (auto i : xs) {
    for (auto j : ys) {
      if (cs.class_of((elems[i] * elems[j]).inverse()) == z) ++count;
    }
  }
  return from_u64(count);
}

std::vector<std::vector<std::vector<BigInt>>> triple_count_tally(const ClassStructure& cs) {
  const std::size_t r = cs.classes().size();
  const auto& elems = cs.elements();
  std::vector<std::vector<std::vector<std::uint64_t>>> raw(
      r, std::vector<std::vector<std::uint64_t>>(r, std::vector<std::uint64_t>(r, 0)));
  for (std::size_t x = 0; x < r; ++x) {
    const Permutation& rep = cs.classes()[x].representative;
    for (std::size_t j = 0; j < elems.size(); ++j) {
      ++raw[x][cs.class_of_element(j)][cs.class_of((rep * elems[j]).inverse())];
    }
  }
  std::vector<std::vector<std::vector<BigInt>>> out(
      r, std::vector<std::vector<BigInt>>(r, std::vector<BigInt>(r)));
  for (std::size_t x = 0; x < r; ++x) {
    for (std::size_t y = 0; y < r; ++y) {
      for (std::size_t z = 0; z < r; ++z) out[x][y][z] = from_u64(raw[x][y][z]) * from_u64(cs.classes()[x].size);
    }
  }
  return out;
}

BigInt triple_count_by_type(const CharacterTable& t, std::uint64_t p, std::uint64_t q, std::uint64_t r) {
  BigInt total = 0;
  const std::size_t n = t.classes.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (t.classes[x].element_order != p) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (t.classes[y].element_order != q) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (t.classes[z].element_order != r) continue;
        total += frobenius_count(t, x, y, z);
      }
    }
  }
  return total;
}

}  // namespace dessins
