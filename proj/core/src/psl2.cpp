#include "dessins/psl2.hpp"

#include <set>

namespace dessins {

std::string projective_label(const FField& f, Point p) {
  return p == infinity_point(f) ? std::string("inf") : f.str(p);
}

Permutation mobius_permutation(const FField& f, const Mobius& m) {
  const std::uint32_t q = f.order();
  if (f.sub(f.mul(m.a, m.d), f.mul(m.b, m.c)) == 0) throw InvalidArgument("singular Mobius map");
  std::vector<Point> img(q + 1);
  for (Point t = 0; t < q; ++t) {
    const auto num = f.add(f.mul(m.a, t), m.b);
    const auto den = f.add(f.mul(m.c, t), m.d);
    img[t] = den == 0 ? q : f.div(num, den);
  }
  img[q] = m.c == 0 ? q : f.div(m.a, m.c);
  return Permutation(std::move(img));
}

Mobius mobius_compose(const FField& f, const Mobius& m1, const Mobius& m2) {
  return {f.add(f.mul(m2.a, m1.a), f.mul(m2.b, m1.c)), f.add(f.mul(m2.a, m1.b), f.mul(m2.b, m1.d)),
          f.add(f.mul(m2.c, m1.a), f.mul(m2.d, m1.c)), f.add(f.mul(m2.c, m1.b), f.mul(m2.d, m1.d))};
}

BigInt psl2_order(std::uint32_t q) {
  BigInt o = BigInt(q) * (BigInt(q) * q - 1);
  if (q % 2 == 1) o /= 2;
  return o;
}

PermGroup psl2_group(const FField& f) {
  const auto one = FField::Elem{1};
  const auto g = f.generator();
  return PermGroup(f.order() + 1, {mobius_permutation(f, {one, one, 0, one}),
                                   mobius_permutation(f, {0, f.neg(one), one, 0}),
                                   mobius_permutation(f, {f.mul(g, g), 0, 0, one})});
}

Dessin psl2_natural_triple_7() {
  FField f(7, 1);
  Permutation y = mobius_permutation(f, {0, f.neg(1), 1, 0});
  Permutation z = mobius_permutation(f, {1, 1, 0, 1});
  Permutation x = (y * z).inverse();
  return Dessin::from_triple(x, y, z);
}

std::vector<Dessin> hurwitz_triples(const FField& f, std::size_t limit) {
  const FField::Elem one = 1, minus_one = f.neg(1);
  const Permutation x = mobius_permutation(f, {0, minus_one, one, one});
  const BigInt target = psl2_order(f.order());
  std::vector<Dessin> out;
  std::set<Permutation> seen;
  const std::uint32_t q = f.order();
  for (FField::Elem a = 0; a < q && out.size() < limit; ++a) {
    for (FField::Elem b = 0; b < q && out.size() < limit; ++b) {
      // trace zero, determinant one: -a^2 - bc = 1
      std::vector<FField::Elem> cs;
      const auto rhs = f.neg(f.add(one, f.mul(a, a)));
      if (b != 0) {
        cs.push_back(f.div(rhs, b));
      } else if (rhs == 0) {
        for (FField::Elem c = 0; c < q; ++c) cs.push_back(c);
      }
      for (auto c : cs) {
        Permutation y = mobius_permutation(f, {a, b, c, f.neg(a)});
        if (y.is_identity() || !seen.insert(y).second) continue;
        Permutation z = (x * y).inverse();
        if (order(z) != 7) continue;
        if (PermGroup(q + 1, {x, y}).order() != target) continue;
        out.push_back(Dessin::from_triple(x, y, z));
        if (out.size() >= limit) break;
      }
    }
  }
  return out;
}

}  // namespace dessins
