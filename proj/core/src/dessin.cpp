#include "dessins/dessin.hpp"

#include <numeric>

namespace dessins {

namespace {

bool transitive_pair(const Permutation& x, const Permutation& y) {
  const std::size_t n = x.degree();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<Point> queue{0};
  seen[0] = true;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (Point q : {x[queue[k]], y[queue[k]]}) {
      if (!seen[q]) {
        seen[q] = true;
        queue.push_back(q);
      }
    }
  }
  return queue.size() == n;
}

}  // namespace

std::optional<Dessin> Dessin::try_from_pair(Permutation x, Permutation y) {
  if (x.degree() != y.degree()) throw InvalidArgument("x and y have different degrees");
  if (x.degree() == 0) throw InvalidArgument("a dessin needs at least one edge");
  if (!transitive_pair(x, y)) return std::nullopt;
  Permutation z = (x * y).inverse();
  return Dessin(std::move(x), std::move(y), std::move(z));
}

Dessin Dessin::from_pair(Permutation x, Permutation y) {
  auto d = try_from_pair(std::move(x), std::move(y));
  if (!d) throw NotTransitive("<x, y> is not transitive");
  return *d;
}

Dessin Dessin::from_triple(Permutation x, Permutation y, Permutation z) {
  if (z.degree() != x.degree()) throw InvalidArgument("z has the wrong degree");
  if (!(x * y * z).is_identity()) throw InvalidArgument("xyz is not the identity");
  return from_pair(std::move(x), std::move(y));
}

Dessin Dessin::trivial() { return from_pair(Permutation::identity(1), Permutation::identity(1)); }

std::string Passport::str() const {
  return "(" + x.str() + ", " + y.str() + ", " + z.str() + ")";
}

Passport passport(const Dessin& d) { return {cycle_type(d.x()), cycle_type(d.y()), cycle_type(d.z())}; }

std::array<std::uint64_t, 3> type(const Dessin& d) { return {order(d.x()), order(d.y()), order(d.z())}; }

std::uint64_t genus(const Dessin& d) {
  const auto c = static_cast<std::int64_t>(cycle_count(d.x()) + cycle_count(d.y()) + cycle_count(d.z()));
  const std::int64_t chi = c - static_cast<std::int64_t>(d.degree());
  if (chi % 2 != 0 || chi > 2) throw VerificationFailure("Euler characteristic has the wrong parity or size");
  return static_cast<std::uint64_t>((2 - chi) / 2);
}

Rational genus_327(std::int64_t n, std::int64_t u, std::int64_t v, std::int64_t w) {
  Rational g(n - 28 * u - 21 * v - 36 * w, 84);
  g += 1;
  g.canonicalize();
  return g;
}

PermGroup monodromy(const Dessin& d) { return PermGroup(d.degree(), {d.x(), d.y()}); }

PermGroup automorphisms(const Dessin& d) { return centralizer_in_sym(monodromy(d)); }

std::size_t automorphism_order(const Dessin& d) {
  const Permutation gens[] = {d.x(), d.y()};
  return centralizer_order(gens);
}

bool is_regular(const Dessin& d) { return automorphism_order(d) == d.degree(); }

bool is_primitive(const Dessin& d) { return is_primitive(monodromy(d)); }

Dessin coset_dessin(const Dessin& r, const PermGroup& h, const Limits& limits) {
  CosetAction act(monodromy(r), h, limits);
  return Dessin::from_pair(act.generator_images()[0], act.generator_images()[1]);
}

RegularCover regular_cover(const Dessin& d, const Limits& limits) {
  const PermGroup g = monodromy(d);
  if (g.order() > from_u64(limits.degree_cap)) {
    throw CapExceeded("regular cover of degree " + to_string(g.order()) + " exceeds the degree cap");
  }
  CosetAction act(g, PermGroup::trivial(d.degree()), limits);
  Dessin cover = Dessin::from_pair(act.generator_images()[0], act.generator_images()[1]);
  return RegularCover{std::move(cover), std::move(act)};
}

BigInt cover_genus(const BigInt& group_order, std::uint64_t p, std::uint64_t q, std::uint64_t r) {
  // 2 - 2g = |G| (1/p + 1/q + 1/r - 1)
  Rational chi = Rational(group_order) * (Rational(1, static_cast<unsigned long>(p)) +
                                          Rational(1, static_cast<unsigned long>(q)) +
                                          Rational(1, static_cast<unsigned long>(r)) - 1);
  Rational g = (2 - chi) / 2;
  g.canonicalize();
  if (!is_integer(g) || g < 0) throw VerificationFailure("cover genus is not a natural number");
  return g.get_num();
}

BigInt cover_genus(const Dessin& d) {
  auto t = type(d);
  return cover_genus(monodromy(d).order(), t[0], t[1], t[2]);
}

bool is_faithful_quotient(const Dessin& r, const PermGroup& h, const Limits& limits) {
  return core(monodromy(r), h, limits).order() == 1;
}

bool is_faithful(const Dessin& d, const Limits& limits) {
  const PermGroup g = monodromy(d);
  return core(g, g.stabilizer(0), limits).order() == 1;
}

Dessin block_quotient(const Dessin& d, const BlockSystem& b) {
  const Permutation gens[] = {d.x(), d.y()};
  if (!is_block_system(gens, b)) throw InvalidArgument("not a block system for the dessin");
  return Dessin::from_pair(block_image(d.x(), b), block_image(d.y(), b));
}

std::optional<Permutation> isomorphic(const Dessin& a, const Dessin& b) {
  if (a.degree() != b.degree()) return std::nullopt;
  if (passport(a) != passport(b)) return std::nullopt;
  const Permutation lhs[] = {a.x(), a.y()};
  const Permutation rhs[] = {b.x(), b.y()};
  return simultaneous_conjugator(lhs, rhs);
}

Dessin mirror(const Dessin& d) { return Dessin::from_pair(d.x().inverse(), d.y().inverse()); }

}  // namespace dessins
