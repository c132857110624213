#include "dessins/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "dessins/symmetric_characters.hpp"

namespace dessins {

namespace {

constexpr std::int32_t kUnset = -1;

// Constraint compiled for a fixed degree: which lengths may close, how many
// times, and the longest chain worth keeping open.
struct Shape {
  std::vector<std::uint32_t> cap;  // cap[L]: closed L-cycles allowed
  std::size_t max_len = 0;
  bool satisfiable = true;
};

Shape compile(const CycleConstraint& c, std::size_t n) {
  Shape s;
  s.cap.assign(n + 1, 0);
  switch (c.kind) {
    case CycleConstraint::Kind::Any:
      for (std::size_t l = 1; l <= n; ++l) s.cap[l] = UINT32_MAX;
      break;
    case CycleConstraint::Kind::Divides:
      for (std::size_t l = 1; l <= n; ++l) {
        if (c.order % l == 0) s.cap[l] = UINT32_MAX;
      }
      break;
    case CycleConstraint::Kind::Exact:
      if (c.type.degree() != n) s.satisfiable = false;
      [[fallthrough]];
    case CycleConstraint::Kind::Within:
      for (auto part : c.type.parts()) {
        if (part <= n) ++s.cap[part];
      }
      break;
  }
  for (std::size_t l = 1; l <= n; ++l) {
    if (s.cap[l] > 0) s.max_len = l;
  }
  if (s.max_len == 0) s.satisfiable = false;
  return s;
}

// Partial permutation f on the first m points (unset entries are -1) can
// still be completed within the shape.
bool feasible(const std::int32_t* f, const std::int32_t* finv, std::size_t m, const Shape& s,
              std::uint32_t* counts, std::uint8_t* seen) {
  std::fill(seen, seen + m, 0);
  std::fill(counts, counts + s.cap.size(), 0);
  for (std::size_t p = 0; p < m; ++p) {
    if (finv[p] != kUnset) continue;
    std::size_t len = 1;
    seen[p] = 1;
    for (std::int32_t q = f[p]; q != kUnset; q = f[q]) {
      seen[q] = 1;
      ++len;
    }
    if (len > s.max_len) return false;
  }
  for (std::size_t p = 0; p < m; ++p) {
    if (seen[p]) continue;
    std::size_t len = 0;
    std::int32_t q = static_cast<std::int32_t>(p);
    do {
      seen[q] = 1;
      ++len;
      q = f[q];
    } while (q != static_cast<std::int32_t>(p));
    if (++counts[len] > s.cap[len]) return false;
  }
  return true;
}

struct Search {
  std::size_t n;
  Shape sx, sy, sz;
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t budget;
  std::atomic<bool> over_budget{false};
};

struct State {
  std::vector<std::int32_t> x, xi, y, yi;
  std::size_t m = 1;     // labelled points
  std::size_t slot = 0;  // next decision: x(slot/2) or y(slot/2)
};

struct Leaf {
  std::vector<std::uint32_t> code;
  std::size_t automorphisms;
};

class Worker {
 public:
  explicit Worker(Search& s)
      : s_(s), w_(s.n), wi_(s.n), counts_(s.n + 1), seen_(s.n) {}

  // Children of st in decision order.
  std::vector<State> expand(const State& st) {
    std::vector<State> out;
    for_each_child(st, [&](const State& c) { out.push_back(c); });
    return out;
  }

  void run(State& st, std::vector<Leaf>& leaves) {
    if (s_.over_budget.load(std::memory_order_relaxed)) return;
    if (s_.nodes.fetch_add(1, std::memory_order_relaxed) >= s_.budget) {
      s_.over_budget = true;
      return;
    }
    if (st.slot == 2 * s_.n) {
      if (auto leaf = canonical_leaf(st)) leaves.push_back(std::move(*leaf));
      return;
    }
    for_each_child(st, [&](State& c) { run(c, leaves); });
  }

  std::optional<Leaf> canonical_leaf(const State& st) {
    const std::size_t n = s_.n;
    std::vector<std::uint32_t> code0(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      code0[2 * i] = static_cast<std::uint32_t>(st.x[i]);
      code0[2 * i + 1] = static_cast<std::uint32_t>(st.y[i]);
    }
    std::size_t aut = 1;
    std::vector<std::int32_t> label(n), order(n);
    for (std::size_t r = 1; r < n; ++r) {
      std::fill(label.begin(), label.end(), kUnset);
      label[r] = 0;
      order[0] = static_cast<std::int32_t>(r);
      std::size_t next = 1, pos = 0;
      int cmp = 0;
      for (std::size_t k = 0; k < n && cmp == 0; ++k) {
        const std::int32_t p = order[k];
        for (const auto* f : {&st.x, &st.y}) {
          const std::int32_t q = (*f)[p];
          if (label[q] == kUnset) {
            label[q] = static_cast<std::int32_t>(next);
            order[next++] = q;
          }
          const auto v = static_cast<std::uint32_t>(label[q]);
          if (v != code0[pos]) {
            cmp = v < code0[pos] ? -1 : 1;
            break;
          }
          ++pos;
        }
      }
      if (cmp < 0) return std::nullopt;
      if (cmp == 0) ++aut;
    }
    return Leaf{std::move(code0), aut};
  }

 private:
  template <typename Visit>
  void for_each_child(const State& st, Visit&& visit) {
    const std::size_t i = st.slot / 2;
    if (i >= st.m) return;  // the component closed before reaching n edges
    const bool is_x = st.slot % 2 == 0;
    const auto& inv = is_x ? st.xi : st.yi;
    for (std::size_t t = 0; t <= st.m && t < s_.n; ++t) {
      if (t < st.m && inv[t] != kUnset) continue;
      State c = st;
      if (t == st.m) ++c.m;
      auto& f = is_x ? c.x : c.y;
      auto& fi = is_x ? c.xi : c.yi;
      f[i] = static_cast<std::int32_t>(t);
      fi[t] = static_cast<std::int32_t>(i);
      ++c.slot;
      if (!feasible(f.data(), fi.data(), c.m, is_x ? s_.sx : s_.sy, counts_.data(), seen_.data())) continue;
      if (!z_feasible(c)) continue;
      visit(c);
    }
  }

  // w = xy (left to right), so z = w^-1 has the same cycle type
  bool z_feasible(const State& c) {
    std::fill(wi_.begin(), wi_.end(), kUnset);
    for (std::size_t p = 0; p < c.m; ++p) {
      const std::int32_t a = c.x[p];
      w_[p] = a == kUnset ? kUnset : c.y[a];
      if (w_[p] != kUnset) wi_[w_[p]] = static_cast<std::int32_t>(p);
    }
    return feasible(w_.data(), wi_.data(), c.m, s_.sz, counts_.data(), seen_.data());
  }

  Search& s_;
  std::vector<std::int32_t> w_, wi_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint8_t> seen_;
};

Dessin from_code(const std::vector<std::uint32_t>& code, std::size_t n) {
  std::vector<Point> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = code[2 * i];
    y[i] = code[2 * i + 1];
  }
  return Dessin::from_pair(Permutation(std::move(x)), Permutation(std::move(y)));
}

DessinReport report(Dessin d, std::size_t aut) {
  DessinReport r{d, passport(d), genus(d), monodromy(d).order(), aut, false, 0};
  const PermGroup g = monodromy(d);
  const auto systems = all_minimal_block_systems(g);
  r.primitive = systems.empty();
  r.minimal_block_systems = systems.size();
  return r;
}

}  // namespace

bool CycleConstraint::allows(const CycleType& t) const {
  switch (kind) {
    case Kind::Any:
      return true;
    case Kind::Divides:
      return order % t.order() == 0;
    case Kind::Exact:
      return t == type;
    case Kind::Within: {
      std::map<std::size_t, long> c;
      for (auto p : type.parts()) ++c[p];
      for (auto p : t.parts()) {
        if (--c[p] < 0) return false;
      }
      return true;
    }
  }
  return false;
}

std::string CycleConstraint::str() const {
  switch (kind) {
    case Kind::Any:
      return "any";
    case Kind::Divides:
      return "divides " + std::to_string(order);
    case Kind::Exact:
      return type.str();
    case Kind::Within:
      return "within " + type.str();
  }
  return {};
}

Rational CensusResult::weighted_count() const {
  Rational total = 0;
  for (const auto& r : dessins) total += Rational(1, static_cast<unsigned long>(r.automorphisms));
  total.canonicalize();
  return total;
}

std::vector<std::uint32_t> rooted_code(const Permutation& x, const Permutation& y, Point root) {
  const std::size_t n = x.degree();
  std::vector<std::int64_t> label(n, -1);
  std::vector<Point> order{root};
  label[root] = 0;
  std::vector<std::uint32_t> code;
  code.reserve(2 * n);
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (const auto* f : {&x, &y}) {
      const Point q = (*f)[order[k]];
      if (label[q] < 0) {
        label[q] = static_cast<std::int64_t>(order.size());
        order.push_back(q);
      }
      code.push_back(static_cast<std::uint32_t>(label[q]));
    }
  }
  return code;
}

Dessin canonical_form(const Dessin& d) {
  std::vector<std::uint32_t> best;
  for (Point r = 0; r < d.degree(); ++r) {
    auto c = rooted_code(d.x(), d.y(), r);
    if (best.empty() || c < best) best = std::move(c);
  }
  return from_code(best, d.degree());
}

CensusResult enumerate(const EnumQuery& q) {
  if (q.degree == 0) throw InvalidArgument("degree must be positive");
  const std::size_t n = q.degree;
  Search search{n, compile(q.x, n), compile(q.y, n), compile(q.z, n), {}, q.node_budget, {}};
  CensusResult result;
  if (!search.sx.satisfiable || !search.sy.satisfiable || !search.sz.satisfiable) return result;

  State root;
  root.x.assign(n, kUnset);
  root.xi.assign(n, kUnset);
  root.y.assign(n, kUnset);
  root.yi.assign(n, kUnset);

  // Split the tree into a frontier of independent subtrees.
  const std::size_t workers = std::max<std::size_t>(1, q.workers);
  std::vector<State> frontier{root};
  {
    Worker w(search);
    while (frontier.size() < 16 * workers) {
      std::vector<State> next;
      bool grew = false;
      for (const auto& st : frontier) {
        if (st.slot == 2 * n) {
          next.push_back(st);
          continue;
        }
        auto kids = w.expand(st);
        grew = true;
        for (auto& k : kids) next.push_back(std::move(k));
      }
      frontier = std::move(next);
      if (!grew || frontier.empty()) break;
    }
  }

  std::vector<std::vector<Leaf>> leaves(frontier.size());
  std::atomic<std::size_t> cursor{0};
  auto job = [&] {
    Worker w(search);
    for (std::size_t i; (i = cursor.fetch_add(1)) < frontier.size();) w.run(frontier[i], leaves[i]);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(job);
  job();
  for (auto& t : pool) t.join();
  if (search.over_budget) {
    throw CapExceeded("enumeration of degree " + std::to_string(n) + " exceeded the node budget of " +
                      std::to_string(q.node_budget) + " after " + std::to_string(search.nodes.load()) +
                      " nodes; the search was not completed");
  }
  result.search_nodes = search.nodes.load();

  std::vector<Leaf> all;
  for (auto& v : leaves) {
    for (auto& l : v) all.push_back(std::move(l));
  }
  std::sort(all.begin(), all.end(), [](const Leaf& a, const Leaf& b) { return a.code < b.code; });
  for (auto& l : all) result.dessins.push_back(report(from_code(l.code, n), l.automorphisms));

  // Safety net: canonical codes are unique, so no two outputs may be isomorphic.
  for (std::size_t i = 0; i < result.dessins.size(); ++i) {
    for (std::size_t j = i + 1; j < result.dessins.size(); ++j) {
      if (result.dessins[i].passport != result.dessins[j].passport) continue;
      if (isomorphic(result.dessins[i].dessin, result.dessins[j].dessin)) {
        throw VerificationFailure("enumeration produced two isomorphic dessins");
      }
    }
  }
  return result;
}

CensusResult census_seven_faces(std::size_t faces, std::size_t lo, std::size_t hi, std::size_t workers) {
  CensusResult total;
  for (std::size_t n = std::max(lo, 7 * faces); n <= hi; ++n) {
    std::vector<std::size_t> z(faces, 7);
    z.resize(faces + n - 7 * faces, 1);
    EnumQuery q{n, CycleConstraint::divides(3), CycleConstraint::divides(2),
                CycleConstraint::exact(CycleType(z)), workers};
    auto part = enumerate(q);
    total.search_nodes += part.search_nodes;
    for (auto& d : part.dessins) total.dessins.push_back(std::move(d));
  }
  return total;
}

namespace {

struct Component {
  Dessin dessin;
  std::size_t automorphisms;
  std::map<std::size_t, long> cx, cy, cz;
};

std::map<std::size_t, long> tally(const CycleType& t) {
  std::map<std::size_t, long> c;
  for (auto p : t.parts()) ++c[p];
  return c;
}

bool take(std::map<std::size_t, long>& have, const std::map<std::size_t, long>& part, long times) {
  for (const auto& [len, k] : part) {
    if ((have[len] -= k * times) < 0) return false;
  }
  return true;
}

bool empty(const std::map<std::size_t, long>& c) {
  return std::all_of(c.begin(), c.end(), [](const auto& e) { return e.second == 0; });
}

}  // namespace

std::vector<DisconnectedConfiguration> disconnected_configurations(const CycleType& x, const CycleType& y,
                                                                   const CycleType& z, std::size_t workers) {
  const std::size_t n = x.degree();
  if (y.degree() != n || z.degree() != n) throw InvalidArgument("cycle types of different degrees");
  std::vector<Component> comps;
  for (std::size_t m = 1; m < n; ++m) {
    EnumQuery q{m, CycleConstraint::within(x), CycleConstraint::within(y), CycleConstraint::within(z), workers};
    for (auto& r : enumerate(q).dessins) {
      comps.push_back({r.dessin, r.automorphisms, tally(r.passport.x), tally(r.passport.y), tally(r.passport.z)});
    }
  }

  std::vector<DisconnectedConfiguration> out;
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  auto rec = [&](auto&& self, std::size_t from, std::size_t used, std::map<std::size_t, long> cx,
                 std::map<std::size_t, long> cy, std::map<std::size_t, long> cz) -> void {
    if (empty(cx) && empty(cy) && empty(cz)) {
      std::size_t parts = 0;
      for (const auto& c : chosen) parts += c.second;
      if (parts < 2) return;
      DisconnectedConfiguration cfg;
      BigInt denom = 1;
      for (const auto& [idx, k] : chosen) {
        cfg.components.emplace_back(comps[idx].dessin, k);
        BigInt a = from_u64(comps[idx].automorphisms);
        for (std::size_t t = 0; t < k; ++t) denom *= a;
        denom *= factorial(k);
      }
      cfg.weight = Rational(BigInt(1), denom);
      cfg.weight.canonicalize();
      out.push_back(std::move(cfg));
      return;
    }
    for (std::size_t i = from; i < comps.size(); ++i) {
      const std::size_t deg = comps[i].dessin.degree();
      for (std::size_t k = 1; used + k * deg <= n; ++k) {
        auto ax = cx, ay = cy, az = cz;
        if (!take(ax, comps[i].cx, static_cast<long>(k)) || !take(ay, comps[i].cy, static_cast<long>(k)) ||
            !take(az, comps[i].cz, static_cast<long>(k))) {
          break;
        }
        chosen.emplace_back(i, k);
        self(self, i + 1, used + k * deg, ax, ay, az);
        chosen.pop_back();
      }
    }
  };
  rec(rec, 0, 0, tally(x), tally(y), tally(z));
  return out;
}

}  // namespace dessins
