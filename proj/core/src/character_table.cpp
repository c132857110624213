#include "dessins/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "dessins/errors.hpp"

namespace dessins {

namespace {

using Row = std::vector<std::uint64_t>;
using Mat = std::vector<Row>;

struct Fp {
  std::uint64_t p;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t primitive_root(const Fp& f) {
  std::vector<std::uint64_t> factors;
  std::uint64_t m = f.p - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 2;; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(),
                          [&](std::uint64_t q) { return f.pow(g, (f.p - 1) / q) != 1; });
    if (ok) return g;
  }
}

// Row-reduces in place; returns pivot columns (one per remaining row).
std::vector<std::size_t> rref(Mat& m, const Fp& f) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    std::uint64_t iv = f.inv(m[row][c]);
    for (auto& v : m[row]) v = f.mul(v, iv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      std::uint64_t factor = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = f.sub(m[r][k], f.mul(factor, m[row][k]));
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

// basis (as rows) of {c : a c = 0}
Mat nullspace(Mat a, std::size_t cols, const Fp& f) {
  auto pivots = rref(a, f);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.sub(0, a[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial by Faddeev-LeVerrier; coefficients low to high.
Row charpoly(const Mat& a, const Fp& f) {
  const std::size_t n = a.size();
  Row c(n + 1, 0);
  c[n] = 1;
  Mat m(n, Row(n, 0));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Mat next(n, Row(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (m[l].empty()) continue;
        std::uint64_t ail = a[i][l];
        if (ail == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] = f.add(next[i][j], f.mul(ail, m[l][j]));
      }
      next[i][i] = f.add(next[i][i], c[n - k + 1]);
    }
    m = std::move(next);
    std::uint64_t tr = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) tr = f.add(tr, f.mul(a[i][l], m[l][i]));
    }
    c[n - k] = f.sub(0, f.mul(tr, f.inv(k % f.p)));
  }
  return c;
}

struct Subspace {
  Mat basis;  // RREF rows
  std::vector<std::size_t> pivots;
};

Subspace make_subspace(Mat rows, const Fp& f) {
  Subspace s;
  s.pivots = rref(rows, f);
  s.basis = std::move(rows);
  return s;
}

// Eigenspaces of m restricted to the invariant subspace v.
std::vector<Subspace> split(const Subspace& v, const Mat& m, const Fp& f) {
  const std::size_t d = v.basis.size();
  const std::size_t r = m.size();
  Mat a(d, Row(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Row& mrow = m[v.pivots[j]];
      std::uint64_t acc = 0;
      for (std::size_t l = 0; l < r; ++l) acc = f.add(acc, f.mul(mrow[l], v.basis[i][l]));
      a[j][i] = acc;
    }
  }
  Row poly = charpoly(a, f);
  std::vector<Subspace> out;
  std::size_t covered = 0;
  for (std::uint64_t lambda = 0; lambda < f.p && covered < d; ++lambda) {
    std::uint64_t val = 0;
    for (std::size_t k = poly.size(); k-- > 0;) val = f.add(f.mul(val, lambda), poly[k]);
    if (val != 0) continue;
    Mat shifted = a;
    for (std::size_t i = 0; i < d; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
    Mat ker = nullspace(shifted, d, f);
    if (ker.empty()) continue;
    Mat vecs;
    for (const auto& c : ker) {
      Row u(r, 0);
      for (std::size_t i = 0; i < d; ++i) {
        if (c[i] == 0) continue;
        for (std::size_t l = 0; l < r; ++l) u[l] = f.add(u[l], f.mul(c[i], v.basis[i][l]));
      }
      vecs.push_back(std::move(u));
    }
    covered += vecs.size();
    out.push_back(make_subspace(std::move(vecs), f));
  }
  if (covered != d) throw VerificationFailure("class matrix is not diagonalisable mod p");
  return out;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

}  // namespace

std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order) {
  const std::uint64_t lower = 2 * isqrt(order) + 1;  // p > 2 sqrt(order)
  for (std::uint64_t p = exponent + 1;; p += exponent) {
    if (p >= lower && 4 * order < p * p && is_prime(p)) return p;
  }
}

CharacterTable dixon_table(const ClassStructure& cs, std::uint64_t seed) {
  const std::size_t r = cs.classes().size();
  const std::uint64_t order = cs.order();
  const auto& elems = cs.elements();
  if (cs.exponent() > UINT32_MAX) throw CapExceeded("group exponent too large");

  CharacterTable t;
  t.group_order = order;
  t.exponent = static_cast<std::uint32_t>(cs.exponent());
  t.classes = cs.classes();
  for (std::size_t l = 0; l < r; ++l) t.inverse_class.push_back(cs.inverse_class(l));
  t.prime = dixon_prime(t.exponent, order);
  const Fp f{t.prime};

  // c[j][k][l] = #{(x, y) in C_j x C_k : xy = z_l}
  std::vector<std::uint64_t> c(r * r * r, 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const std::size_t j = cs.class_of_element(i);
    const Permutation x_inv = elems[i].inverse();
    for (std::size_t l = 0; l < r; ++l) {
      const std::size_t k = cs.class_of(x_inv * cs.classes()[l].representative);
      ++c[(j * r + k) * r + l];
    }
  }
  std::vector<Mat> class_matrices(r, Mat(r, Row(r, 0)));
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t l = 0; l < r; ++l) class_matrices[j][k][l] = c[(j * r + k) * r + l] % f.p;
    }
  }

  Mat whole(r, Row(r, 0));
  for (std::size_t i = 0; i < r; ++i) whole[i][i] = 1;
  std::vector<Subspace> work{make_subspace(whole, f)};
  std::vector<Row> eigenvectors;
  if (r == 1) {
    eigenvectors.push_back(Row{1});
    work.clear();
  }
  std::mt19937_64 rng(seed);
  for (std::size_t step = 1; !work.empty(); ++step) {
    if (step > r + 256) throw VerificationFailure("Dixon splitting did not terminate");
    Mat m;
    if (step < r) {
      m = class_matrices[step];
    } else {
      m.assign(r, Row(r, 0));
      for (std::size_t j = 1; j < r; ++j) {
        std::uint64_t coef = rng() % f.p;
        for (std::size_t k = 0; k < r; ++k) {
          for (std::size_t l = 0; l < r; ++l) m[k][l] = f.add(m[k][l], f.mul(coef, class_matrices[j][k][l]));
        }
      }
    }
    std::vector<Subspace> next;
    for (const auto& v : work) {
      for (auto& piece : split(v, m, f)) {
        if (piece.basis.size() == 1) {
          eigenvectors.push_back(piece.basis.front());
        } else {
          next.push_back(std::move(piece));
        }
      }
    }
    work = std::move(next);
  }
  if (eigenvectors.size() != r) throw VerificationFailure("wrong number of irreducible characters");

  // power maps along each class: class of rep^s for s = 0..o-1
  std::vector<std::vector<std::size_t>> powers(r);
  for (std::size_t l = 0; l < r; ++l) {
    const Permutation& g = cs.classes()[l].representative;
    Permutation cur = Permutation::identity(g.degree());
    for (std::uint64_t s = 0; s < cs.classes()[l].element_order; ++s) {
      powers[l].push_back(cs.class_of(cur));
      cur = cur * g;
    }
  }

  const std::uint64_t omega = primitive_root(f);
  const std::uint64_t max_degree = isqrt(order);
  for (const auto& raw : eigenvectors) {
    const std::uint64_t lead_inv = f.inv(raw[0]);
    Row w(r);
    for (std::size_t l = 0; l < r; ++l) w[l] = f.mul(raw[l], lead_inv);
    std::uint64_t norm = 0;
    for (std::size_t l = 0; l < r; ++l) {
      norm = f.add(norm, f.mul(f.mul(w[l], w[t.inverse_class[l]]), f.inv(t.classes[l].size % f.p)));
    }
    const std::uint64_t d2 = f.mul(order % f.p, f.inv(norm));
    std::uint64_t d = 0;
    for (std::uint64_t cand = 1; cand <= max_degree; ++cand) {
      if (f.mul(cand, cand) == d2) {
        d = cand;
        break;
      }
    }
    if (d == 0) throw VerificationFailure("no admissible character degree");
    Row theta(r);
    for (std::size_t l = 0; l < r; ++l) theta[l] = f.mul(f.mul(d, w[l]), f.inv(t.classes[l].size % f.p));

    std::vector<Cyclotomic> values(r);
    for (std::size_t l = 0; l < r; ++l) {
      const std::uint64_t o = t.classes[l].element_order;
      const std::uint64_t eps = f.pow(omega, (f.p - 1) / o);
      const std::uint64_t eps_inv = f.inv(eps);
      const std::uint64_t o_inv = f.inv(o % f.p);
      std::map<std::uint32_t, Rational> coeffs;
      for (std::uint64_t s = 0; s < o; ++s) {
        std::uint64_t acc = 0;
        const std::uint64_t step = f.pow(eps_inv, s);
        std::uint64_t e = 1;
        for (std::uint64_t tt = 0; tt < o; ++tt) {
          acc = f.add(acc, f.mul(theta[powers[l][tt]], e));
          e = f.mul(e, step);
        }
        std::uint64_t mult = f.mul(acc, o_inv);
        if (mult > d) throw VerificationFailure("eigenvalue multiplicity out of range");
        if (mult) coeffs[static_cast<std::uint32_t>(s)] = Rational(static_cast<unsigned long>(mult));
      }
      values[l] = Cyclotomic::from_powers(static_cast<std::uint32_t>(o), coeffs);
    }
    if (values[0] != Cyclotomic(Rational(static_cast<unsigned long>(d)))) {
      throw VerificationFailure("character degree does not lift");
    }
    t.rows.push_back(std::move(values));
    t.degrees.push_back(d);
  }

  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
    return std::lexicographical_compare_three_way(t.rows[a].begin(), t.rows[a].end(), t.rows[b].begin(),
                                                  t.rows[b].end()) < 0;
  });
  CharacterTable sorted = t;
  for (std::size_t i = 0; i < r; ++i) {
    sorted.rows[i] = t.rows[idx[i]];
    sorted.degrees[i] = t.degrees[idx[i]];
  }

  std::uint64_t sum_sq = 0;
  for (auto d : sorted.degrees) sum_sq += d * d;
  if (sum_sq != order) throw VerificationFailure("sum of squared degrees differs from |G|");
  if (!columns_orthogonal(sorted)) throw VerificationFailure("column orthogonality fails");
  return sorted;
}

bool columns_orthogonal(const CharacterTable& t) {
  const std::size_t r = t.rows.size();
  if (r != t.classes.size()) return false;
  std::vector<std::vector<Cyclotomic>> conj(r, std::vector<Cyclotomic>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t l = 0; l < r; ++l) conj[i][l] = t.rows[i][l].conj();
  }
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = k; l < r; ++l) {
      Cyclotomic sum;
      for (std::size_t i = 0; i < r; ++i) sum += t.rows[i][k] * conj[i][l];
      Cyclotomic want = k == l ? Cyclotomic(Rational(static_cast<unsigned long>(t.centralizer_order(k))))
                               : Cyclotomic();
      if (sum != want) return false;
    }
  }
  return true;
}

bool rows_orthonormal(const CharacterTable& t) {
  const std::size_t r = t.rows.size();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      Cyclotomic sum;
      for (std::size_t k = 0; k < t.classes.size(); ++k) {
        sum += t.rows[i][k] * t.rows[j][k].conj() * Rational(static_cast<unsigned long>(t.classes[k].size));
      }
      Cyclotomic want = i == j ? Cyclotomic(Rational(static_cast<unsigned long>(t.group_order))) : Cyclotomic();
      if (sum != want) return false;
    }
  }
  return true;
}

std::string format_table(const CharacterTable& t) {
  const std::size_t r = t.classes.size();
  std::vector<Cyclotomic> named;
  std::vector<std::string> names;
  auto cell = [&](const Cyclotomic& v) -> std::string {
    if (v.is_zero()) return ".";
    if (v.is_rational()) return to_string(v.rational());
    for (std::size_t i = 0; i < named.size(); ++i) {
      if (named[i] == v) return names[i];
      if (named[i].conj() == v) return "/" + names[i];
      if (-named[i] == v) return "-" + names[i];
      if (-named[i].conj() == v) return "-/" + names[i];
    }
    named.push_back(v);
    names.push_back(class_letters(names.size()));
    return names.back();
  };

  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{""};
  std::vector<std::string> cent{""};
  for (std::size_t k = 0; k < r; ++k) {
    cent.push_back(std::to_string(t.centralizer_order(k)));
    std::string l = t.classes[k].label;
    for (auto& ch : l) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    head.push_back(l);
  }
  grid.push_back(cent);
  grid.push_back(head);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    std::vector<std::string> row{"X." + std::to_string(i + 1)};
    for (const auto& v : t.rows[i]) row.push_back(cell(v));
    grid.push_back(std::move(row));
  }
  std::vector<std::size_t> width(r + 1, 0);
  for (const auto& row : grid) {
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  }
  std::ostringstream out;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    for (std::size_t k = 0; k < grid[g].size(); ++k) {
      out << std::setw(static_cast<int>(width[k] + (k ? 2 : 0))) << grid[g][k];
    }
    out << "\n";
    if (g == 1) out << "\n";
  }
  if (!names.empty()) out << "\n";
  for (std::size_t i = 0; i < names.size(); ++i) out << names[i] << " = " << named[i].str() << "\n";
  return out.str();
}

}  // namespace dessins
