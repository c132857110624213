#include "dessins/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "dessins/errors.hpp"

namespace dessins {

namespace {

struct PrimePart {
  std::uint32_t p;
  std::uint32_t q;       // p^k
  std::uint32_t step;    // p^(k-1)
  std::uint32_t bound;   // (p-1) p^(k-1)
  std::uint32_t cofactor;      // N / q
  std::uint32_t cofactor_inv;  // (N/q)^-1 mod q
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
  while (nr != 0) {
    std::int64_t qq = r / nr;
    t -= qq * nt;
    std::swap(t, nt);
    r -= qq * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

std::vector<PrimePart> prime_parts(std::uint32_t n) {
  std::vector<PrimePart> out;
  std::uint32_t rest = n;
  for (std::uint32_t p = 2; p * p <= rest || rest > 1; ++p) {
    if (p * p > rest) p = rest;
    if (rest % p != 0) continue;
    std::uint32_t q = 1;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
    }
    PrimePart pp{p, q, q / p, (p - 1) * (q / p), n / q, 0};
    pp.cofactor_inv = q == 1 ? 0 : static_cast<std::uint32_t>(mod_inverse(pp.cofactor % q, q));
    out.push_back(pp);
  }
  return out;
}

std::uint32_t mod_exp(long long k, std::uint32_t n) {
  long long r = k % static_cast<long long>(n);
  if (r < 0) r += n;
  return static_cast<std::uint32_t>(r);
}

void add_term(std::map<std::uint32_t, Rational>& t, std::uint32_t e, const Rational& c) {
  auto [it, fresh] = t.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  } else if (c == 0) {
    t.erase(it);
  }
}

}  // namespace

Cyclotomic::Cyclotomic(Rational r) {
  r.canonicalize();
  if (r != 0) terms_.emplace(0, std::move(r));
}

Cyclotomic::Cyclotomic(std::uint32_t n, std::map<std::uint32_t, Rational> terms)
    : n_(n), terms_(std::move(terms)) {
  reduce();
}

Cyclotomic Cyclotomic::zeta(std::uint32_t n, long long k) {
  if (n == 0) throw InvalidArgument("conductor must be positive");
  std::map<std::uint32_t, Rational> t;
  t.emplace(mod_exp(k, n), Rational(1));
  return Cyclotomic(n, std::move(t));
}

Cyclotomic Cyclotomic::from_powers(std::uint32_t n, const std::map<std::uint32_t, Rational>& coeffs) {
  if (n == 0) throw InvalidArgument("conductor must be positive");
  std::map<std::uint32_t, Rational> t;
  for (const auto& [e, c] : coeffs) add_term(t, e % n, c);
  return Cyclotomic(n, std::move(t));
}

void Cyclotomic::reduce() {
  for (const auto& pp : prime_parts(n_)) {
    std::map<std::uint32_t, Rational> out;
    for (const auto& [e, c] : terms_) {
      std::uint32_t a = static_cast<std::uint32_t>(
          (static_cast<std::uint64_t>(e) * pp.cofactor_inv) % pp.q);
      if (a < pp.bound) {
        add_term(out, e, c);
        continue;
      }
      // w^a = -sum_{j=0}^{p-2} w^(a - (p-1-j) p^(k-1))
      for (std::uint32_t j = 0; j + 1 < pp.p; ++j) {
        std::uint64_t shift = static_cast<std::uint64_t>(pp.p - 1 - j) * pp.step * pp.cofactor;
        std::uint32_t e2 = static_cast<std::uint32_t>((e + n_ - shift % n_) % n_);
        add_term(out, e2, -c);
      }
    }
    terms_ = std::move(out);
  }
}

Cyclotomic Cyclotomic::lifted(std::uint32_t m) const {
  if (m % n_ != 0) throw InvalidArgument("lift target must be a multiple of the conductor");
  if (m == n_) return *this;
  std::map<std::uint32_t, Rational> t;
  const std::uint32_t f = m / n_;
  for (const auto& [e, c] : terms_) t.emplace(e * f, c);
  return Cyclotomic(m, std::move(t));
}

bool Cyclotomic::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational Cyclotomic::rational() const {
  if (!is_rational()) throw InvalidArgument("cyclotomic " + str() + " is not rational");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Cyclotomic Cyclotomic::galois(long long k) const {
  if (std::gcd(mod_exp(k, n_), n_) != 1 && n_ > 1) throw InvalidArgument("galois exponent not a unit");
  std::map<std::uint32_t, Rational> t;
  for (const auto& [e, c] : terms_) {
    add_term(t, static_cast<std::uint32_t>((static_cast<std::uint64_t>(e) * mod_exp(k, n_)) % n_), c);
  }
  return Cyclotomic(n_, std::move(t));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const std::uint32_t m = std::lcm(n_, o.n_);
  if (m != n_) *this = lifted(m);
  if (o.n_ == m) {
    for (const auto& [e, c] : o.terms_) add_term(terms_, e, c);
  } else {
    for (const auto& [e, c] : o.lifted(m).terms_) add_term(terms_, e, c);
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  const std::uint32_t m = std::lcm(n_, o.n_);
  const Cyclotomic a = n_ == m ? *this : lifted(m);
  const Cyclotomic b = o.n_ == m ? o : o.lifted(m);
  std::map<std::uint32_t, Rational> t;
  for (const auto& [e1, c1] : a.terms_) {
    for (const auto& [e2, c2] : b.terms_) add_term(t, (e1 + e2) % m, c1 * c2);
  }
  *this = Cyclotomic(m, std::move(t));
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.terms_ == b.terms_;
  const std::uint32_t m = std::lcm(a.n_, b.n_);
  return a.lifted(m).terms_ == b.lifted(m).terms_;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  const std::uint32_t m = std::lcm(a.n_, b.n_);
  const auto ta = a.lifted(m).terms_;
  const auto tb = b.lifted(m).terms_;
  auto ia = ta.begin();
  auto ib = tb.begin();
  for (; ia != ta.end() && ib != tb.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first <=> ib->first;
    if (ia->second != ib->second) return ia->second < ib->second ? std::strong_ordering::less
                                                                 : std::strong_ordering::greater;
  }
  return ta.size() <=> tb.size();
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  for (const auto& [e, c] : terms_) {
    double angle = 2.0 * std::numbers::pi * e / n_;
    z += c.get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

std::string Cyclotomic::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    bool neg = c < 0;
    std::string piece;
    if (e == 0) {
      piece = to_string(mag);
    } else {
      std::string z = "E(" + std::to_string(n_) + ")" + (e == 1 ? "" : "^" + std::to_string(e));
      piece = mag == 1 ? z : to_string(mag) + "*" + z;
    }
    if (neg) {
      out += "-" + piece;
    } else {
      out += (out.empty() ? "" : "+") + piece;
    }
  }
  return out;
}

}  // namespace dessins
