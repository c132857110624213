#include "dessins/finite_field.hpp"

#include <algorithm>

#include "dessins/errors.hpp"

namespace dessins {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), e};
}

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

// remainder of a by the monic m over F_p
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    }
    a.pop_back();
  }
  return a;
}

bool has_divisor_of_degree(const Poly& m, std::uint32_t p, std::size_t d) {
  // try every monic polynomial of degree d
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(d + 1, 0);
    f[d] = 1;
    std::uint64_t c = code;
    for (std::size_t i = 0; i < d; ++i, c /= p) f[i] = static_cast<std::uint32_t>(c % p);
    Poly r = poly_mod(m, f, p);
    if (std::all_of(r.begin(), r.end(), [](std::uint32_t v) { return v == 0; })) return true;
  }
  return false;
}

bool irreducible(const Poly& m, std::uint32_t p) {
  const std::size_t e = m.size() - 1;
  for (std::size_t d = 1; 2 * d <= e; ++d) {
    if (has_divisor_of_degree(m, p, d)) return false;
  }
  return true;
}

}  // namespace

FField::FField(std::uint32_t p, std::uint32_t e) : p_(p), e_(e), q_(1) {
  if (!is_prime(p) || e == 0) throw InvalidArgument("F_q needs a prime characteristic and positive degree");
  for (std::uint32_t i = 0; i < e; ++i) {
    if (q_ > 4096 / p) throw CapExceeded("field order above 4096");
    q_ *= p;
  }
  // least monic irreducible: enumerate c_{e-1}, ..., c_0 lexicographically
  if (e == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint32_t code = 0; code < q_; ++code) {
      Poly m(e + 1, 0);
      m[e] = 1;
      std::uint32_t c = code;
      for (std::uint32_t i = 0; i < e; ++i, c /= p) m[i] = c % p;
      if (m[0] != 0 && irreducible(m, p)) {
        modulus_ = m;
        break;
      }
    }
  }

  add_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  std::vector<std::uint32_t> da(e), db(e);
  auto digits = [&](Elem a, std::vector<std::uint32_t>& d) {
    for (std::uint32_t i = 0; i < e; ++i, a /= p) d[i] = a % p;
  };
  auto pack = [&](const std::vector<std::uint32_t>& d) {
    Elem v = 0;
    for (std::uint32_t i = e; i-- > 0;) v = v * p + d[i];
    return v;
  };
  for (Elem a = 0; a < q_; ++a) {
    digits(a, da);
    std::vector<std::uint32_t> n(e);
    for (std::uint32_t i = 0; i < e; ++i) n[i] = (p - da[i]) % p;
    neg_[a] = pack(n);
    for (Elem b = 0; b < q_; ++b) {
      digits(b, db);
      std::vector<std::uint32_t> s(e);
      for (std::uint32_t i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = pack(s);
    }
  }

  // multiplication through a primitive element found by trial
  auto slow_mul = [&](Elem a, Elem b) {
    digits(a, da);
    digits(b, db);
    Poly prod(2 * e - 1, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
      for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    Poly r = e == 1 ? Poly{prod[0] % p} : poly_mod(prod, modulus_, p);
    r.resize(e, 0);
    return pack(r);
  };
  for (Elem g = 1; g < q_; ++g) {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    Elem v = 1;
    bool primitive = true;
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
      if (k > 0 && v == 1) {
        primitive = false;
        break;
      }
      exp_[k] = v;
      log_[v] = k;
      v = slow_mul(v, g);
    }
    if (primitive && v == 1) {
      generator_ = g;
      return;
    }
  }
  throw VerificationFailure("no primitive element found");
}

FField FField::of_order(std::uint32_t q) {
  auto [p, e] = prime_power(q);
  if (p == 0) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  return FField(p, e);
}

FField::Elem FField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  std::uint32_t k = log_[a] + log_[b];
  if (k >= q_ - 1) k -= q_ - 1;
  return exp_[k];
}

FField::Elem FField::inv(Elem a) const {
  if (a == 0) throw InvalidArgument("division by zero in F_" + std::to_string(q_));
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FField::Elem FField::pow(Elem a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * k) % (q_ - 1)];
}

FField::Elem FField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

bool FField::is_square(Elem a) const { return a == 0 || p_ == 2 || log_[a] % 2 == 0; }

std::string FField::str(Elem a) const {
  if (e_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  std::string s;
  std::vector<std::uint32_t> d(e_);
  Elem v = a;
  for (std::uint32_t i = 0; i < e_; ++i, v /= p_) d[i] = v % p_;
  for (std::uint32_t i = e_; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || d[i] != 1) s += std::to_string(d[i]);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

}  // namespace dessins
