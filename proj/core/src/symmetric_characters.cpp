#include "dessins/symmetric_characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dessins/errors.hpp"

namespace dessins {

namespace {

std::size_t total(const Partition& p) { return std::accumulate(p.begin(), p.end(), std::size_t{0}); }

void extend(std::size_t left, std::size_t max_part, Partition& cur, std::vector<Partition>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = std::min(left, max_part); k >= 1; --k) {
    cur.push_back(k);
    extend(left - k, k, cur, out);
    cur.pop_back();
  }
}

using BetaSet = std::vector<std::size_t>;  // strictly increasing

BigInt mn(const BetaSet& beta, const Partition& mu, std::size_t from,
          std::map<std::pair<BetaSet, std::size_t>, BigInt>& memo) {
  if (from == mu.size()) return 1;
  auto key = std::make_pair(beta, from);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const std::size_t h = mu[from];
  BigInt sum = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const std::size_t b = beta[i];
    if (b < h) continue;
    const std::size_t target = b - h;
    if (std::binary_search(beta.begin(), beta.end(), target)) continue;
    // leg length: beta entries strictly between target and b
    auto lo = std::upper_bound(beta.begin(), beta.end(), target);
    auto hi = beta.begin() + static_cast<std::ptrdiff_t>(i);
    const auto between = static_cast<std::size_t>(hi - lo);
    BetaSet next = beta;
    next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
    next.insert(std::lower_bound(next.begin(), next.end(), target), target);
    BigInt v = mn(next, mu, from + 1, memo);
    if (between % 2) {
      sum -= v;
    } else {
      sum += v;
    }
  }
  memo.emplace(std::move(key), sum);
  return sum;
}

}  // namespace

std::vector<Partition> partitions(std::size_t n) {
  std::vector<Partition> out;
  Partition cur;
  extend(n, n, cur, out);
  return out;
}

BigInt factorial(std::size_t n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigInt sym_char_value(const Partition& lambda, const Partition& mu) {
  if (total(lambda) != total(mu)) throw InvalidArgument("partitions of different sizes");
  const std::size_t k = lambda.size();
  BetaSet beta(k);
  for (std::size_t i = 0; i < k; ++i) beta[k - 1 - i] = lambda[i] + (k - 1 - i);
  Partition mu_sorted = mu;
  std::sort(mu_sorted.rbegin(), mu_sorted.rend());
  std::map<std::pair<BetaSet, std::size_t>, BigInt> memo;
  return mn(beta, mu_sorted, 0, memo);
}

BigInt sym_class_size(const Partition& mu) {
  BigInt z = 1;
  std::map<std::size_t, std::size_t> mult;
  for (auto p : mu) ++mult[p];
  for (const auto& [part, m] : mult) {
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), part, m);
    z *= pw * factorial(m);
  }
  return factorial(total(mu)) / z;
}

namespace {

Rational frobenius_sum(std::size_t n, const Partition& a, const Partition& b, const Partition& c) {
  for (const auto* p : {&a, &b, &c}) {
    if (total(*p) != n) throw InvalidArgument("partition does not sum to the degree");
  }
  Rational sum = 0;
  const Partition identity(n, 1);
  for (const auto& rho : partitions(n)) {
    BigInt deg = sym_char_value(rho, identity);
    sum += Rational(sym_char_value(rho, a) * sym_char_value(rho, b) * sym_char_value(rho, c)) / Rational(deg);
  }
  sum.canonicalize();
  return sum;
}

}  // namespace

BigInt sym_triple_count(std::size_t n, const Partition& lambda, const Partition& mu,
                        const Partition& nu) {
  Rational v = frobenius_sum(n, lambda, mu, nu) *
               Rational(sym_class_size(lambda) * sym_class_size(mu) * sym_class_size(nu)) /
               Rational(factorial(n));
  v.canonicalize();
  if (!is_integer(v) || v < 0) throw VerificationFailure("Frobenius count over S_n is not a natural number");
  return v.get_num();
}

Rational weighted_passport_count(std::size_t n, const Partition& lambda, const Partition& mu,
                                 const Partition& nu) {
  Rational v(sym_triple_count(n, lambda, mu, nu), factorial(n));
  v.canonicalize();
  return v;
}

}  // namespace dessins
