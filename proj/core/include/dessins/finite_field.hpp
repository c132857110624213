#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dessins {

// F_q for q = p^e. Elements are integers 0..q-1 read as base-p digit
// vectors, least significant digit = constant coefficient, so the prime
// subfield is 0..p-1 in its usual order. The modulus is the least monic
// irreducible polynomial of degree e, comparing coefficients from the
// highest non-leading one down.
class FField {
 public:
  using Elem = std::uint32_t;

  FField(std::uint32_t p, std::uint32_t e);
  // q must be a prime power
  static FField of_order(std::uint32_t q);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  std::uint32_t order() const { return q_; }
  // coefficients c_0..c_e of the modulus, c_e = 1
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem generator() const { return generator_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws on 0
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;
  Elem frobenius(Elem a) const { return pow(a, p_); }
  Elem from_int(long long v) const;  // image of an integer in the prime field
  bool is_square(Elem a) const;

  // "2", or "x^2+1" style for extension fields
  std::string str(Elem a) const;

 private:
  std::uint32_t p_, e_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> add_, neg_;
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
  std::vector<Elem> exp_;           // exp_[k] = g^k, 0 <= k < q-1
  Elem generator_ = 1;
};

// Prime power decomposition: (p, e) with q = p^e, or (0, 0) if q is not one.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);
bool is_prime(std::uint64_t n);

}  // namespace dessins
