#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "dessins/numeric.hpp"

namespace dessins {

// An element of Q(zeta_N), stored as rational coordinates on a fixed basis
// of zeta_N powers: writing N = prod q_i (q_i = p_i^k_i) and
// zeta_N^e = prod w_i^a_i with w_i a primitive q_i-th root, the basis is
// {a_i < (p_i - 1) p_i^(k_i - 1) for all i}. Representations in the same
// field are therefore unique, and values from different fields are compared
// after lifting to the lcm of their conductors.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(Rational r);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}   // NOLINT(google-explicit-constructor)

  // E(n)^k
  static Cyclotomic zeta(std::uint32_t n, long long k = 1);
  // sum of coeffs[k] * E(n)^k for arbitrary k, reduced
  static Cyclotomic from_powers(std::uint32_t n, const std::map<std::uint32_t, Rational>& coeffs);

  std::uint32_t conductor() const { return n_; }
  const std::map<std::uint32_t, Rational>& terms() const { return terms_; }

  // the same number written over Q(zeta_m); m must be a multiple of conductor()
  Cyclotomic lifted(std::uint32_t m) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational() const;  // throws InvalidArgument if not rational

  Cyclotomic conj() const { return galois(-1); }
  // zeta -> zeta^k, k coprime to the conductor
  Cyclotomic galois(long long k) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  // total order on a common field; used only for deterministic sorting
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

  std::complex<double> to_complex() const;
  // GAP-style text, e.g. "-1", "E(7)^3+E(7)^5+E(7)^6", "1/2*E(3)"
  std::string str() const;

 private:
  Cyclotomic(std::uint32_t n, std::map<std::uint32_t, Rational> terms);
  void reduce();

  std::uint32_t n_ = 1;
  std::map<std::uint32_t, Rational> terms_;
};

}  // namespace dessins
