#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include <gmpxx.h>

#include "dessins/errors.hpp"

namespace dessins {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
  Rational c = v;
  c.canonicalize();
  return c.get_str();
}

inline std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    throw CapExceeded("integer " + v.get_str() + " does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

inline BigInt from_u64(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

// lcm with overflow detection
inline std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  std::uint64_t g = std::gcd(a, b);
  std::uint64_t q = a / g;
  if (q > UINT64_MAX / b) throw CapExceeded("lcm overflows 64 bits");
  return q * b;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace dessins
