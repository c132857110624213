#pragma once

#include <string>
#include <vector>

#include "dessins/numeric.hpp"

namespace dessins {

// c0 + c1 a in Q(a) with a^2 + 3a + 4 = 0.
struct QuadElem {
  Rational c0, c1;

  static QuadElem a() { return {0, 1}; }
  QuadElem conj() const;  // a -> -3 - a
  Rational norm() const;
  QuadElem inverse() const;  // throws on zero
  bool is_zero() const { return c0 == 0 && c1 == 0; }
  std::string str() const;

  friend QuadElem operator+(const QuadElem& x, const QuadElem& y) { return {x.c0 + y.c0, x.c1 + y.c1}; }
  friend QuadElem operator-(const QuadElem& x, const QuadElem& y) { return {x.c0 - y.c0, x.c1 - y.c1}; }
  friend QuadElem operator-(const QuadElem& x) { return {-x.c0, -x.c1}; }
  friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
  friend bool operator==(const QuadElem& x, const QuadElem& y) { return x.c0 == y.c0 && x.c1 == y.c1; }
};

// Dense polynomial in t, lowest degree first, no trailing zeros.
class QuadPoly {
 public:
  QuadPoly() = default;
  QuadPoly(std::vector<QuadElem> coeffs);
  static QuadPoly constant(const QuadElem& c) { return QuadPoly({c}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<QuadElem>& coeffs() const { return c_; }
  QuadElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : QuadElem{}; }
  QuadPoly derivative() const;
  QuadPoly pow(unsigned k) const;
  std::string str() const;

  friend QuadPoly operator+(const QuadPoly& p, const QuadPoly& q);
  friend QuadPoly operator-(const QuadPoly& p, const QuadPoly& q);
  friend QuadPoly operator*(const QuadPoly& p, const QuadPoly& q);
  friend bool operator==(const QuadPoly& p, const QuadPoly& q) { return p.c_ == q.c_; }

 private:
  void trim();
  std::vector<QuadElem> c_;
};

struct BelyiCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // mismatching monomial, or the chosen sign
};

// The identities for the two Fano trees: f - 1 = K (t^2-6t+a)^2 P, the
// factorisation P = Q R with s = +-(2a+3), and f' = 7K (t^2+7a)^2 (t^2-6t+a).
std::vector<BelyiCheck> verify_klein_tree_belyi();

}  // namespace dessins
