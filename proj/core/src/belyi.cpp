#include "dessins/belyi.hpp"

#include "dessins/errors.hpp"

namespace dessins {

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
  // a^2 = -3a - 4
  const Rational sq = x.c1 * y.c1;
  return {x.c0 * y.c0 - 4 * sq, x.c0 * y.c1 + x.c1 * y.c0 - 3 * sq};
}

QuadElem QuadElem::conj() const { return {c0 - 3 * c1, -c1}; }

Rational QuadElem::norm() const {
  Rational n = c0 * c0 - 3 * c0 * c1 + 4 * c1 * c1;
  n.canonicalize();
  return n;
}

QuadElem QuadElem::inverse() const {
  const Rational n = norm();
  if (n == 0) throw InvalidArgument("division by zero in Q(a)");
  const QuadElem c = conj();
  return {c.c0 / n, c.c1 / n};
}

std::string QuadElem::str() const {
  if (c1 == 0) return to_string(c0);
  std::string s = c0 == 0 ? "" : to_string(c0) + (c1 > 0 ? "+" : "");
  return s + (c1 == 1 ? "" : c1 == -1 ? "-" : to_string(c1) + "*") + "a";
}

QuadPoly::QuadPoly(std::vector<QuadElem> coeffs) : c_(std::move(coeffs)) { trim(); }

void QuadPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QuadPoly operator+(const QuadPoly& p, const QuadPoly& q) {
  std::vector<QuadElem> c(std::max(p.c_.size(), q.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) + q.coeff(i);
  return QuadPoly(std::move(c));
}

QuadPoly operator-(const QuadPoly& p, const QuadPoly& q) {
  std::vector<QuadElem> c(std::max(p.c_.size(), q.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) - q.coeff(i);
  return QuadPoly(std::move(c));
}

QuadPoly operator*(const QuadPoly& p, const QuadPoly& q) {
  if (p.c_.empty() || q.c_.empty()) return {};
  std::vector<QuadElem> c(p.c_.size() + q.c_.size() - 1);
  for (std::size_t i = 0; i < p.c_.size(); ++i) {
    for (std::size_t j = 0; j < q.c_.size(); ++j) c[i + j] = c[i + j] + p.c_[i] * q.c_[j];
  }
  return QuadPoly(std::move(c));
}

QuadPoly QuadPoly::derivative() const {
  std::vector<QuadElem> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(QuadElem{static_cast<long>(i), 0} * c_[i]);
  return QuadPoly(std::move(c));
}

QuadPoly QuadPoly::pow(unsigned k) const {
  QuadPoly r = constant({1, 0});
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::string QuadPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[i].str() + ")";
    if (i >= 1) s += "*t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

namespace {

// first differing monomial, or empty
std::string mismatch(const QuadPoly& lhs, const QuadPoly& rhs) {
  const std::size_t n = static_cast<std::size_t>(std::max(lhs.degree(), rhs.degree()) + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(lhs.coeff(i) == rhs.coeff(i))) {
      return "t^" + std::to_string(i) + ": " + lhs.coeff(i).str() + " vs " + rhs.coeff(i).str();
    }
  }
  return {};
}

QuadElem q(long c0, long c1) { return {c0, c1}; }

}  // namespace

std::vector<BelyiCheck> verify_klein_tree_belyi() {
  const QuadElem a = QuadElem::a();
  const QuadPoly t({q(0, 0), q(1, 0)});
  auto c = [](const QuadElem& e) { return QuadPoly::constant(e); };

  // K = -1/(2^6 3^3 (7a + 17))
  const QuadElem k = -(q(17 * 1728, 7 * 1728).inverse());
  const QuadPoly black = t * t + c(q(0, 7));                     // t^2 + 7a
  const QuadPoly white2 = t * t - c(q(6, 0)) * t + c(a);         // t^2 - 6t + a
  const QuadPoly cubic({q(108, 83), q(24, 19), q(5, 0), q(1, 0)});  // P
  const QuadPoly f = c(k) * black.pow(3) * (t - c(q(7, 0)));

  std::vector<BelyiCheck> out;
  {
    const QuadPoly lhs = f - c(q(1, 0));
    const QuadPoly rhs = c(k) * white2.pow(2) * cubic;
    std::string m = mismatch(lhs, rhs);
    out.push_back({"f - 1 = K (t^2-6t+a)^2 P", m.empty(), m.empty() ? "deg f = 7" : m});
  }
  {
    // s = 2a + 3 squares to -7
    const QuadElem s = q(3, 2);
    BelyiCheck check{"P = Q R over Q(sqrt(-7))", false, ""};
    if (!(s * s == q(-7, 0))) {
      check.detail = "(2a+3)^2 != -7";
    } else {
      for (int sign : {1, -1}) {
        const QuadElem r = sign == 1 ? s : -s;
        const QuadElem half{Rational(1, 2), 0};
        const QuadPoly qq = t * t + c(q(1, 0) + r) * t + c(half * (q(-31, 0) + q(13, 0) * r));
        const QuadPoly rr = t + c(q(4, 0) - r);
        if (mismatch(qq * rr, cubic).empty()) {
          check.passed = true;
          check.detail = std::string("sqrt(-7) = ") + (sign == 1 ? "" : "-") + "(2a+3)";
          break;
        }
      }
      if (!check.passed) check.detail = mismatch(c(q(1, 0)), c(q(0, 0))) + " for both signs";
    }
    out.push_back(check);
  }
  {
    const QuadPoly df = f.derivative();
    const QuadPoly rhs = c(q(7, 0) * k) * black.pow(2) * white2;
    std::string m = mismatch(df, rhs);
    out.push_back({"f' = 7K (t^2+7a)^2 (t^2-6t+a)", m.empty(), m.empty() ? "deg f' = 6" : m});
  }
  {
    const Rational n = k.norm();
    const QuadElem prod = k * k.conj();
    const bool ok = prod.c1 == 0 && prod.c0 == n;
    out.push_back({"K times its conjugate is rational", ok, "N(K) = " + to_string(n)});
  }
  return out;
}

}  // namespace dessins
