#include "sqp/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace sqp {

int LaurentPoly::min_exp() const {
  assert(!c_.empty());
  return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
  assert(!c_.empty());
  return c_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (auto [e, v] : c_) out.c_[e] = -v;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto [e, v] : o.c_) set(e, coeff(e) + v);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto [e, v] : o.c_) set(e, coeff(e) - v);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (auto [ea, va] : a.c_)
    for (auto [eb, vb] : b.c_) out.set(ea + eb, out.coeff(ea + eb) + va * vb);
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (auto [e, v] : c_) out.c_[e + k] = v;
  return out;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
  if (d.is_zero()) throw Error("division by zero polynomial");
  if (is_zero()) return {};
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const int dtop = d.max_exp();
  const long long dlead = d.coeff(dtop);
  while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >= dtop - d.min_exp()) {
    const int rtop = rem.max_exp();
    const long long rlead = rem.coeff(rtop);
    if (rlead % dlead != 0) throw Error("inexact polynomial division");
    const LaurentPoly term = monomial(rlead / dlead, rtop - dtop);
    quot += term;
    rem -= term * d;
  }
  if (!rem.is_zero()) throw Error("inexact polynomial division");
  return quot;
}

LaurentPoly LaurentPoly::reversed() const {
  LaurentPoly out;
  for (auto [e, v] : c_) out.c_[-e] = v;
  return out;
}

long long LaurentPoly::eval_at_one() const {
  long long s = 0;
  for (auto [e, v] : c_) s += v;
  return s;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto [e, v] : c_) {
    if (first) {
      if (v < 0) out << "-";
    } else {
      out << (v < 0 ? " - " : " + ");
    }
    first = false;
    const long long a = std::abs(v);
    if (a != 1 || e == 0) out << a;
    if (e != 0) {
      out << "t";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

LaurentPoly normalize(const LaurentPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  const int lo = p.min_exp();
  LaurentPoly out = p.shifted(-lo);
  if (out.coeff(0) < 0) out = -out;
  return out;
}

LaurentPoly poly_det(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  for (const auto& row : m) assert(row.size() == n);
  int sign = 1;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return {};
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev);
    prev = m[k][k];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace sqp
