#pragma once

#include <map>
#include <string>
#include <vector>

#include "sqp/errors.hpp"

namespace sqp {

/// Integer Laurent polynomial in one variable t. No zero coefficients are
/// stored; the empty map is the zero polynomial.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long constant) {  // NOLINT: implicit by design
    if (constant != 0) c_[0] = constant;
  }

  static LaurentPoly monomial(long long coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) p.c_[exp] = coeff;
    return p;
  }
  static LaurentPoly t() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  const std::map<int, long long>& coefficients() const { return c_; }
  long long coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? 0 : it->second;
  }
  int min_exp() const;  // requires non-zero
  int max_exp() const;  // requires non-zero

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Shift by t^k.
  LaurentPoly shifted(int k) const;

  /// Exact quotient; throws Error if this is not a multiple of d.
  LaurentPoly exact_div(const LaurentPoly& d) const;

  /// Substitute t -> t^{-1}.
  LaurentPoly reversed() const;

  long long eval_at_one() const;

  /// Human form like "1 - 3t + t^2".
  std::string str() const;

 private:
  std::map<int, long long> c_;
  void set(int exp, long long v) {
    if (v == 0)
      c_.erase(exp);
    else
      c_[exp] = v;
  }
};

/// Canonical unit normalization: lowest exponent 0, lowest coefficient
/// positive. Throws ZeroPolynomial.
LaurentPoly normalize(const LaurentPoly& p);

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// Exact determinant by fraction-free (Bareiss) elimination.
LaurentPoly poly_det(PolyMatrix m);

}  // namespace sqp
