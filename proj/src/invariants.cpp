#include "sqp/invariants.hpp"

#include <cassert>
#include <cstdlib>
#include <numeric>

namespace sqp {

LaurentPoly seifert_alexander_raw(const SeifertMatrix& V) {
  const std::size_t n = V.size();
  PolyMatrix m(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = LaurentPoly(V.entries[i][j]) -
                LaurentPoly::monomial(V.entries[j][i], 1);
  return poly_det(std::move(m));
}

LaurentPoly alexander_from_seifert(const SeifertMatrix& V) {
  return normalize(seifert_alexander_raw(V));
}

namespace {

PolyMatrix identity(std::size_t n) {
  PolyMatrix m(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = LaurentPoly(1);
  return m;
}

// Reduced Burau image of s_i^{±1} in B_n, acting on basis e_1..e_{n-1}.
PolyMatrix burau_letter(int n, int i, int sign) {
  const std::size_t d = static_cast<std::size_t>(n - 1);
  PolyMatrix m = identity(d);
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly tinv = LaurentPoly::monomial(1, -1);
  const std::size_t r = static_cast<std::size_t>(i - 1);  // 0-based row of e_i
  if (sign > 0) {
    m[r][r] = -t;
    if (i > 1) m[r][r - 1] = t;
    if (i < n - 1) m[r][r + 1] = LaurentPoly(1);
  } else {
    m[r][r] = -tinv;
    if (i > 1) m[r][r - 1] = LaurentPoly(1);
    if (i < n - 1) m[r][r + 1] = tinv;
  }
  return m;
}

PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size();
  PolyMatrix c(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

}  // namespace

PolyMatrix burau_reduced(const ArtinWord& b) {
  if (b.strands < 2)
    throw PreconditionViolated("reduced Burau needs at least 2 strands");
  PolyMatrix m = identity(static_cast<std::size_t>(b.strands - 1));
  for (const auto& l : b.letters) {
    if (l.index < 1 || l.index >= b.strands)
      throw PreconditionViolated("Artin generator index out of range");
    m = mul(m, burau_letter(b.strands, l.index, l.sign));
  }
  return m;
}

LaurentPoly burau_alexander_raw(const ArtinWord& b) {
  if (b.strands == 1) return LaurentPoly(1);
  PolyMatrix m = burau_reduced(b);
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= LaurentPoly(1);
  const LaurentPoly det = poly_det(std::move(m));
  // (1 - t^n)/(1 - t) = 1 + t + ... + t^{n-1}
  LaurentPoly cyclic;
  for (int e = 0; e < b.strands; ++e) cyclic += LaurentPoly::monomial(1, e);
  try {
    return det.exact_div(cyclic);
  } catch (const Error&) {
    throw NotCoprimePermutation();
  }
}

LaurentPoly alexander_from_burau(const ArtinWord& b) {
  return normalize(burau_alexander_raw(b));
}

LaurentPoly normalized_or_zero(const LaurentPoly& p) {
  return p.is_zero() ? p : normalize(p);
}

namespace {

// Exact rational for the congruence diagonalization; magnitudes stay tiny for
// the matrices this library produces.
struct Rat {
  long long num = 0, den = 1;

  static Rat make(long long n, long long d) {
    assert(d != 0);
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const long long g = std::gcd(std::abs(n), d);
    return {g ? n / g : 0, g ? d / g : 1};
  }
  bool zero() const { return num == 0; }
  Rat operator+(const Rat& o) const { return make(num * o.den + o.num * den, den * o.den); }
  Rat operator-(const Rat& o) const { return make(num * o.den - o.num * den, den * o.den); }
  Rat operator*(const Rat& o) const { return make(num * o.num, den * o.den); }
  Rat operator/(const Rat& o) const {
    assert(o.num != 0);
    return make(num * o.den, den * o.num);
  }
};

}  // namespace

int signature_of_symmetric(const IntMatrix& sym) {
  const std::size_t n = sym.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      assert(sym[i][j] == sym[j][i]);
      a[i][j] = Rat{sym[i][j], 1};
    }
  int sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].zero()) {
      std::size_t piv = n;
      for (std::size_t j = k + 1; j < n; ++j)
        if (!a[j][j].zero()) {
          piv = j;
          break;
        }
      if (piv < n) {
        std::swap(a[k], a[piv]);
        for (std::size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][piv]);
      } else {
        std::size_t off = n;
        for (std::size_t j = k + 1; j < n; ++j)
          if (!a[k][j].zero()) {
            off = j;
            break;
          }
        if (off == n) continue;  // null row, contributes 0
        for (std::size_t i = 0; i < n; ++i) a[k][i] = a[k][i] + a[off][i];
        for (std::size_t i = 0; i < n; ++i) a[i][k] = a[i][k] + a[i][off];
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].zero()) continue;
      const Rat f = a[i][k] / a[k][k];
      for (std::size_t j = 0; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
      for (std::size_t j = 0; j < n; ++j) a[j][i] = a[j][i] - f * a[j][k];
    }
    sig += (a[k][k].num > 0) - (a[k][k].num < 0);
  }
  return sig;
}

int signature(const SeifertMatrix& V) {
  const std::size_t n = V.size();
  IntMatrix sym(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sym[i][j] = V.entries[i][j] + V.entries[j][i];
  return signature_of_symmetric(sym);
}

LinkingMatrix linking_matrix(const BandWord& w) {
  const ClosureSummary cs = closure_summary(w);
  const ArtinWord a = artin_expand(w);
  const int m = cs.components;
  IntMatrix sum(m, std::vector<long long>(m, 0));
  std::vector<int> at(w.strands);  // position -> strand
  std::iota(at.begin(), at.end(), 1);
  for (const auto& l : a.letters) {
    const int u = at[l.index - 1];
    const int v = at[l.index];
    const int cu = cs.label(u), cv = cs.label(v);
    if (cu != cv) {
      sum[cu - 1][cv - 1] += l.sign;
      sum[cv - 1][cu - 1] += l.sign;
    }
    std::swap(at[l.index - 1], at[l.index]);
  }
  LinkingMatrix lk;
  lk.entries.assign(m, std::vector<long long>(m, 0));
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      assert(sum[p][q] % 2 == 0);
      lk.entries[p][q] = sum[p][q] / 2;
    }
  return lk;
}

ArtinWord extract_component(const BandWord& w, int component) {
  const ClosureSummary cs = closure_summary(w);
  if (component < 1 || component > cs.components) throw UnknownComponent(component);
  const ArtinWord a = artin_expand(w);
  std::vector<int> at(w.strands);  // position -> strand
  std::iota(at.begin(), at.end(), 1);
  const auto kept = [&](int strand) { return cs.label(strand) == component; };
  ArtinWord out;
  out.strands = 0;
  for (int s = 1; s <= w.strands; ++s)
    if (kept(s)) ++out.strands;
  for (const auto& l : a.letters) {
    const int u = at[l.index - 1];
    const int v = at[l.index];
    if (kept(u) && kept(v)) {
      int idx = 0;  // kept strands at positions strictly left of the crossing
      for (int p = 0; p < l.index - 1; ++p)
        if (kept(at[p])) ++idx;
      out.letters.push_back({idx + 1, l.sign});
    }
    std::swap(at[l.index - 1], at[l.index]);
  }
  return out;
}

}  // namespace sqp
