#pragma once

// Dense univariate polynomials over a field element type K (Rat or FpElem),
// plus bivariate polynomials in x whose coefficients live in K[s].  Resultants
// of bivariate polynomials are taken with Sylvester matrices over K[s] and
// fraction-free (Bareiss) elimination, so everything stays exact.

#include <algorithm>
#include <vector>

#include "field.hpp"

namespace ellmod {

template <class K>
class Poly {
 public:
  // coefficients ascending; empty vector = zero polynomial
  std::vector<K> c;

  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }
  static Poly constant(const K& k) {
    if (is_zero(k)) return Poly();
    return Poly(std::vector<K>{k});
  }

  void trim() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }

  bool zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for 0

  const K& lead() const {
    check_internal(!c.empty(), "leading coefficient of zero polynomial");
    return c.back();
  }

  K eval(const K& x) const {
    if (c.empty()) return x - x;
    K acc = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> r(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.size(); ++i) {
      if (i < a.c.size() && i < b.c.size()) r[i] = a.c[i] + b.c[i];
      else if (i < a.c.size()) r[i] = a.c[i];
      else r[i] = b.c[i];
    }
    return Poly(std::move(r));
  }

  friend Poly operator-(const Poly& a) {
    std::vector<K> r(a.c.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = -a.c[i];
    return Poly(std::move(r));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return Poly();
    std::vector<K> r(a.c.size() + b.c.size() - 1, a.c.front() - a.c.front());
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(r));
  }

  friend Poly operator*(const Poly& a, const K& k) {
    std::vector<K> r(a.c.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.c[i] * k;
    return Poly(std::move(r));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
};

template <class K>
Poly<K> poly_shift(const Poly<K>& a, int k) {  // multiply by s^k
  if (a.zero()) return a;
  std::vector<K> r(a.c.size() + k, a.c.front() - a.c.front());
  for (size_t i = 0; i < a.c.size(); ++i) r[i + k] = a.c[i];
  return Poly<K>(std::move(r));
}

template <class K>
Poly<K> poly_deriv(const Poly<K>& a) {
  if (a.degree() < 1) return Poly<K>();
  std::vector<K> r(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i)
    r[i - 1] = a.c[i] * elem_from_int(a.c[i], static_cast<long long>(i));
  return Poly<K>(std::move(r));
}

template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(const Poly<K>& a, const Poly<K>& b) {
  check_internal(!b.zero(), "polynomial division by zero");
  Poly<K> rem = a, quot;
  if (a.degree() >= b.degree())
    quot.c.assign(a.degree() - b.degree() + 1, b.lead() - b.lead());
  while (!rem.zero() && rem.degree() >= b.degree()) {
    K q = rem.lead() / b.lead();
    int shift = rem.degree() - b.degree();
    quot.c[shift] = q;
    rem = rem - poly_shift(b * q, shift);
  }
  quot.trim();
  return {quot, rem};
}

template <class K>
Poly<K> poly_exact_div(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = poly_divmod(a, b);
  check_internal(r.zero(), "polynomial division expected to be exact");
  return q;
}

template <class K>
Poly<K> poly_monic(const Poly<K>& a) {
  if (a.zero()) return a;
  K inv = elem_from_int(a.lead(), 1) / a.lead();
  return a * inv;
}

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.zero()) {
    auto [q, r] = poly_divmod(a, b);
    (void)q;
    a = b;
    b = r;
  }
  return poly_monic(a);
}

template <class K>
bool poly_squarefree(const Poly<K>& a) {
  if (a.degree() <= 0) return true;
  return poly_gcd(a, poly_deriv(a)).degree() == 0;
}

template <class K>
bool poly_coprime(const Poly<K>& a, const Poly<K>& b) {
  check_internal(!a.zero() && !b.zero(), "coprimality of a zero polynomial");
  return poly_gcd(a, b).degree() == 0;
}

// Rational polynomials of interesting degree make the Euclidean remainder
// sequence explode, so coprimality is certified mod p first: with both
// degrees preserved, reduction commutes with the Sylvester determinant, and
// a unit gcd mod p proves Res != 0 over Q.  Only actually entangled inputs
// fall through to the exact computation.
inline std::optional<Poly<FpElem>> poly_reduce_mod(const Poly<Rat>& f, const GFp& field) {
  std::vector<FpElem> c;
  for (const auto& q : f.c) {
    if (mpz_fdiv_ui(q.get_den().get_mpz_t(), field.p) == 0) return std::nullopt;
    c.push_back(field.from_rat(q));
  }
  Poly<FpElem> out(std::move(c));
  if (out.degree() != f.degree()) return std::nullopt;
  return out;
}

inline bool poly_coprime(const Poly<Rat>& a, const Poly<Rat>& b) {
  check_internal(!a.zero() && !b.zero(), "coprimality of a zero polynomial");
  if (a.degree() == 0 || b.degree() == 0) return true;
  static const uint64_t primes[] = {1000003, 1000033, 1000037, 1000039, 1000099};
  for (uint64_t p : primes) {
    GFp field(p);
    auto ra = poly_reduce_mod(a, field);
    auto rb = poly_reduce_mod(b, field);
    if (!ra || !rb) continue;
    if (poly_gcd(*ra, *rb).degree() == 0) return true;
  }
  return poly_gcd(a, b).degree() == 0;
}

inline bool poly_squarefree(const Poly<Rat>& a) {
  if (a.degree() <= 0) return true;
  return poly_coprime(a, poly_deriv(a));
}

// Resultant over the coefficient field K via the Euclidean remainder sequence.
template <class K>
K poly_resultant(Poly<K> a, Poly<K> b) {
  check_internal(!a.zero() && !b.zero(), "resultant of zero polynomial");
  K one = elem_from_int(a.lead(), 1);
  K res = one;
  while (true) {
    int da = a.degree(), db = b.degree();
    if (db == 0) {
      K lb = b.lead();
      K acc = one;
      for (int i = 0; i < da; ++i) acc = acc * lb;
      return res * acc;
    }
    auto [q, r] = poly_divmod(a, b);
    (void)q;
    if (r.zero()) return elem_from_int(one, 0);
    K lb = b.lead();
    K acc = one;
    for (int i = 0; i < da - r.degree(); ++i) acc = acc * lb;
    if ((da % 2) == 1 && (db % 2) == 1) res = -res;
    res = res * acc;
    a = b;
    b = r;
  }
}

template <class K>
std::string poly_str(const Poly<K>& a, const std::string& var = "s") {
  if (a.zero()) return "0";
  std::string out;
  for (int i = a.degree(); i >= 0; --i) {
    if (is_zero(a.c[i])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + elem_str(a.c[i]) + ")";
    if (i > 0) out += "*" + var + "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bivariate: polynomial in x with coefficients in K[s].

template <class K>
struct Poly2 {
  std::vector<Poly<K>> cx;  // cx[i] = coefficient of x^i, a poly in s

  void trim() {
    while (!cx.empty() && cx.back().zero()) cx.pop_back();
  }
  bool zero() const { return cx.empty(); }
  int degree_x() const { return static_cast<int>(cx.size()) - 1; }
  const Poly<K>& lead_x() const {
    check_internal(!cx.empty(), "lead of zero bivariate polynomial");
    return cx.back();
  }
  Poly<K> coeff_x(size_t i) const { return i < cx.size() ? cx[i] : Poly<K>(); }

  // specialize s = s0, returning a univariate polynomial in x
  Poly<K> eval_s(const K& s0) const {
    std::vector<K> r;
    r.reserve(cx.size());
    for (const auto& p : cx) r.push_back(p.eval(s0));
    return Poly<K>(std::move(r));
  }

  friend Poly2 operator+(const Poly2& a, const Poly2& b) {
    Poly2 r;
    r.cx.resize(std::max(a.cx.size(), b.cx.size()));
    for (size_t i = 0; i < r.cx.size(); ++i) {
      if (i < a.cx.size()) r.cx[i] += a.cx[i];
      if (i < b.cx.size()) r.cx[i] += b.cx[i];
    }
    r.trim();
    return r;
  }
  friend Poly2 operator-(const Poly2& a, const Poly2& b) {
    Poly2 r;
    r.cx.resize(std::max(a.cx.size(), b.cx.size()));
    for (size_t i = 0; i < r.cx.size(); ++i) {
      if (i < a.cx.size()) r.cx[i] += a.cx[i];
      if (i < b.cx.size()) r.cx[i] -= b.cx[i];
    }
    r.trim();
    return r;
  }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    if (a.zero() || b.zero()) return r;
    r.cx.resize(a.cx.size() + b.cx.size() - 1);
    for (size_t i = 0; i < a.cx.size(); ++i)
      for (size_t j = 0; j < b.cx.size(); ++j) r.cx[i + j] += a.cx[i] * b.cx[j];
    r.trim();
    return r;
  }
};

template <class K>
Poly2<K> poly2_from_coeffs(std::vector<Poly<K>> coeffs) {
  Poly2<K> r;
  r.cx = std::move(coeffs);
  r.trim();
  return r;
}

template <class K>
Poly2<K> poly2_deriv_x(const Poly2<K>& a) {
  Poly2<K> r;
  if (a.degree_x() < 1) return r;
  r.cx.resize(a.cx.size() - 1);
  for (size_t i = 1; i < a.cx.size(); ++i) {
    // multiply by the integer i inside K[s]
    Poly<K> term = a.cx[i];
    if (!term.zero()) term = term * elem_from_int(term.c.front(), static_cast<long long>(i));
    r.cx[i - 1] = term;
  }
  r.trim();
  return r;
}

// Determinant of a square matrix over K[s] by fraction-free Bareiss
// elimination; every intermediate division is exact in K[s].
template <class K>
Poly<K> polymat_det(std::vector<std::vector<Poly<K>>> m) {
  size_t n = m.size();
  if (n == 0) return Poly<K>();
  int sign = 1;
  Poly<K> prev;  // previous pivot; starts as 1
  bool have_prev = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].zero()) ++swap_row;
      if (swap_row == n) return Poly<K>();  // singular
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Poly<K> num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = have_prev ? poly_exact_div(num, prev) : num;
      }
      m[i][k] = Poly<K>();
    }
    prev = m[k][k];
    have_prev = true;
  }
  Poly<K> det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

// Res_x(a, b) for bivariate polynomials, as an element of K[s].
template <class K>
Poly<K> poly2_resultant_x(const Poly2<K>& a, const Poly2<K>& b) {
  int da = a.degree_x(), db = b.degree_x();
  check_internal(da >= 0 && db >= 0, "resultant of zero bivariate polynomial");
  if (da == 0 && db == 0) return Poly<K>::constant(elem_from_int(a.cx[0].c.front(), 1));
  size_t n = static_cast<size_t>(da + db);
  std::vector<std::vector<Poly<K>>> syl(n, std::vector<Poly<K>>(n));
  for (int r = 0; r < db; ++r)
    for (int i = 0; i <= da; ++i) syl[r][r + da - i] = a.coeff_x(i);
  for (int r = 0; r < da; ++r)
    for (int i = 0; i <= db; ++i) syl[db + r][r + db - i] = b.coeff_x(i);
  return polymat_det(std::move(syl));
}

// disc_x(a) = (-1)^{d(d-1)/2} Res_x(a, da/dx) / lc_x(a), exactly, via the
// Sylvester determinant over K[s].
template <class K>
Poly<K> poly2_disc_x_sylvester(const Poly2<K>& a) {
  int d = a.degree_x();
  check_internal(d >= 1, "discriminant needs degree >= 1 in x");
  Poly<K> res = poly2_resultant_x(a, poly2_deriv_x(a));
  Poly<K> disc = poly_exact_div(res, a.lead_x());
  if (((d * (d - 1)) / 2) % 2 == 1) disc = -disc;
  return disc;
}

// Same discriminant by exact evaluation and Lagrange interpolation: much
// cheaper than Bareiss elimination once coefficient degrees grow.  Sample
// points with a leading-coefficient drop are skipped (the specialized
// discriminant is a different polynomial there).
template <class K>
Poly<K> poly2_disc_x(const Poly2<K>& a) {
  int d = a.degree_x();
  check_internal(d >= 1, "discriminant needs degree >= 1 in x");
  int m = 0;
  for (const auto& c : a.cx) m = std::max(m, c.degree());
  int bound = (2 * d - 1) * m;  // Sylvester row bound on deg_s
  if constexpr (std::is_same_v<K, FpElem>) {
    // small fields may not have enough sample points
    uint64_t p = a.lead_x().c.front().p;
    if (p < static_cast<uint64_t>(bound + d * m + 8)) return poly2_disc_x_sylvester(a);
  }

  K model = a.lead_x().c.front();
  std::vector<K> xs, ys;
  xs.reserve(bound + 1);
  for (long long i = 0; static_cast<int>(xs.size()) <= bound; ++i) {
    K s0 = elem_from_int(model, i);
    Poly<K> f = a.eval_s(s0);
    if (f.degree() != d) continue;
    Poly<K> fp = poly_deriv(f);
    K res = poly_resultant(f, fp);
    K disc = res / f.lead();
    if (((d * (d - 1)) / 2) % 2 == 1) disc = -disc;
    xs.push_back(s0);
    ys.push_back(disc);
  }

  // Newton form of the interpolant: divided differences, then expansion
  size_t np = xs.size();
  std::vector<K> dd = ys;
  for (size_t level = 1; level < np; ++level)
    for (size_t i = np - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  Poly<K> acc;
  for (size_t i = np; i-- > 0;) {
    Poly<K> shifted = acc * Poly<K>(std::vector<K>{-xs[i], elem_from_int(model, 1)});
    acc = shifted + Poly<K>::constant(dd[i]);
  }
  return acc;
}

}  // namespace ellmod
