#pragma once

// Exact short-Weierstrass arithmetic y^2 = x^3 + b2 x + b3 over Q or F_p
// (p > 3), with the chord–tangent group law, two-torsion, Riemann–Roch
// monomial bases for multiples of the origin, and exhaustive enumeration
// over small prime fields.

#include <cassert>
#include <optional>
#include <vector>

#include "field.hpp"

namespace ellmod {

template <class F>
struct EcPoint {
  bool inf = true;
  typename F::Elem x{};
  typename F::Elem y{};

  static EcPoint zero() { return EcPoint{}; }
  static EcPoint affine(typename F::Elem px, typename F::Elem py) {
    return EcPoint{false, std::move(px), std::move(py)};
  }
  friend bool operator==(const EcPoint& a, const EcPoint& b) {
    if (a.inf || b.inf) return a.inf == b.inf;
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const EcPoint& a, const EcPoint& b) { return !(a == b); }
  friend bool operator<(const EcPoint& a, const EcPoint& b) {
    if (a.inf != b.inf) return a.inf;  // Zero sorts first
    if (a.inf) return false;
    if (!(a.x == b.x)) return elem_str(a.x) < elem_str(b.x);
    return elem_str(a.y) < elem_str(b.y);
  }
};

template <class F>
struct WeierstrassCurve {
  F field;
  typename F::Elem b2;
  typename F::Elem b3;

  WeierstrassCurve(F f, typename F::Elem pb2, typename F::Elem pb3)
      : field(std::move(f)), b2(std::move(pb2)), b3(std::move(pb3)) {
    // note: gmpxx expression templates make `auto` on arithmetic unsafe;
    // results are always materialized into Elem throughout this codebase
    typename F::Elem disc = field.from_int(4) * b2 * b2 * b2;
    disc = disc + field.from_int(27) * b3 * b3;
    require(!is_zero(disc), "singular curve: 4*b2^3 + 27*b3^2 = 0");
  }

  typename F::Elem rhs(const typename F::Elem& x) const {
    typename F::Elem v = x * x * x;
    v = v + b2 * x + b3;
    return v;
  }

  bool contains(const EcPoint<F>& p) const {
    if (p.inf) return true;
    return p.y * p.y == rhs(p.x);
  }
};

template <class F>
EcPoint<F> ec_neg(const EcPoint<F>& p) {
  if (p.inf) return p;
  return EcPoint<F>::affine(p.x, -p.y);
}

template <class F>
EcPoint<F> ec_add(const WeierstrassCurve<F>& c, const EcPoint<F>& p, const EcPoint<F>& q) {
  if (p.inf) return q;
  if (q.inf) return p;
  using Elem = typename F::Elem;
  if (p.x == q.x) {
    if (!(p.y == q.y)) return EcPoint<F>::zero();  // inverse pair
    if (is_zero(p.y)) return EcPoint<F>::zero();   // 2-torsion doubling
    Elem num = c.field.from_int(3) * p.x * p.x;
    num = num + c.b2;
    Elem den = c.field.from_int(2) * p.y;
    Elem lambda = num / den;
    Elem x3 = lambda * lambda - p.x - q.x;
    Elem y3 = lambda * (p.x - x3) - p.y;
    return EcPoint<F>::affine(x3, y3);
  }
  Elem lambda = (q.y - p.y) / (q.x - p.x);
  Elem x3 = lambda * lambda - p.x - q.x;
  Elem y3 = lambda * (p.x - x3) - p.y;
  EcPoint<F> r = EcPoint<F>::affine(x3, y3);
  assert(c.contains(r));  // closure, checked in debug builds
  return r;
}

template <class F>
EcPoint<F> ec_scalar_mul(const WeierstrassCurve<F>& c, int64_t n, const EcPoint<F>& p) {
  if (n == 0) return EcPoint<F>::zero();
  EcPoint<F> base = n < 0 ? ec_neg(p) : p;
  uint64_t e = n < 0 ? static_cast<uint64_t>(-(n + 1)) + 1 : static_cast<uint64_t>(n);
  EcPoint<F> acc = EcPoint<F>::zero();
  while (e) {
    if (e & 1) acc = ec_add(c, acc, base);
    base = ec_add(c, base, base);
    e >>= 1;
  }
  return acc;
}

// Roots of the cubic x^3 + b2 x + b3 that lie in the base field.
std::vector<Rat> rational_cubic_roots(const Rat& b2, const Rat& b3);

inline std::vector<FpElem> fp_cubic_roots(const GFp& f, const FpElem& b2, const FpElem& b3) {
  require(f.p <= 1000000, "F_p cubic root scan guarded to p <= 10^6");
  std::vector<FpElem> roots;
  for (uint64_t x = 0; x < f.p; ++x) {
    FpElem xe{x, f.p};
    if (is_zero(xe * xe * xe + b2 * xe + b3)) roots.push_back(xe);
  }
  return roots;
}

// Zero plus one affine (e, 0) per root of the cubic in the field; the count
// is reported honestly (4 only when the cubic splits).
template <class F>
std::vector<EcPoint<F>> two_torsion(const WeierstrassCurve<F>& c) {
  std::vector<EcPoint<F>> pts{EcPoint<F>::zero()};
  if constexpr (F::is_rational_field) {
    for (const Rat& e : rational_cubic_roots(c.b2, c.b3))
      pts.push_back(EcPoint<F>::affine(e, Rat(0)));
  } else {
    for (const FpElem& e : fp_cubic_roots(c.field, c.b2, c.b3))
      pts.push_back(EcPoint<F>::affine(e, c.field.zero()));
  }
  return pts;
}

// x^i y^j with j <= 1 and pole order 2i + 3j at the origin.
struct RRMonomial {
  int i = 0;
  int j = 0;
  int pole_order() const { return 2 * i + 3 * j; }
  std::string name() const;

  template <class K>
  K eval(const K& x, const K& y) const {
    K acc = elem_from_int(x, 1);
    for (int t = 0; t < i; ++t) acc = acc * x;
    for (int t = 0; t < j; ++t) acc = acc * y;
    return acc;
  }
};

// All monomials of pole order <= n, sorted by pole order; exactly n of them.
std::vector<RRMonomial> rr_basis(int n);

// Exhaustive point enumeration over F_p (guarded: p <= 10^4).
std::vector<EcPoint<GFp>> enumerate_points(const WeierstrassCurve<GFp>& c);

// Brute-force order of a point in a small group.
template <class F>
int64_t ec_point_order(const WeierstrassCurve<F>& c, const EcPoint<F>& p, int64_t bound = 100000) {
  EcPoint<F> acc = p;
  for (int64_t n = 1; n <= bound; ++n) {
    if (acc.inf) return n;
    acc = ec_add(c, acc, p);
  }
  throw InternalError("point order exceeds bound");
}

}  // namespace ellmod
