#include "ecurve.hpp"

#include <algorithm>

namespace ellmod {

namespace {

// Integer divisors of |n|, by trial division.  The two-torsion search only
// ever sees the small constants of test curves; refuse silly inputs instead
// of stalling.
std::vector<Int> divisors_of(const Int& n) {
  Int a = abs(n);
  check_internal(sgn(a) != 0, "divisors of zero requested");
  require(a <= Int("1000000000000"), "rational 2-torsion search needs small curve coefficients");
  std::vector<Int> divs;
  for (Int d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      divs.push_back(d);
      if (d * d != a) divs.push_back(a / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::optional<Int> exact_isqrt(const Int& n) {
  if (sgn(n) < 0) return std::nullopt;
  Int r = sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

}  // namespace

// Rational roots of the monic cubic x^3 + b2 x + b3.  Substituting x = u/D
// with D the common denominator gives the monic integer cubic
// u^3 + (b2 D^2) u + (b3 D^3), whose rational roots are integer divisors of
// the constant term.
std::vector<Rat> rational_cubic_roots(const Rat& b2, const Rat& b3) {
  Int d = lcm(b2.get_den(), b3.get_den());
  Rat dd(d);
  Rat a1 = b2 * dd * dd;
  Rat a0 = b3 * dd * dd * dd;
  check_internal(a1.get_den() == 1 && a0.get_den() == 1, "clearing denominators failed");
  Int A1 = a1.get_num(), A0 = a0.get_num();

  std::vector<Int> candidates;
  if (sgn(A0) == 0) {
    candidates.push_back(0);
    // remaining factor u^2 + A1 = 0
    if (sgn(A1) <= 0) {
      if (auto r = exact_isqrt(-A1)) {
        candidates.push_back(*r);
        candidates.push_back(-*r);
      }
    }
  } else {
    for (const Int& v : divisors_of(A0)) {
      candidates.push_back(v);
      candidates.push_back(-v);
    }
  }

  std::vector<Rat> roots;
  for (const Int& u : candidates) {
    if (u * u * u + A1 * u + A0 == 0) {
      Rat x = Rat(u) / Rat(d);
      x.canonicalize();
      if (std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<RRMonomial> rr_basis(int n) {
  require(n >= 1, "rr_basis needs n >= 1");
  std::vector<RRMonomial> basis;
  for (int j = 0; j <= 1; ++j)
    for (int i = 0; 2 * i + 3 * j <= n; ++i) basis.push_back(RRMonomial{i, j});
  std::sort(basis.begin(), basis.end(),
            [](const RRMonomial& a, const RRMonomial& b) { return a.pole_order() < b.pole_order(); });
  check_internal(static_cast<int>(basis.size()) == n, "Riemann-Roch dimension mismatch");
  return basis;
}

std::string RRMonomial::name() const {
  if (i == 0 && j == 0) return "1";
  std::string out;
  if (i == 1) out += "x";
  if (i > 1) out += "x^" + std::to_string(i);
  if (j == 1) out += out.empty() ? "y" : "*y";
  return out;
}

std::vector<EcPoint<GFp>> enumerate_points(const WeierstrassCurve<GFp>& c) {
  uint64_t p = c.field.p;
  require(p <= 10000, "point enumeration guarded to p <= 10^4");
  // square-root table: sq[v] lists the y with y^2 = v
  std::vector<std::vector<uint64_t>> sq(p);
  for (uint64_t y = 0; y < p; ++y) sq[mulmod_u64(y, y, p)].push_back(y);
  std::vector<EcPoint<GFp>> pts{EcPoint<GFp>::zero()};
  for (uint64_t x = 0; x < p; ++x) {
    FpElem xe{x, p};
    FpElem v = c.rhs(xe);
    for (uint64_t y : sq[v.v]) pts.push_back(EcPoint<GFp>::affine(xe, FpElem{y, p}));
  }
  return pts;
}

}  // namespace ellmod
