#include <doctest.h>

#include "ecurve.hpp"

using namespace ellmod;

namespace {

EcPoint<GFp> nth_point(const WeierstrassCurve<GFp>& c, Rng& rng,
                       const std::vector<EcPoint<GFp>>& pts) {
  (void)c;
  return pts[rng.below(pts.size())];
}

}  // namespace

TEST_CASE("curve construction rejects singular equations") {
  QQ q;
  CHECK_THROWS_AS(WeierstrassCurve<QQ>(q, Rat(0), Rat(0)), InputError);
  CHECK_THROWS_AS(WeierstrassCurve<QQ>(q, Rat(-3), Rat(2)), InputError);  // 4*(-27)+27*4 = 0
  CHECK_NOTHROW(WeierstrassCurve<QQ>(q, Rat(-1), Rat(0)));
}

TEST_CASE("group law basics over Q") {
  QQ q;
  WeierstrassCurve<QQ> c(q, Rat(-1), Rat(1));  // y^2 = x^3 - x + 1
  EcPoint<QQ> p = EcPoint<QQ>::affine(Rat(1), Rat(1));
  REQUIRE(c.contains(p));
  CHECK(ec_add(c, p, EcPoint<QQ>::zero()) == p);
  CHECK(ec_add(c, p, ec_neg(p)).inf);
  CHECK(ec_scalar_mul(c, 1, p) == p);
  CHECK(ec_scalar_mul(c, -1, p) == ec_neg(p));
  CHECK(c.contains(ec_scalar_mul(c, 5, p)));
  // 2-torsion doubles to zero
  WeierstrassCurve<QQ> split(q, Rat(-1), Rat(0));
  EcPoint<QQ> t = EcPoint<QQ>::affine(Rat(1), Rat(0));
  CHECK(ec_add(split, t, t).inf);
}

TEST_CASE("group law properties on random triples over F_1009") {
  GFp f(1009);
  WeierstrassCurve<GFp> c(f, f.from_int(3), f.from_int(5));
  auto pts = enumerate_points(c);
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    auto p = nth_point(c, rng, pts), q = nth_point(c, rng, pts), r = nth_point(c, rng, pts);
    CHECK(ec_add(c, p, q) == ec_add(c, q, p));
    CHECK(ec_add(c, ec_add(c, p, q), r) == ec_add(c, p, ec_add(c, q, r)));
    CHECK(c.contains(ec_add(c, p, q)));
  }
}

TEST_CASE("scalar multiples and brute-force order") {
  GFp f(101);
  WeierstrassCurve<GFp> c(f, f.from_int(2), f.from_int(3));
  auto pts = enumerate_points(c);
  for (size_t i = 1; i < pts.size(); i += 7) {
    int64_t ord = ec_point_order(c, pts[i]);
    CHECK(ec_scalar_mul(c, ord, pts[i]).inf);
    CHECK(ec_scalar_mul(c, ord - 1, pts[i]) == ec_neg(pts[i]));
    CHECK(static_cast<int64_t>(pts.size()) % ord == 0);  // Lagrange
  }
}

TEST_CASE("two-torsion over Q") {
  QQ q;
  auto t1 = two_torsion(WeierstrassCurve<QQ>(q, Rat(-1), Rat(0)));  // y^2 = x^3 - x
  CHECK(t1.size() == 4);
  auto t2 = two_torsion(WeierstrassCurve<QQ>(q, Rat(0), Rat(1)));  // y^2 = x^3 + 1
  CHECK(t2.size() == 2);
  CHECK(t2[1] == EcPoint<QQ>::affine(Rat(-1), Rat(0)));
  // a curve with fractional 2-torsion: y^2 = x^3 - 1/4 x  has roots 0, 1/2, -1/2
  auto t3 = two_torsion(WeierstrassCurve<QQ>(q, Rat(-1, 4), Rat(0)));
  CHECK(t3.size() == 4);
  for (const auto& p : t3)
    if (!p.inf) CHECK(ec_add(WeierstrassCurve<QQ>(q, Rat(-1, 4), Rat(0)), p, p).inf);
}

TEST_CASE("two-torsion over F_5 equals root count plus one") {
  GFp f(5);
  WeierstrassCurve<GFp> c(f, f.from_int(1), f.from_int(1));  // y^2 = x^3 + x + 1
  int roots = 0;
  for (uint64_t x = 0; x < 5; ++x) {
    FpElem xe{x, 5};
    if (is_zero(c.rhs(xe))) ++roots;
  }
  CHECK(two_torsion(c).size() == static_cast<size_t>(roots + 1));
}

TEST_CASE("riemann-roch basis") {
  auto b2 = rr_basis(2);
  REQUIRE(b2.size() == 2);
  CHECK(b2[0].name() == "1");
  CHECK(b2[1].name() == "x");
  auto b3 = rr_basis(3);
  REQUIRE(b3.size() == 3);
  CHECK(b3[2].name() == "y");
  auto b5 = rr_basis(5);
  REQUIRE(b5.size() == 5);
  CHECK(b5[3].name() == "x^2");
  CHECK(b5[4].name() == "x*y");
  for (int n = 1; n <= 12; ++n) {
    auto b = rr_basis(n);
    CHECK(static_cast<int>(b.size()) == n);
    CHECK(b[0].pole_order() == 0);
    for (size_t i = 1; i < b.size(); ++i) {
      CHECK(b[i].pole_order() == static_cast<int>(i) + 1);  // orders are 0,2,3,...,n
      CHECK(b[i].j <= 1);
    }
  }
  CHECK_THROWS_AS(rr_basis(0), InputError);
}

TEST_CASE("point enumeration: F_5 example, Hasse bound, Lagrange") {
  GFp f5(5);
  WeierstrassCurve<GFp> c5(f5, f5.from_int(1), f5.from_int(1));
  CHECK(enumerate_points(c5).size() == 9);

  GFp f(101);
  Rng rng(12345);
  int curves = 0;
  while (curves < 50) {
    FpElem b2 = f.from_int(static_cast<long long>(rng.below(101)));
    FpElem b3 = f.from_int(static_cast<long long>(rng.below(101)));
    FpElem disc = f.from_int(4) * b2 * b2 * b2 + f.from_int(27) * b3 * b3;
    if (is_zero(disc)) continue;
    WeierstrassCurve<GFp> c(f, b2, b3);
    auto pts = enumerate_points(c);
    int64_t n = static_cast<int64_t>(pts.size());
    int64_t dev = n - 102;
    CHECK(dev * dev <= 404);  // |N - (p+1)| <= 2 sqrt(p)
    for (size_t i = 0; i < pts.size(); i += 11) CHECK(ec_scalar_mul(c, n, pts[i]).inf);
    ++curves;
  }
  CHECK_THROWS_AS(enumerate_points(WeierstrassCurve<GFp>(GFp(10007), FpElem{1, 10007},
                                                         FpElem{1, 10007})),
                  InputError);
}
