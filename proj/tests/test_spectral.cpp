#include <doctest.h>

#include <set>

#include "modquot.hpp"
#include "spectral.hpp"

using namespace ellmod;

namespace {

Poly<Rat> qpoly(std::vector<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.emplace_back(v);
  return Poly<Rat>(std::move(c));
}

}  // namespace

TEST_CASE("polynomial layer: gcd, division, resultants") {
  // (s^2 - 1) and (s - 1): gcd is s - 1
  Poly<Rat> a = qpoly({-1, 0, 1}), b = qpoly({-1, 1});
  CHECK(poly_gcd(a, b) == poly_monic(b));
  CHECK(poly_squarefree(a));
  Poly<Rat> sq = a * a;
  CHECK_FALSE(poly_squarefree(sq));
  auto [quot, rem] = poly_divmod(sq, a);
  CHECK(rem.zero());
  CHECK(quot == a);

  // disc of x^2 - s as a bivariate in x: 4s up to the fixed sign
  Poly2<Rat> r = poly2_from_coeffs<Rat>({qpoly({0, -1}), Poly<Rat>(), qpoly({1})});
  Poly<Rat> disc = poly2_disc_x(r);
  CHECK(disc == qpoly({0, 4}));

  // resultant over the field: res(x-2, x-3) = -1... via the bivariate path
  Poly2<Rat> f = poly2_from_coeffs<Rat>({qpoly({-2}), qpoly({1})});
  Poly2<Rat> g = poly2_from_coeffs<Rat>({qpoly({-3}), qpoly({1})});
  CHECK(poly2_resultant_x(f, g) == qpoly({-1}));
}

TEST_CASE("family discriminant") {
  QQ q;
  WeierstrassFamily<QQ> trivial(q, 1, Poly<Rat>(), qpoly({1}));  // b2=0, b3=1
  CHECK(family_discriminant(trivial) == qpoly({27}));
  CHECK(family_discriminant(trivial).degree() == 0);  // no singular fibers

  // a generic k=1 family has discriminant of degree 12
  SpectralInstance inst = seeded_instance(2, 1, 20250801);
  CHECK(family_discriminant(inst.family).degree() == 12);

  // specialization commutes
  Rat s0(3);
  Rat direct = family_discriminant(inst.family).eval(s0);
  Rat fiber_disc = Rat(4) * inst.family.b2.eval(s0) * inst.family.b2.eval(s0) *
                       inst.family.b2.eval(s0) +
                   Rat(27) * inst.family.b3.eval(s0) * inst.family.b3.eval(s0);
  CHECK(direct == fiber_disc);

  // identically singular families are rejected: 4*(-3)^3 + 27*2^2 = 0
  CHECK_THROWS_AS(WeierstrassFamily<QQ>(q, 1, qpoly({-3}), qpoly({2})), InputError);
  // degree bounds enforced
  CHECK_THROWS_AS(WeierstrassFamily<QQ>(q, 1, qpoly({0, 0, 0, 0, 0, 1}), qpoly({1})), InputError);
}

TEST_CASE("section validation") {
  QQ q;
  WeierstrassFamily<QQ> fam(q, 1, qpoly({1, 1}), qpoly({2, 0, 1}));
  // n=3 coefficients: 1, a_x (deg <= 2), a_y (deg <= 3)
  CHECK_NOTHROW(SpectralSection<QQ>(q, 3, 1, {qpoly({1}), qpoly({1, 1}), qpoly({2, 1})}));
  // constant coefficient must be 1
  CHECK_THROWS_AS(SpectralSection<QQ>(q, 3, 1, {qpoly({2}), qpoly({1, 1}), qpoly({2, 1})}),
                  InputError);
  // top two sharing a root is refused: a_x = a_y = (s - 1)
  CHECK_THROWS_AS(SpectralSection<QQ>(q, 3, 1, {qpoly({1}), qpoly({-1, 1}), qpoly({-1, 1})}),
                  InputError);
  // degree bound violated
  CHECK_THROWS_AS(SpectralSection<QQ>(q, 3, 1, {qpoly({1}), qpoly({0, 0, 0, 1}), qpoly({2, 1})}),
                  InputError);
}

TEST_CASE("fiber-coordinate elimination") {
  SpectralInstance i2 = seeded_instance(2, 1, 20250801);
  Poly2<Rat> r2 = eliminate_fiber_coordinate(i2.section, i2.family);
  // n=2: R = (1 + a x)^2
  const Poly<Rat>& ax = i2.section.coeffs[1];
  CHECK(r2.degree_x() == 2);
  CHECK(r2.cx[2] == ax * ax);
  CHECK(r2.cx[1] == ax * Rat(2));
  CHECK(r2.cx[0] == qpoly({1}));

  SpectralInstance i3 = seeded_instance(3, 1, 20250802);
  Poly2<Rat> r3 = eliminate_fiber_coordinate(i3.section, i3.family);
  CHECK(r3.degree_x() == 3);
  // leading coefficient is -a_y^2
  const Poly<Rat>& ay = i3.section.coeffs[2];
  CHECK(r3.cx[3] == -(ay * ay));
}

TEST_CASE("specialized fibers match a brute-force scan") {
  GFp f(101);
  SpectralInstance iq = seeded_instance(3, 1, 20250802);
  auto fam = reduce_family(iq.family, f);
  auto sec = reduce_section(iq.section, f);
  int compared = 0;
  for (uint64_t sv = 0; sv < 101 && compared < 5; ++sv) {
    FpElem s0{sv, 101};
    auto fiber = fiber_points_at(sec, fam, s0);
    if (!fiber) continue;
    // brute force: evaluate the section at every point of E_{s0}
    WeierstrassCurve<GFp> curve = fam.fiber(s0);
    auto basis = rr_basis(3);
    std::set<std::string> scan;
    for (const auto& p : enumerate_points(curve)) {
      if (p.inf) continue;
      FpElem acc = f.zero();
      for (size_t m = 0; m < basis.size(); ++m)
        acc = acc + sec.coeffs[m].eval(s0) * basis[m].eval(p.x, p.y);
      if (is_zero(acc)) scan.insert(std::to_string(p.x.v) + "," + std::to_string(p.y.v));
    }
    std::set<std::string> computed;
    for (const auto& p : *fiber) computed.insert(std::to_string(p.x.v) + "," + std::to_string(p.y.v));
    CHECK(computed == scan);
    ++compared;
  }
  CHECK(compared == 5);
}

TEST_CASE("branch divisor: n=2 against an independently coded oracle") {
  SpectralInstance inst = seeded_instance(2, 1, 20250801);
  BranchData<QQ> bd = branch_divisor(inst.section, inst.family);
  CHECK(bd.degree == 14);
  CHECK(bd.squarefree);

  // oracle: branch = a * (b3 a^3 - b2 a^2 - 1), assembled here from scratch
  const Poly<Rat>& a = inst.section.coeffs[1];
  Poly<Rat> n_factor =
      inst.family.b3 * a * a * a - inst.family.b2 * a * a - Poly<Rat>::constant(Rat(1));
  Poly<Rat> oracle = poly_monic(a * n_factor);
  CHECK(oracle == bd.branch);
  CHECK(oracle.degree() == 2 * 1 + 12 * 1);

  // squarefree via a second routine: gcd over F_p of the reduction
  GFp f(100003);
  std::vector<FpElem> c;
  for (const auto& qc : bd.branch.c) c.push_back(f.from_rat(qc));
  Poly<FpElem> bp(std::move(c));
  CHECK(poly_gcd(bp, poly_deriv(bp)).degree() == 0);

  // isotrivial degenerate case is rejected
  QQ q;
  WeierstrassFamily<QQ> iso(q, 1, qpoly({1}), qpoly({1}));
  SpectralSection<QQ> flat(q, 2, 1, {qpoly({1}), qpoly({2})});
  CHECK_THROWS_AS(branch_divisor(flat, iso), InputError);
}

TEST_CASE("branch divisor: n=3 frozen oracle values and the second chart") {
  SpectralInstance inst = seeded_instance(3, 1, 20250802);
  BranchData<QQ> bd = branch_divisor(inst.section, inst.family);
  CHECK(bd.degree == 30);
  CHECK(bd.squarefree);
  CHECK(bd.spurious_exponent == 2);

  // y-chart: disc_y carries a_x^6 and reduces to the same branch divisor
  Poly2<Rat> g = second_chart_n3(inst.section, inst.family);
  CHECK(g.degree_x() == 3);
  Poly<Rat> disc_y = poly2_disc_x(g);
  Poly<Rat> reduced = disc_y;
  for (int i = 0; i < 6; ++i) reduced = poly_exact_div(reduced, inst.section.coeffs[1]);
  CHECK(poly_monic(reduced) == bd.branch);
}

TEST_CASE("genus, prym, and moduli dimensions") {
  CHECK(spectral_genus(2, 14, true) == 6);
  CHECK(hyperelliptic_genus(14) == 6);
  CHECK(spectral_genus(2, 2, true) == 0);  // rational double cover
  CHECK(hyperelliptic_genus(2) == 0);
  CHECK(spectral_genus(3, 30, true) == 13);
  CHECK_THROWS_AS(spectral_genus(2, 14, false), InputError);

  CHECK(prym_dimension_sl(0) == 0);
  CHECK(prym_dimension_sl(6) == 6);
  CHECK(prym_dimension_sl(5) == 5);

  CHECK(base_moduli_dimension(2, 1) == 3);
  CHECK(base_moduli_dimension(2, 0) == 1);  // isotrivial toy: [a0 : a_x] constants
  CHECK(base_moduli_dimension(3, 1) == 7);
  // k-additivity: +1 in k adds n(n+1)/2 - 1
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= 2; ++k)
      CHECK(base_moduli_dimension(n, k + 1) - base_moduli_dimension(n, k) ==
            n * (n + 1) / 2 - 1);
}

TEST_CASE("full reports with riemann-hurwitz cross-checks") {
  SpectralInstance i2 = seeded_instance(2, 1, 20250801);
  SpectralReport r2 = spectral_report(i2, true, 20250801);
  CHECK(r2.branch_degree == 14);
  CHECK(r2.genus == 6);
  CHECK(r2.genus_hyperelliptic == 6);
  CHECK(r2.prym_dim == 6);
  CHECK(r2.base_dim == 3);
  CHECK(r2.total_moduli_dim == 9);
  CHECK(r2.connectedness == "verified-irreducible-probe");
  CHECK(r2.selfcheck_ok);

  SpectralInstance i2k2 = seeded_instance(2, 2, 20250803);
  SpectralReport r2k2 = spectral_report(i2k2, false, 20250803);
  CHECK(r2k2.branch_degree == 28);
  CHECK(r2k2.genus == 13);

  SpectralInstance i3 = seeded_instance(3, 1, 20250802);
  SpectralReport r3 = spectral_report(i3, true, 20250802);
  CHECK(r3.branch_degree == 30);
  CHECK(r3.genus == 13);
  CHECK(r3.prym_dim == 13);
  CHECK(r3.base_dim == 7);
  CHECK(r3.total_moduli_dim == 20);
  CHECK(r3.connectedness == "verified-irreducible-probe");
  CHECK(r3.selfcheck_ok);
  CHECK(r3.cameral_note.find("S3") != std::string::npos);
}

TEST_CASE("connectedness probe: negative control") {
  // x^2 - g(s)^2 splits everywhere: the probe must stay inconclusive and name
  // the reducibility pattern it saw
  Poly<Rat> g = qpoly({1, 2, 3});
  Poly2<Rat> sq = poly2_from_coeffs<Rat>({-(g * g), Poly<Rat>(), qpoly({1})});
  ProbeResult pr = connectedness_probe(sq, 24, 7);
  CHECK(pr.verdict == ProbeVerdict::inconclusive);
  CHECK(pr.witness.find("1+1") != std::string::npos);
}

TEST_CASE("specialization coherence over F_1009") {
  GFp f(1009);
  SpectralInstance i3 = seeded_instance(3, 1, 20250802);
  int n = specialization_coherence(reduce_section(i3.section, f), reduce_family(i3.family, f), 20);
  CHECK(n >= 20);
  SpectralInstance i2 = seeded_instance(2, 1, 20250801);
  int n2 = specialization_coherence(reduce_section(i2.section, f), reduce_family(i2.family, f), 20);
  CHECK(n2 >= 20);
}
