#include "selftest.hpp"

#include <algorithm>
#include <set>

#include "modquot.hpp"
#include "spectral.hpp"
#include "tbundle.hpp"

namespace ellmod {

namespace {

// Random affine point by x-scan from a seeded stream.
EcPoint<GFp> random_point(const WeierstrassCurve<GFp>& c, Rng& rng) {
  for (int tries = 0; tries < 10000; ++tries) {
    FpElem x = c.field.from_int(static_cast<long long>(rng.below(c.field.p)));
    auto y = c.field.sqrt(c.rhs(x));
    if (!y) continue;
    if (rng.below(2) && !is_zero(*y)) return EcPoint<GFp>::affine(x, -*y);
    return EcPoint<GFp>::affine(x, *y);
  }
  throw InternalError("could not sample a random curve point");
}

std::string point_key(const EcPoint<GFp>& p) {
  return p.inf ? "O" : std::to_string(p.x.v) + "," + std::to_string(p.y.v);
}

}  // namespace

CriterionResult criterion_wps_atlas() {
  CriterionResult r;
  r.id = 1;
  r.name = "wps-atlas: identities and pinned A/B/C rows for all types of rank <= 8";
  bool ok = true;
  int rows = 0;
  for (const auto& t : all_types(8)) {
    WPSSignature sig = wps_signature(t);
    ++rows;
    int64_t sum_w = 0;
    for (int64_t w : sig.weights) sum_w += w;
    int64_t prod_d = 1, sum_dm1 = 0;
    for (size_t i = 1; i < sig.degrees.size(); ++i) {
      prod_d *= sig.degrees[i];
      sum_dm1 += sig.degrees[i] - 1;
    }
    ok = ok && sum_w == dual_coxeter_table(t);
    ok = ok && prod_d == weyl_order_table(t);
    ok = ok && sum_dm1 == positive_root_count_table(t);

    int rank = t.rank;
    if (t.series == Series::A) {
      ok = ok && std::all_of(sig.weights.begin(), sig.weights.end(),
                             [](int64_t w) { return w == 1; });
      for (int i = 1; i <= rank; ++i) ok = ok && sig.degrees[i] == i + 1;
    }
    if (t.series == Series::C) {
      ok = ok && std::all_of(sig.weights.begin(), sig.weights.end(),
                             [](int64_t w) { return w == 1; });
      for (int i = 1; i <= rank; ++i) ok = ok && sig.degrees[i] == 2 * i;
    }
    if (t.series == Series::B) {
      int64_t ones = std::count(sig.weights.begin(), sig.weights.end(), 1);
      int64_t twos = std::count(sig.weights.begin(), sig.weights.end(), 2);
      ok = ok && ones == 3 && twos == rank - 2 && ones + twos == rank + 1;
      for (int i = 1; i <= rank; ++i) ok = ok && sig.degrees[i] == 2 * i;
    }
  }
  r.pass = ok;
  r.details["rows"] = rows;
  r.details["identities"] = "sum(w)=h^v, prod(d)=|W|, sum(d-1)=#R+";
  return r;
}

CriterionResult criterion_cartan_determinants() {
  CriterionResult r;
  r.id = 2;
  r.name = "cartan determinants match the polarization-degree table";
  bool ok = true;
  for (const auto& t : all_types(8)) {
    int64_t expect = 0;
    switch (t.series) {
      case Series::A: expect = t.rank + 1; break;
      case Series::B:
      case Series::C: expect = 2; break;
      case Series::D: expect = 4; break;
      case Series::E: expect = t.rank == 6 ? 3 : t.rank == 7 ? 2 : 1; break;
      case Series::F:
      case Series::G: expect = 1; break;
    }
    ok = ok && cartan_determinant(build_root_system(t)) == expect;
  }
  r.pass = ok;
  r.details["types_checked"] = static_cast<int64_t>(all_types(8).size());
  return r;
}

CriterionResult criterion_group_law(uint64_t seed) {
  CriterionResult r;
  r.id = 3;
  r.name = "elliptic group law: random triples over F_1009; Hasse and Lagrange over all F_101 curves";
  Rng rng(seed ^ 0xabcdef12u);
  bool ok = true;

  GFp f1009(1009);
  WeierstrassCurve<GFp> c(f1009, f1009.from_int(3), f1009.from_int(5));
  int triples = 0;
  for (int t = 0; t < 1000; ++t) {
    EcPoint<GFp> p = random_point(c, rng), q = random_point(c, rng), s = random_point(c, rng);
    ok = ok && ec_add(c, p, EcPoint<GFp>::zero()) == p;
    ok = ok && ec_add(c, p, ec_neg(p)).inf;
    ok = ok && ec_add(c, p, q) == ec_add(c, q, p);
    ok = ok && ec_add(c, ec_add(c, p, q), s) == ec_add(c, p, ec_add(c, q, s));
    ok = ok && c.contains(ec_add(c, p, q));
    ++triples;
    if (!ok) break;
  }

  // every nonsingular curve over F_101
  const uint64_t p = 101;
  GFp f101(p);
  std::vector<std::vector<uint64_t>> sq(p);
  for (uint64_t y = 0; y < p; ++y) sq[y * y % p].push_back(y);
  int64_t curves = 0, points = 0;
  bool hasse_ok = true, lagrange_ok = true;
  for (uint64_t b2 = 0; b2 < p && ok; ++b2) {
    for (uint64_t b3 = 0; b3 < p; ++b3) {
      uint64_t disc = (4 * b2 % p * b2 % p * b2 % p + 27 * b3 % p * b3 % p) % p;
      if (disc == 0) continue;
      WeierstrassCurve<GFp> e(f101, FpElem{b2, p}, FpElem{b3, p});
      std::vector<EcPoint<GFp>> pts{EcPoint<GFp>::zero()};
      for (uint64_t x = 0; x < p; ++x) {
        uint64_t rhs = (x * x % p * x % p + b2 * x % p + b3) % p;
        for (uint64_t y : sq[rhs]) pts.push_back(EcPoint<GFp>::affine(FpElem{x, p}, FpElem{y, p}));
      }
      int64_t n = static_cast<int64_t>(pts.size());
      int64_t dev = n - static_cast<int64_t>(p) - 1;
      if (dev * dev > 4 * static_cast<int64_t>(p)) hasse_ok = false;
      for (const auto& pt : pts)
        if (!ec_scalar_mul(e, n, pt).inf) lagrange_ok = false;
      ++curves;
      points += n;
      if (!hasse_ok || !lagrange_ok) break;
    }
    if (!hasse_ok || !lagrange_ok) break;
  }
  ok = ok && hasse_ok && lagrange_ok;

  r.pass = ok;
  r.details["random_triples"] = triples;
  r.details["curves_over_f101"] = curves;
  r.details["points_checked"] = points;
  r.details["hasse_ok"] = hasse_ok;
  r.details["lagrange_ok"] = lagrange_ok;
  return r;
}

CriterionResult criterion_quotient_fibers() {
  CriterionResult r;
  r.id = 4;
  r.name = "quotient maps: AJ fibers are S_n-orbits (F_11, n=2,3); x-map for n=2; signed orbits for symprod (F_13, r=2)";
  bool ok = true;

  GFp f11(11);
  WeierstrassCurve<GFp> c11(f11, f11.from_int(-1), f11.from_int(0));  // y^2 = x^3 - x
  auto aj_key = [&](const std::vector<EcPoint<GFp>>& divisor) {
    return abel_jacobi_sl(c11, divisor).str();
  };
  bool aj2 = fiber_equals_orbit_check(c11, 2, aj_key);
  bool aj3 = fiber_equals_orbit_check(c11, 3, aj_key);
  ok = ok && aj2 && aj3;

  // negative control: dropping y from the n=3 map must break injectivity
  auto corrupted_key = [&](const std::vector<EcPoint<GFp>>& divisor) {
    return symprod_quotient_bc(c11, divisor).str();
  };
  bool corrupted_detected = !fiber_equals_orbit_check(c11, 3, corrupted_key);
  ok = ok && corrupted_detected;

  // n = 2 image is the x-coordinate map: exhaustively over F_11
  int xmap_checked = 0;
  for (const auto& pt : enumerate_points(c11)) {
    if (pt.inf || is_zero(pt.y)) continue;  // need P != -P
    auto aj = abel_jacobi_sl(c11, {pt, ec_neg(pt)});
    ok = ok && aj2_as_xline_point(aj) == x_coordinate_map(c11, pt);
    ++xmap_checked;
  }
  // and on 200 random points over F_1009
  GFp f1009(1009);
  WeierstrassCurve<GFp> c1009(f1009, f1009.from_int(3), f1009.from_int(5));
  Rng rng(0x5eedULL);
  for (int i = 0; i < 200; ++i) {
    EcPoint<GFp> pt = random_point(c1009, rng);
    if (is_zero(pt.y)) continue;
    auto aj = abel_jacobi_sl(c1009, {pt, ec_neg(pt)});
    ok = ok && aj2_as_xline_point(aj) == x_coordinate_map(c1009, pt);
    ++xmap_checked;
  }

  // symprod fibers over F_13 are exactly {+-1} wr S_2 orbits
  GFp f13(13);
  WeierstrassCurve<GFp> c13(f13, f13.from_int(-1), f13.from_int(0));
  auto pts13 = enumerate_points(c13);
  auto orbit_key = [&](const EcPoint<GFp>& a, const EcPoint<GFp>& b) {
    std::set<std::string> orbit;
    for (const auto& pa : {a, ec_neg(a)})
      for (const auto& pb : {b, ec_neg(b)}) {
        orbit.insert(point_key(pa) + "|" + point_key(pb));
        orbit.insert(point_key(pb) + "|" + point_key(pa));
      }
    return *orbit.begin();
  };
  std::map<std::string, std::set<std::string>> fibers;  // image -> orbit keys
  int64_t pairs = 0;
  for (const auto& a : pts13)
    for (const auto& b : pts13) {
      auto image = symprod_quotient_bc(c13, {a, b}).str();
      fibers[image].insert(orbit_key(a, b));
      ++pairs;
    }
  for (const auto& [image, orbits] : fibers) ok = ok && orbits.size() == 1;

  r.pass = ok;
  r.details["aj_fiber_orbit_n2"] = aj2;
  r.details["aj_fiber_orbit_n3"] = aj3;
  r.details["corrupted_map_detected"] = corrupted_detected;
  r.details["xmap_points_checked"] = xmap_checked;
  r.details["symprod_pairs_checked"] = pairs;
  r.details["symprod_fibers"] = static_cast<int64_t>(fibers.size());
  return r;
}

CriterionResult criterion_strata(uint64_t seed) {
  CriterionResult r;
  r.id = 5;
  r.name = "strata: G2 exotic and parabolic kernel types with Levi flags and deformation dims";
  bool ok = true;

  RootSystemData g2 = build_root_system(CartanType::make('G', 2));
  GFp f11(11);
  WeierstrassCurve<GFp> curve(f11, f11.from_int(-1), f11.from_int(0));  // split 2-torsion
  auto pool = enumerate_points(curve);  // order-12 group: 2- and 3-torsion available
  auto found = stratum_scan(g2, curve, pool);

  auto has = [&](const std::string& name, bool levi) {
    auto it = found.find(name);
    if (it == found.end()) return false;
    return it->second.is_levi == levi;
  };
  bool exotics = has("A2^long", false) && has("A1^long x A1^short", false);
  bool parabolics = has("0", true) && has("A1^short", true) && has("A1^long", true) &&
                    has("G2", true);
  ok = ok && exotics && parabolics;

  // dimension identity on every stratum found
  for (const auto& [name, rep] : found) {
    auto [h0, nil] = deformation_dims(rep, g2.rank());
    ok = ok && h0 == 2 + static_cast<int64_t>(rep.roots.size());
    ok = ok && nil == static_cast<int64_t>(rep.roots.size());
  }

  // exotic counts: A2^long needs an order-3 image, so a 2-torsion-only pool
  // must realize A1^long x A1^short but never A2^long
  QQ q;
  WeierstrassCurve<QQ> cq(q, Rat(-1), Rat(0));
  auto torsion_pool = two_torsion(cq);
  auto torsion_found = stratum_scan(g2, cq, torsion_pool);
  bool two_torsion_picture = torsion_found.count("A1^long x A1^short") == 1 &&
                             torsion_found.count("A2^long") == 0 &&
                             torsion_found.count("G2") == 1 && torsion_found.count("0") == 1;
  ok = ok && two_torsion_picture;

  // generic points give (r, 0)
  Rng rng(seed ^ 0x600dULL);
  GFp f1009(1009);
  WeierstrassCurve<GFp> cbig(f1009, f1009.from_int(3), f1009.from_int(5));
  int generic_found = 0;
  for (int i = 0; i < 8; ++i) {
    TBundlePoint<GFp> p(cbig, {random_point(cbig, rng), random_point(cbig, rng)});
    SubsystemReport rep = kernel_subsystem(g2, p);
    if (!rep.roots.empty()) continue;  // astronomically rare; just resample
    auto [h0, nil] = deformation_dims(rep, 2);
    ok = ok && h0 == 2 && nil == 0 && rep.is_levi;
    ++generic_found;
  }
  ok = ok && generic_found >= 1;

  r.pass = ok;
  r.details["strata_found"] = static_cast<int64_t>(found.size());
  Json names = Json::array();
  for (const auto& [name, rep] : found) {
    Json e;
    e["type"] = name;
    e["is_levi"] = rep.is_levi;
    e["kernel_size"] = rep.roots.size();
    names.push_back(e);
  }
  r.details["g2_strata"] = names;
  r.details["exotics_realized"] = exotics;
  r.details["parabolics_realized"] = parabolics;
  r.details["two_torsion_scan_matches_theory"] = two_torsion_picture;
  r.details["generic_samples"] = generic_found;
  return r;
}

CriterionResult criterion_sl2_counts() {
  CriterionResult r;
  r.id = 6;
  r.name = "sl2 universal-space fibers: 4 points on the diagonal, a one-parameter family off it";
  bool ok = true;

  QQ q;
  WeierstrassCurve<QQ> cq(q, Rat(-1), Rat(0));
  auto on = sl2_ubar_fiber_count(cq, true);
  auto off = sl2_ubar_fiber_count(cq, false);
  ok = ok && !on.one_parameter_family && on.count == 4;
  ok = ok && off.one_parameter_family;

  // over F_13 with a split cubic, verified against an exhaustive scan
  GFp f13(13);
  WeierstrassCurve<GFp> c13(f13, f13.from_int(-1), f13.from_int(0));
  auto on13 = sl2_ubar_fiber_count(c13, true);
  int64_t scan = 0;
  for (const auto& t : enumerate_points(c13))
    if (ec_add(c13, t, t).inf) ++scan;
  ok = ok && on13.count == 4 && scan == 4;

  // non-split 2-torsion must be refused
  bool refused = false;
  try {
    WeierstrassCurve<QQ> bad(q, Rat(0), Rat(1));  // y^2 = x^3 + 1: only one rational root
    sl2_ubar_fiber_count(bad, true);
  } catch (const InputError&) {
    refused = true;
  }
  ok = ok && refused;

  r.pass = ok;
  r.details["on_diagonal_count"] = on.count;
  r.details["off_diagonal"] = off.describe();
  r.details["f13_exhaustive_two_torsion"] = scan;
  r.details["non_split_refused"] = refused;
  return r;
}

CriterionResult criterion_spectral(uint64_t seed) {
  CriterionResult r;
  r.id = 7;
  r.name = "spectral suite: pinned n=2/n=3 (k=1) numbers, two-chart checks, coherence, probe";
  (void)seed;  // pinned values need pinned instances; the seeds here are fixed
  bool ok = true;

  SpectralInstance i2 = seeded_instance(2, 1, 20250801);
  SpectralReport r2 = spectral_report(i2, true, 20250801);
  ok = ok && r2.branch_degree == 14 && r2.branch_squarefree;
  ok = ok && r2.genus_asserted && r2.genus == 6 && r2.genus_hyperelliptic == 6;
  ok = ok && r2.prym_dim == 6 && r2.base_dim == 3 && r2.total_moduli_dim == 9;
  ok = ok && r2.connectedness == "verified-irreducible-probe";
  ok = ok && r2.selfcheck_ran && r2.selfcheck_ok;

  SpectralInstance i3 = seeded_instance(3, 1, 20250802);
  SpectralReport r3 = spectral_report(i3, true, 20250802);
  ok = ok && r3.branch_degree == kFrozenBranchDegreeN3K1 && r3.branch_squarefree;
  ok = ok && r3.genus_asserted && r3.genus == kFrozenGenusN3K1;
  ok = ok && r3.prym_dim == kFrozenGenusN3K1 && r3.base_dim == 7;
  ok = ok && r3.total_moduli_dim == 7 + kFrozenGenusN3K1;
  ok = ok && r3.connectedness == "verified-irreducible-probe";
  ok = ok && r3.selfcheck_ran && r3.selfcheck_ok;

  // k-additivity of the base dimension and the n=2, k=2 genus
  ok = ok && base_moduli_dimension(2, 2) - base_moduli_dimension(2, 1) == 2;
  SpectralInstance i2k2 = seeded_instance(2, 2, 20250803);
  SpectralReport r2k2 = spectral_report(i2k2, false, 20250803);
  ok = ok && r2k2.branch_degree == 28 && r2k2.genus == 13;

  r.pass = ok;
  r.details["n2_branch"] = r2.branch_degree;
  r.details["n2_genus_rh"] = r2.genus;
  r.details["n2_genus_hyperelliptic"] = r2.genus_hyperelliptic;
  r.details["n2_total_dim"] = r2.total_moduli_dim;
  r.details["n3_branch"] = r3.branch_degree;
  r.details["n3_genus"] = r3.genus;
  r.details["n3_total_dim"] = r3.total_moduli_dim;
  r.details["n2_selfcheck"] = r2.selfcheck_detail;
  r.details["n3_selfcheck"] = r3.selfcheck_detail;
  r.details["n2k2_genus"] = r2k2.genus;
  return r;
}

std::vector<CriterionResult> run_acceptance_criteria(uint64_t seed) {
  return {
      criterion_wps_atlas(),
      criterion_cartan_determinants(),
      criterion_group_law(seed),
      criterion_quotient_fibers(),
      criterion_strata(seed),
      criterion_sl2_counts(),
      criterion_spectral(seed),
  };
}

Json criteria_payload(const std::vector<CriterionResult>& results) {
  Json arr = Json::array();
  for (const auto& r : results) {
    Json e;
    e["id"] = r.id;
    e["name"] = r.name;
    e["pass"] = r.pass;
    e["details"] = r.details;
    arr.push_back(e);
  }
  Json payload;
  payload["criteria"] = arr;
  return payload;
}

}  // namespace ellmod
