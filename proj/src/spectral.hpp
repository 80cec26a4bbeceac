#pragma once

// SL(n) spectral covers of a Weierstrass family over a rational base:
// fiber-coordinate elimination, exact branch divisors on the proper model,
// Riemann–Hurwitz genus, distinguished-Prym dimension, and the dimension
// bookkeeping of the full moduli space.
//
// Degree conventions.  L has degree k on the base P^1; b2 and b3 have
// degrees <= 4k and 6k.  The coefficient of the Riemann–Roch monomial of
// pole order p is a base polynomial of degree <= p*k, with the constant
// monomial normalized to 1.  The affine x-chart discriminant both misses the
// branching where the spectral divisor meets the zero section and picks up
// spurious factors where two sheets merge in the x-projection only; both
// effects are accounted for below and cross-checked by a second chart.

#include <map>

#include "ecurve.hpp"
#include "poly.hpp"

namespace ellmod {

template <class F>
struct WeierstrassFamily {
  F field;
  int k = 1;
  Poly<typename F::Elem> b2;  // degree <= 4k
  Poly<typename F::Elem> b3;  // degree <= 6k

  WeierstrassFamily(F f, int deg_l, Poly<typename F::Elem> pb2, Poly<typename F::Elem> pb3)
      : field(std::move(f)), k(deg_l), b2(std::move(pb2)), b3(std::move(pb3)) {
    require(k >= 0, "deg L must be >= 0");
    require(b2.degree() <= 4 * k && b3.degree() <= 6 * k,
            "b2, b3 must have degrees <= 4k and 6k");
    Poly<typename F::Elem> disc = discriminant();
    require(!disc.zero(), "singular family: 4*b2^3 + 27*b3^2 vanishes identically");
  }

  // The fixed sign convention: Delta = 4 b2^3 + 27 b3^2 (the negative of the
  // classical cubic discriminant; same zero locus).
  Poly<typename F::Elem> discriminant() const {
    auto four = Poly<typename F::Elem>::constant(field.from_int(4));
    auto twentyseven = Poly<typename F::Elem>::constant(field.from_int(27));
    return four * b2 * b2 * b2 + twentyseven * b3 * b3;
  }

  WeierstrassCurve<F> fiber(const typename F::Elem& s0) const {
    return WeierstrassCurve<F>(field, b2.eval(s0), b3.eval(s0));
  }
};

template <class F>
Poly<typename F::Elem> family_discriminant(const WeierstrassFamily<F>& fam) {
  return fam.discriminant();
}

template <class F>
struct SpectralSection {
  int n = 2;
  int k = 1;
  // aligned with rr_basis(n); coeffs[0] is the constant monomial, always 1
  std::vector<Poly<typename F::Elem>> coeffs;

  SpectralSection(const F& field, int deg_n, int deg_l,
                  std::vector<Poly<typename F::Elem>> cs)
      : n(deg_n), k(deg_l), coeffs(std::move(cs)) {
    require(n >= 2, "spectral degree n must be >= 2");
    auto basis = rr_basis(n);
    require(coeffs.size() == basis.size(), "one coefficient per Riemann-Roch monomial");
    require(coeffs[0] == Poly<typename F::Elem>::constant(field.from_int(1)),
            "constant-monomial coefficient must be normalized to 1");
    for (size_t i = 0; i < basis.size(); ++i)
      require(coeffs[i].degree() <= basis[i].pole_order() * k,
              "coefficient of " + basis[i].name() + " exceeds degree " +
                  std::to_string(basis[i].pole_order() * k));
    // the divisor must stay of relative degree n over every s: the top two
    // coefficients may not vanish simultaneously
    if (n >= 3) {
      const auto& top = coeffs[basis.size() - 1];
      const auto& second = coeffs[basis.size() - 2];
      require(!top.zero() && !second.zero(), "top spectral coefficients vanish identically");
      require(poly_gcd(top, second).degree() == 0,
              "top two spectral coefficients have a common root");
    } else {
      require(!coeffs[1].zero(), "n=2 section needs a nonzero x coefficient");
    }
  }
};

// Split a section into A(x,s) + B(x,s) * y along the y-exponent of its
// monomials, as bivariate polynomials in x over K[s].
template <class F>
std::pair<Poly2<typename F::Elem>, Poly2<typename F::Elem>> section_ab(
    const SpectralSection<F>& sec) {
  using K = typename F::Elem;
  auto basis = rr_basis(sec.n);
  std::vector<Poly<K>> a, b;
  for (size_t m = 0; m < basis.size(); ++m) {
    auto& target = basis[m].j == 0 ? a : b;
    if (static_cast<size_t>(basis[m].i) >= target.size()) target.resize(basis[m].i + 1);
    target[basis[m].i] += sec.coeffs[m];
  }
  return {poly2_from_coeffs(std::move(a)), poly2_from_coeffs(std::move(b))};
}

// R(x, s) with the x-coordinates of the n spectral points over s as roots:
// A^2 - B^2 (x^3 + b2 x + b3).  For n = 2 this degenerates to A^2 (the two
// sheets differ only in y), which is why n = 2 has dedicated code paths.
template <class F>
Poly2<typename F::Elem> eliminate_fiber_coordinate(const SpectralSection<F>& sec,
                                                   const WeierstrassFamily<F>& fam) {
  using K = typename F::Elem;
  auto [a, b] = section_ab(sec);
  Poly2<K> cubic = poly2_from_coeffs<K>(
      {fam.b3, fam.b2, Poly<K>(), Poly<K>::constant(fam.field.from_int(1))});
  Poly2<K> r = a * a - b * b * cubic;
  require(!r.zero() && r.degree_x() >= 1, "degenerate section: elimination collapsed");
  return r;
}

template <class F>
struct BranchData {
  Poly<typename F::Elem> branch;  // monic; the branch points at finite s
  int64_t degree = 0;
  bool squarefree = false;
  bool generic = true;       // false when spurious/genuine loci overlap
  int spurious_exponent = 0; // removed power of the top y-coefficient (n >= 3)
  // Certificate that no branching hides over s = infinity, from degree
  // fullness: the fiber there is smooth (deg Delta = 12k) and the limiting
  // divisor is reduced.  Riemann-Hurwitz genus claims require it.
  bool no_infinity_branching = false;
};

// Branch divisor of the n-sheeted cover over finite s, on the proper model
// of the fibers.
//
// n = 2: the affine 2-torsion locus N(s) = b3 a^3 - b2 a^2 - 1 (the fiber
// value of y^2 at x = -1/a, cleared of denominators) times a(s) itself,
// whose roots are where the two sheets collide at the origin.
//
// n >= 3: disc_x of the eliminated polynomial, with the spurious factor
// a_y^{2*floor(n/2)} divided out; those roots are where the x-projection
// merges +-y pairs without the cover actually branching.
template <class F>
BranchData<F> branch_divisor(const SpectralSection<F>& sec, const WeierstrassFamily<F>& fam) {
  using K = typename F::Elem;
  BranchData<F> out;
  const bool delta_full = fam.discriminant().degree() == 12 * fam.k;

  if (sec.n == 2) {
    const Poly<K>& a = sec.coeffs[1];
    Poly<K> n_factor = fam.b3 * a * a * a - fam.b2 * a * a -
                       Poly<K>::constant(fam.field.from_int(1));
    check_internal(poly_coprime(a, n_factor),
                   "n=2 branch factors unexpectedly share a root");
    Poly<K> branch = a * n_factor;
    require(branch.degree() >= 1, "degenerate spectral instance: branch divisor is constant");
    out.branch = poly_monic(branch);
    out.degree = branch.degree();
    out.squarefree = poly_squarefree(out.branch);
    // over s = infinity the divisor limits to the pair with x = 0, reduced
    // when b3 keeps full degree there and the fiber is smooth
    out.no_infinity_branching = delta_full && fam.b3.degree() == 6 * fam.k;
    return out;
  }

  require(sec.n <= 4, "branch divisor implemented for n <= 4");
  Poly2<K> r = eliminate_fiber_coordinate(sec, fam);
  require(r.degree_x() == sec.n, "eliminated polynomial dropped degree; section is degenerate");
  Poly<K> disc = poly2_disc_x(r);
  require(!disc.zero(), "identically branched cover; section is degenerate");

  const Poly<K>& a_y = sec.coeffs[2];  // pole-order-3 monomial y
  int predicted = 2 * (sec.n / 2);
  Poly<K> branch = disc;
  for (int i = 0; i < predicted; ++i) branch = poly_exact_div(branch, a_y);
  out.spurious_exponent = predicted;
  out.generic = poly_coprime(branch, a_y);
  require(branch.degree() >= 1, "degenerate spectral instance: branch divisor is constant");
  out.branch = poly_monic(branch);
  out.degree = branch.degree();
  out.squarefree = out.generic && poly_squarefree(out.branch);
  if (sec.n == 3) {
    // limiting divisor at infinity: the three 2-torsion points of a smooth
    // fiber, reduced as long as the y-coefficient keeps full degree
    out.no_infinity_branching = delta_full && sec.coeffs[2].degree() == 3 * sec.k;
  } else {
    // n = 4: the limiting divisor is the double pair cut by x^2.  The two
    // collisions are nodes of the spectral curve, so the normalization is
    // unramified there, but the genus below is then the geometric genus of
    // the nodal model.
    out.no_infinity_branching = delta_full && fam.b3.degree() == 6 * fam.k &&
                                sec.coeffs.back().degree() == 4 * sec.k;
  }
  return out;
}

// Riemann–Hurwitz with simple branching over a genus-0 base:
// 2g - 2 = -2n + deg(branch).
inline int64_t spectral_genus(int n, int64_t branch_degree, bool branch_squarefree) {
  require(branch_squarefree, "genus asserted only for squarefree branch divisors");
  int64_t rhs = -2 * n + branch_degree;
  check_internal((rhs + 2) % 2 == 0, "Riemann-Hurwitz parity violation");
  int64_t g = (rhs + 2) / 2;
  check_internal(g >= 0, "negative genus from Riemann-Hurwitz");
  return g;
}

// Independent n=2 route: smooth hyperelliptic model w^2 = branch(s), genus
// floor((deg - 1)/2) for a squarefree right-hand side.
inline int64_t hyperelliptic_genus(int64_t branch_degree) {
  require(branch_degree >= 1, "hyperelliptic model needs a nonconstant branch divisor");
  return (branch_degree - 1) / 2;
}

// dim of the norm-zero part of Pic of the cover; over a genus-0 base this is
// just the cover genus.
inline int64_t prym_dimension_sl(int64_t genus) {
  require(genus >= 0, "genus must be nonnegative");
  return genus;
}

// Moduli of normalized sections: sum over monomials of (pole*k + 1), minus
// one for the overall scale.
inline int64_t base_moduli_dimension(int n, int k) {
  return (n - 1) + static_cast<int64_t>(k) * (n * (n + 1) / 2 - 1);
}

enum class ProbeVerdict { verified_irreducible, inconclusive };

struct ProbeResult {
  ProbeVerdict verdict = ProbeVerdict::inconclusive;
  std::string galois_note;
  std::map<std::string, int> pattern_counts;  // "3" or "1+2" etc -> occurrences
  std::string witness;                        // description for reducible patterns
};

// Specialize s at random points over several large prime fields and factor.
// An irreducible specialization of full degree certifies irreducibility of
// the cover; anything else stays inconclusive.
ProbeResult connectedness_probe(const Poly2<Rat>& r, int trials, uint64_t seed);

// Degree pattern of a squarefree monic polynomial over F_p, ascending
// (e.g. {1,2} for linear times quadratic); empty when not squarefree.
std::vector<int> factor_degree_pattern(const Poly<FpElem>& f, const GFp& field);

struct SpectralReport {
  int n = 0;
  int k = 0;
  int64_t branch_degree = 0;  // branch points at finite s
  bool branch_squarefree = false;
  bool no_infinity_branching = false;  // degree-fullness certificate
  bool genus_asserted = false;         // squarefree branch + certificate
  int64_t genus = -1;
  int64_t genus_hyperelliptic = -1;  // n = 2 only, second code path
  int64_t prym_dim = -1;
  int64_t base_dim = 0;
  int64_t total_moduli_dim = -1;
  std::string connectedness;  // "verified-irreducible-probe" | "inconclusive"
  std::string cameral_note;
  std::string branch_poly;    // canonical string of the monic branch divisor
  // selfcheck block (optional)
  bool selfcheck_ran = false;
  bool selfcheck_ok = false;
  std::string selfcheck_detail;
};

struct SpectralInstance {
  WeierstrassFamily<QQ> family;
  SpectralSection<QQ> section;
};

// Deterministic small-integer instance from a seed.
SpectralInstance seeded_instance(int n, int k, uint64_t seed);

// Reduce a rational instance mod p (denominators must be invertible).
WeierstrassFamily<GFp> reduce_family(const WeierstrassFamily<QQ>& fam, const GFp& field);
SpectralSection<GFp> reduce_section(const SpectralSection<QQ>& sec, const GFp& field);

// The spectral fiber over s0 as explicit points of E_{s0}(F_p): only defined
// at s0 where all n sheets are rational and distinct.
std::optional<std::vector<EcPoint<GFp>>> fiber_points_at(const SpectralSection<GFp>& sec,
                                                         const WeierstrassFamily<GFp>& fam,
                                                         const FpElem& s0);

// Cross-check the computed cover against Abel–Jacobi on specialized fibers:
// at `count` base points where the fiber divisor is rational, the divisor
// must sum to zero and its Abel–Jacobi image must equal the specialized
// section coefficients.  Returns the number of base points verified.
int specialization_coherence(const SpectralSection<GFp>& sec, const WeierstrassFamily<GFp>& fam,
                             int count);

SpectralReport spectral_report(const SpectralInstance& inst, bool selfcheck, uint64_t seed);

// Second-chart elimination for n = 3: the cubic in y cut out by the section,
// with x eliminated by hand (A is linear in x).  Its disc_y carries the
// spurious factor a_x^6 where the y-projection merges the three sheets.
Poly2<Rat> second_chart_n3(const SpectralSection<QQ>& sec, const WeierstrassFamily<QQ>& fam);

}  // namespace ellmod
