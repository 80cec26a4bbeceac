#pragma once

// The quotient maps from T-bundle data to the moduli of G-bundles, made
// exact: Abel–Jacobi for SL(n) via nullspaces of Riemann–Roch evaluation
// matrices, symmetric products of the x-line for the B/C series, weighted
// projective signatures for all types, and the Spin branch hyperplanes.

#include <algorithm>
#include <functional>
#include <map>

#include "ecurve.hpp"
#include "rootsys.hpp"

namespace ellmod {

// Projective point with coordinates normalized so the first nonzero entry
// is 1; equality is then plain componentwise equality.
template <class F>
struct ProjectivePoint {
  std::vector<typename F::Elem> coords;

  void normalize() {
    for (const auto& c : coords) {
      if (is_zero(c)) continue;
      typename F::Elem inv = elem_from_int(c, 1) / c;
      for (auto& x : coords) x = x * inv;
      return;
    }
    throw InternalError("projective point with all coordinates zero");
  }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.coords == b.coords;
  }

  std::string str() const {
    std::string out = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
      if (i) out += " : ";
      out += elem_str(coords[i]);
    }
    return out + ")";
  }
};

template <class F>
void validate_divisor(const WeierstrassCurve<F>& c, const std::vector<EcPoint<F>>& pts) {
  require(pts.size() >= 2, "divisor needs at least two points");
  for (const auto& p : pts) require(c.contains(p), "divisor point is not on the curve");
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      require(pts[i] != pts[j], "divisor is not reduced: repeated point");
  EcPoint<F> sum = EcPoint<F>::zero();
  for (const auto& p : pts) sum = ec_add(c, sum, p);
  if (!sum.inf) {
    std::string where = "(" + elem_str(sum.x) + ", " + elem_str(sum.y) + ")";
    throw InputError("divisor does not sum to the origin; group-law sum is " + where);
  }
}

// Coefficients, up to scale, of the unique function in span(rr_basis(n))
// vanishing on the divisor.  A divisor point at the origin imposes vanishing
// of the top pole-order coefficient.
template <class F>
ProjectivePoint<F> abel_jacobi_sl(const WeierstrassCurve<F>& c,
                                  const std::vector<EcPoint<F>>& pts) {
  validate_divisor(c, pts);
  int n = static_cast<int>(pts.size());
  auto basis = rr_basis(n);
  auto zero = c.field.zero(), one = c.field.one();
  std::vector<std::vector<typename F::Elem>> m;
  for (const auto& p : pts) {
    std::vector<typename F::Elem> row(basis.size(), zero);
    if (p.inf) {
      row[basis.size() - 1] = one;
    } else {
      for (size_t j = 0; j < basis.size(); ++j) row[j] = basis[j].eval(p.x, p.y);
    }
    m.push_back(std::move(row));
  }
  auto ns = nullspace(m);
  check_internal(ns.size() == 1, "Abel-Jacobi nullspace dimension is " +
                                     std::to_string(ns.size()) + ", expected 1");
  ProjectivePoint<F> out{ns[0]};
  out.normalize();
  return out;
}

// For n = 2 the image is a point of the x-line: the zero of the linear
// function a0 + a1 x, i.e. (-a0 : a1).
template <class F>
ProjectivePoint<F> aj2_as_xline_point(const ProjectivePoint<F>& aj) {
  require(aj.coords.size() == 2, "not an n=2 Abel-Jacobi image");
  ProjectivePoint<F> out{{-aj.coords[0], aj.coords[1]}};
  out.normalize();
  return out;
}

template <class F>
ProjectivePoint<F> x_coordinate_map(const WeierstrassCurve<F>& c, const EcPoint<F>& p) {
  if (p.inf) return ProjectivePoint<F>{{c.field.one(), c.field.zero()}};
  ProjectivePoint<F> out{{p.x, c.field.one()}};
  out.normalize();
  return out;
}

// Exhaustive check over a small prime field that a quotient map's fibers are
// exactly the unordered n-tuples, i.e. the map is injective on reduced
// divisors (S_n-orbits of tuples).  `image_key` must be constant on
// reorderings, which is verified on a sample.
bool fiber_equals_orbit_check(
    const WeierstrassCurve<GFp>& c, int n,
    const std::function<std::string(const std::vector<EcPoint<GFp>>&)>& image_key);

// Elementary symmetric coordinates of the x-values of the given points, as a
// point of Sym^r P^1 = P^r.  The Weyl group of the B/C series acts by signed
// permutations, and x(-P) = x(P), so this is the invariant datum.  A point at
// the origin contributes the point at infinity of the x-line.
template <class F>
ProjectivePoint<F> symprod_quotient_bc(const WeierstrassCurve<F>& c,
                                       const std::vector<EcPoint<F>>& pts) {
  require(!pts.empty(), "symmetric product of an empty tuple");
  for (const auto& p : pts) require(c.contains(p), "point is not on the curve");
  auto zero = c.field.zero(), one = c.field.one();
  // binary form prod_i (v_i X - u_i Y), stored by descending X-power
  std::vector<typename F::Elem> form{one};
  for (const auto& p : pts) {
    std::vector<typename F::Elem> next(form.size() + 1, zero);
    if (p.inf) {  // factor -Y
      for (size_t i = 0; i < form.size(); ++i) next[i + 1] = next[i + 1] - form[i];
    } else {  // factor (X - x Y)
      for (size_t i = 0; i < form.size(); ++i) {
        next[i] = next[i] + form[i];
        next[i + 1] = next[i + 1] - form[i] * p.x;
      }
    }
    form = std::move(next);
  }
  // sigma_j = (-1)^j [X^{r-j} Y^j], so affine tuples give the elementary
  // symmetric functions themselves
  std::vector<typename F::Elem> sigma(form.size(), zero);
  for (size_t j = 0; j < form.size(); ++j) sigma[j] = (j % 2 == 0) ? form[j] : -form[j];
  ProjectivePoint<F> out{std::move(sigma)};
  out.normalize();
  return out;
}

// The three hyperplanes in Sym^r P^1 of multisets containing a root of the
// cubic: coefficients ((-e)^r, ..., (-e)^0) against (sigma_0, ..., sigma_r).
template <class F>
std::vector<std::vector<typename F::Elem>> spin_branch_hyperplanes(
    const WeierstrassCurve<F>& c, int r) {
  require(r >= 1, "need r >= 1");
  auto torsion = two_torsion(c);
  require(torsion.size() == 4, "Spin branch data needs a split cubic");
  std::vector<std::vector<typename F::Elem>> planes;
  for (const auto& t : torsion) {
    if (t.inf) continue;
    std::vector<typename F::Elem> h(r + 1);
    typename F::Elem me = -t.x;
    typename F::Elem acc = c.field.one();
    for (int j = r; j >= 0; --j) {  // h[j] = (-e)^{r-j}
      h[j] = acc;
      acc = acc * me;
    }
    planes.push_back(std::move(h));
  }
  check_internal(planes.size() == 3, "expected exactly three branch hyperplanes");
  return planes;
}

struct WPSSignature {
  CartanType type;
  std::vector<int64_t> weights;  // r+1 entries, affine node first
  std::vector<int64_t> degrees;  // (0, d_1 <= ... <= d_r)
  bool family_pairing_unknown = false;  // set for E8
  static constexpr const char* pairing_order =
      "degrees ascending with d0=0 paired to the affine weight; remaining "
      "weights in simple-root order of the dual diagram";
};

WPSSignature wps_signature(CartanType t);

}  // namespace ellmod
