#pragma once

// Points of the T-bundle moduli Hom(weight lattice, E), the Weyl action on
// them, the stratification by the subroot system killed by a point, the
// resulting deformation dimensions, and the SL(2) universal-space fiber
// counts.

#include <functional>
#include <map>
#include <string>

#include "ecurve.hpp"
#include "rootsys.hpp"

namespace ellmod {

enum class LengthClass { unmarked, short_roots, long_roots, mixed };

struct SubsystemFactor {
  CartanType type;
  LengthClass length = LengthClass::unmarked;
  std::string name() const;
};

struct SubsystemReport {
  std::vector<IntVec> roots;  // subset of the ambient roots, sorted
  std::vector<SubsystemFactor> factors;
  std::string type_name;  // "0" for the empty system, else e.g. "A2^long x A1^short"
  bool is_levi = false;
  int64_t dim_g_prime = 0;   // rank + |R'|
  int64_t nilpotent_dim = 0; // |R'|
};

// Classify a closed symmetric subset of the ambient roots as a product of
// simple types, each annotated by ambient length class.
SubsystemReport classify_subsystem(const std::vector<IntVec>& subsystem_roots,
                                   const RootSystemData& ambient);

// R' is Levi iff the ambient roots lying in its rational span are exactly R'.
bool subsystem_is_levi(const std::vector<IntVec>& subsystem_roots, const RootSystemData& ambient);

// ---------------------------------------------------------------------------

template <class F>
struct TBundlePoint {
  WeierstrassCurve<F> curve;
  std::vector<EcPoint<F>> images;  // images of the fundamental weights

  TBundlePoint(WeierstrassCurve<F> c, std::vector<EcPoint<F>> im)
      : curve(std::move(c)), images(std::move(im)) {
    for (const auto& p : images) require(curve.contains(p), "image point is not on the curve");
  }
};

// Z-linear extension: a weight in fundamental-weight coordinates goes to the
// corresponding combination of image points under the group law.
template <class F>
EcPoint<F> evaluate(const TBundlePoint<F>& p, const IntVec& weight) {
  require(weight.size() == p.images.size(), "weight has wrong dimension");
  EcPoint<F> acc = EcPoint<F>::zero();
  for (size_t i = 0; i < weight.size(); ++i)
    acc = ec_add(p.curve, acc, ec_scalar_mul(p.curve, weight[i], p.images[i]));
  return acc;
}

template <class F>
EcPoint<F> evaluate_root(const RootSystemData& rs, const TBundlePoint<F>& p, const IntVec& root) {
  return evaluate(p, rs.root_to_weight(root));
}

// Action of the simple reflection s_i, contravariantly:
//   evaluate(weyl_act(s_i, p), w) = evaluate(p, s_i(w)).
template <class F>
TBundlePoint<F> weyl_act_gen(const RootSystemData& rs, int i, const TBundlePoint<F>& p) {
  const IntMat& s = rs.weyl_generators[i];
  std::vector<EcPoint<F>> images;
  images.reserve(p.images.size());
  for (size_t j = 0; j < p.images.size(); ++j) {
    IntVec col(p.images.size());
    for (size_t l = 0; l < p.images.size(); ++l) col[l] = s[l][j];
    images.push_back(evaluate(p, col));
  }
  return TBundlePoint<F>(p.curve, std::move(images));
}

// Word acts left-to-right as a composition of simple reflections:
// word = (i1, ..., ik) is the element s_{i1} s_{i2} ... s_{ik}.
template <class F>
TBundlePoint<F> weyl_act_word(const RootSystemData& rs, const std::vector<int>& word,
                              const TBundlePoint<F>& p) {
  TBundlePoint<F> acc = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = weyl_act_gen(rs, *it, acc);
  return acc;
}

// General Weyl element given by its matrix on weight coordinates.
template <class F>
TBundlePoint<F> weyl_act_matrix(const IntMat& w, const TBundlePoint<F>& p) {
  IntMat winv = int_mat_inverse(w);
  std::vector<EcPoint<F>> images;
  images.reserve(p.images.size());
  for (size_t j = 0; j < p.images.size(); ++j) {
    IntVec col(p.images.size());
    for (size_t l = 0; l < p.images.size(); ++l) col[l] = winv[l][j];
    images.push_back(evaluate(p, col));
  }
  return TBundlePoint<F>(p.curve, std::move(images));
}

template <class F>
std::vector<IntVec> kernel_roots(const RootSystemData& rs, const TBundlePoint<F>& p) {
  std::vector<IntVec> kernel;
  for (const auto& root : rs.roots)
    if (evaluate_root(rs, p, root).inf) kernel.push_back(root);
  return kernel;
}

template <class F>
SubsystemReport kernel_subsystem(const RootSystemData& rs, const TBundlePoint<F>& p) {
  return classify_subsystem(kernel_roots(rs, p), rs);
}

inline std::pair<int64_t, int64_t> deformation_dims(const SubsystemReport& r, int rank) {
  return {rank + static_cast<int64_t>(r.roots.size()), static_cast<int64_t>(r.roots.size())};
}

// SL(2) universal-space fiber over the regular-centralizer base P^2:
// off the diagonal the fiber is the whole curve; on the diagonal it is the
// set of t with 2t = 0, i.e. the four 2-torsion points of a split curve.
struct Sl2Fiber {
  bool one_parameter_family = false;
  int64_t count = 0;  // meaningful when not a family
  std::string describe() const {
    return one_parameter_family ? "one-parameter family (E)" : std::to_string(count) + " points";
  }
};

template <class F>
Sl2Fiber sl2_ubar_fiber_count(const WeierstrassCurve<F>& c, bool on_diagonal) {
  auto torsion = two_torsion(c);
  require(torsion.size() == 4, "sl2 fiber count needs all 2-torsion rational (split cubic)");
  if (!on_diagonal) return Sl2Fiber{true, 0};
  return Sl2Fiber{false, static_cast<int64_t>(torsion.size())};
}

// Exhaustive stratum scan for small situations: every assignment of image
// points from `pool` to the fundamental weights, classified by kernel type.
template <class F>
std::map<std::string, SubsystemReport> stratum_scan(const RootSystemData& rs,
                                                    const WeierstrassCurve<F>& curve,
                                                    const std::vector<EcPoint<F>>& pool) {
  int r = rs.rank();
  std::map<std::string, SubsystemReport> found;
  std::vector<size_t> idx(r, 0);
  while (true) {
    std::vector<EcPoint<F>> images;
    images.reserve(r);
    for (int i = 0; i < r; ++i) images.push_back(pool[idx[i]]);
    TBundlePoint<F> p(curve, images);
    SubsystemReport rep = kernel_subsystem(rs, p);
    found.emplace(rep.type_name, rep);  // keep the first witness of each type
    int pos = r - 1;
    while (pos >= 0 && idx[pos] + 1 == pool.size()) idx[pos--] = 0;
    if (pos < 0) break;
    ++idx[pos];
  }
  return found;
}

}  // namespace ellmod
