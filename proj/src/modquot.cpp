#include "modquot.hpp"

#include <set>

namespace ellmod {

namespace {

// sorted key for an unordered tuple of points
std::string subset_key(std::vector<EcPoint<GFp>> pts) {
  std::sort(pts.begin(), pts.end());
  std::string key;
  for (const auto& p : pts)
    key += p.inf ? "O;" : std::to_string(p.x.v) + "," + std::to_string(p.y.v) + ";";
  return key;
}

}  // namespace

bool fiber_equals_orbit_check(
    const WeierstrassCurve<GFp>& c, int n,
    const std::function<std::string(const std::vector<EcPoint<GFp>>&)>& image_key) {
  require(c.field.p <= 101, "fiber/orbit enumeration guarded to p <= 101");
  require(n >= 2 && n <= 4, "fiber/orbit enumeration guarded to n <= 4");
  auto pts = enumerate_points(c);
  size_t np = pts.size();

  std::map<std::string, std::string> subset_of_image;  // image key -> subset key
  bool injective = true;

  std::vector<size_t> idx(n);
  std::function<void(size_t, size_t)> rec = [&](size_t depth, size_t start) {
    if (!injective) return;
    if (depth == static_cast<size_t>(n)) {
      std::vector<EcPoint<GFp>> divisor;
      for (size_t i : idx) divisor.push_back(pts[i]);
      EcPoint<GFp> sum = EcPoint<GFp>::zero();
      for (const auto& p : divisor) sum = ec_add(c, sum, p);
      if (!sum.inf) return;
      std::string skey = subset_key(divisor);
      std::string ikey = image_key(divisor);
      // a permuted ordering must give the same image
      std::vector<EcPoint<GFp>> shuffled(divisor.rbegin(), divisor.rend());
      if (image_key(shuffled) != ikey) {
        injective = false;
        return;
      }
      auto [it, inserted] = subset_of_image.emplace(ikey, skey);
      if (!inserted && it->second != skey) injective = false;
      return;
    }
    for (size_t i = start; i < np; ++i) {
      idx[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
  return injective;
}

WPSSignature wps_signature(CartanType t) {
  WPSSignature sig;
  sig.type = t;
  sig.weights = wps_weights(t);
  sig.degrees = invariant_degrees(t);
  sig.family_pairing_unknown = (t.series == Series::E && t.rank == 8);
  return sig;
}

}  // namespace ellmod
