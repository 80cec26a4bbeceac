#include "tbundle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ellmod {

std::string SubsystemFactor::name() const {
  std::string out = type.name();
  if (length == LengthClass::short_roots) out += "^short";
  if (length == LengthClass::long_roots) out += "^long";
  return out;
}

namespace {

// Deterministic functional that separates sums of roots: coordinates of
// roots in any simple system are bounded by 6 in absolute value, so base-17
// digits are unambiguous and no root evaluates to 0.
int64_t split_functional(const IntVec& c) {
  int64_t acc = 0, w = 1;
  for (int64_t ci : c) {
    acc += ci * w;
    w *= 17;
  }
  return acc;
}

// Cartan matrix of a candidate simple type in this project's convention.
IntMat candidate_cartan(CartanType t) {
  return build_root_system(t).cartan;
}

bool permutation_equivalent(const IntMat& a, const IntMat& b) {
  size_t n = a.size();
  if (b.size() != n) return false;
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (size_t i = 0; i < n && match; ++i)
      for (size_t j = 0; j < n && match; ++j)
        if (a[perm[i]][perm[j]] != b[i][j]) match = false;
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

CartanType identify_component(const IntMat& cartan) {
  size_t n = cartan.size();
  std::vector<CartanType> candidates;
  candidates.push_back(CartanType::make('A', static_cast<int>(n)));
  if (n >= 2) {
    candidates.push_back(CartanType::make('B', static_cast<int>(n)));
    candidates.push_back(CartanType::make('C', static_cast<int>(n)));
  }
  if (n >= 3) candidates.push_back(CartanType::make('D', static_cast<int>(n)));
  if (n >= 6 && n <= 8) candidates.push_back(CartanType::make('E', static_cast<int>(n)));
  if (n == 4) candidates.push_back(CartanType::make('F', 4));
  if (n == 2) candidates.push_back(CartanType::make('G', 2));
  for (const auto& t : candidates)
    if (permutation_equivalent(cartan, candidate_cartan(t))) return t;
  throw InternalError("extracted Cartan matrix matches no simple type");
}

}  // namespace

bool subsystem_is_levi(const std::vector<IntVec>& subsystem_roots, const RootSystemData& ambient) {
  if (subsystem_roots.empty()) return true;
  RatRowSpace span(ambient.rank());
  for (const auto& c : subsystem_roots) span.add(c);
  std::set<IntVec> in_subsystem(subsystem_roots.begin(), subsystem_roots.end());
  for (const auto& root : ambient.roots)
    if (span.contains(root) && !in_subsystem.count(root)) return false;
  return true;
}

SubsystemReport classify_subsystem(const std::vector<IntVec>& subsystem_roots,
                                   const RootSystemData& ambient) {
  SubsystemReport rep;
  rep.roots = subsystem_roots;
  std::sort(rep.roots.begin(), rep.roots.end());
  rep.dim_g_prime = ambient.rank() + static_cast<int64_t>(rep.roots.size());
  rep.nilpotent_dim = static_cast<int64_t>(rep.roots.size());
  rep.is_levi = subsystem_is_levi(rep.roots, ambient);

  if (rep.roots.empty()) {
    rep.type_name = "0";
    return rep;
  }

  // sanity: closed and symmetric
  std::set<IntVec> rset(rep.roots.begin(), rep.roots.end());
  for (const auto& a : rep.roots) {
    IntVec neg(a.size());
    for (size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    check_internal(rset.count(neg) == 1, "subsystem is not symmetric");
    for (const auto& b : rep.roots) {
      IntVec sum(a.size());
      for (size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
      if (ambient.is_root(sum)) check_internal(rset.count(sum) == 1, "subsystem is not closed");
    }
  }

  // positive part and its indecomposable elements
  std::vector<IntVec> positives;
  for (const auto& c : rep.roots)
    if (split_functional(c) > 0) positives.push_back(c);
  std::set<IntVec> pset(positives.begin(), positives.end());
  std::vector<IntVec> simples;
  for (const auto& beta : positives) {
    bool decomposable = false;
    for (const auto& gamma : positives) {
      if (gamma == beta) continue;
      IntVec delta(beta.size());
      for (size_t i = 0; i < beta.size(); ++i) delta[i] = beta[i] - gamma[i];
      if (pset.count(delta)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples.push_back(beta);
  }

  // Cartan matrix of the extracted simple system, in the ambient pairing
  size_t m = simples.size();
  IntMat cm(m, IntVec(m, 0));
  auto pair = [&](const IntVec& u, const IntVec& v) {
    int64_t acc = 0;
    for (size_t i = 0; i < u.size(); ++i)
      for (size_t j = 0; j < v.size(); ++j) acc += u[i] * ambient.sym_bilinear[i][j] * v[j];
    return acc;
  };
  for (size_t i = 0; i < m; ++i) {
    int64_t len_i = pair(simples[i], simples[i]);
    for (size_t j = 0; j < m; ++j) {
      int64_t num = 2 * pair(simples[i], simples[j]);
      check_internal(num % len_i == 0, "non-integral Cartan pairing in subsystem");
      cm[i][j] = num / len_i;
    }
  }

  // split into connected components
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (size_t i = 0; i < m; ++i) {
    if (comp[i] != -1) continue;
    std::vector<size_t> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      size_t u = stack.back();
      stack.pop_back();
      for (size_t v = 0; v < m; ++v)
        if (comp[v] == -1 && cm[u][v] != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }

  for (int c = 0; c < ncomp; ++c) {
    std::vector<size_t> members;
    for (size_t i = 0; i < m; ++i)
      if (comp[i] == c) members.push_back(i);
    IntMat sub(members.size(), IntVec(members.size()));
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = 0; j < members.size(); ++j) sub[i][j] = cm[members[i]][members[j]];
    SubsystemFactor factor;
    factor.type = identify_component(sub);
    if (ambient.two_lengths()) {
      bool has_short = false, has_long = false;
      for (size_t i : members) {
        if (ambient.length2(simples[i]) == ambient.short_length2()) has_short = true;
        else has_long = true;
      }
      factor.length = has_short && has_long ? LengthClass::mixed
                      : has_short           ? LengthClass::short_roots
                                            : LengthClass::long_roots;
      if (factor.length == LengthClass::mixed) factor.length = LengthClass::unmarked;
    }
    rep.factors.push_back(factor);
  }

  // canonical order: higher rank first, then series letter, then long before
  // short (the classical order for names like A1^long x A1^short)
  std::sort(rep.factors.begin(), rep.factors.end(),
            [](const SubsystemFactor& a, const SubsystemFactor& b) {
              if (a.type.rank != b.type.rank) return a.type.rank > b.type.rank;
              if (a.type.series != b.type.series) return a.type.series < b.type.series;
              return static_cast<int>(a.length) > static_cast<int>(b.length);
            });
  std::string name;
  for (const auto& f : rep.factors) {
    if (!name.empty()) name += " x ";
    name += f.name();
  }
  rep.type_name = name;
  return rep;
}

}  // namespace ellmod
