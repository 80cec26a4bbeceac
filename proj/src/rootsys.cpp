#include "rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ellmod {

CartanType CartanType::make(char series, int rank) {
  bool ok = false;
  switch (series) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank == 6 || rank == 7 || rank == 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  require(ok, std::string("inadmissible Cartan type ") + series + std::to_string(rank));
  return CartanType{static_cast<Series>(series), rank};
}

CartanType CartanType::parse(const std::string& name) {
  require(name.size() >= 2, "malformed type token '" + name + "'");
  char s = name[0];
  try {
    return make(s, std::stoi(name.substr(1)));
  } catch (const std::invalid_argument&) {
    throw InputError("malformed type token '" + name + "'");
  } catch (const std::out_of_range&) {
    throw InputError("malformed type token '" + name + "'");
  }
}

std::string CartanType::name() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

std::vector<CartanType> all_types(int max_rank) {
  require(max_rank >= 1 && max_rank <= 8, "rank bound must be in 1..8");
  std::vector<CartanType> out;
  for (char s : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
    int lo = s == 'A' ? 1 : s == 'D' ? 3 : s == 'E' ? 6 : s == 'F' ? 4 : 2;
    int hi = s == 'F' ? 4 : s == 'G' ? 2 : max_rank;
    for (int r = lo; r <= hi && r <= max_rank; ++r) {
      if (s == 'F' && r != 4) continue;
      if (s == 'G' && r != 2) continue;
      out.push_back(CartanType{static_cast<Series>(s), r});
    }
  }
  return out;
}

namespace {

IntMat cartan_matrix(CartanType t) {
  int r = t.rank;
  IntMat m(r, IntVec(r, 0));
  for (int i = 0; i < r; ++i) m[i][i] = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) m[i][i + 1] = m[i + 1][i] = -1;
  };
  switch (t.series) {
    case Series::A:
      chain(r);
      break;
    case Series::B:  // a_r is the short root
      chain(r);
      m[r - 1][r - 2] = -2;
      break;
    case Series::C:  // a_r is the long root
      chain(r);
      m[r - 2][r - 1] = -2;
      break;
    case Series::D:
      chain(r - 1);
      m[r - 3][r - 1] = m[r - 1][r - 3] = -1;
      break;
    case Series::E: {
      // Bourbaki: chain 1-3-4-5-...-r with node 2 attached to node 4.
      auto link = [&](int a, int b) { m[a - 1][b - 1] = m[b - 1][a - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < r; ++i) link(i, i + 1);
      break;
    }
    case Series::F:  // a_1, a_2 long; a_3, a_4 short
      chain(4);
      m[2][1] = -2;
      break;
    case Series::G:  // a_1 short, a_2 long
      m[0][1] = -3;
      m[1][0] = -1;
      break;
  }
  return m;
}

std::vector<int64_t> symmetrizer_for(CartanType t) {
  int r = t.rank;
  std::vector<int64_t> d(r, 1);
  switch (t.series) {
    case Series::B:
      for (int i = 0; i + 1 < r; ++i) d[i] = 2;
      break;
    case Series::C:
      d[r - 1] = 2;
      break;
    case Series::F:
      d[0] = d[1] = 2;
      break;
    case Series::G:
      d[1] = 3;
      break;
    default:
      break;  // simply laced
  }
  return d;
}

}  // namespace

IntVec RootSystemData::reflect_root(int i, const IntVec& c) const {
  int64_t pairing = 0;
  for (size_t j = 0; j < c.size(); ++j) pairing += cartan[i][j] * c[j];
  IntVec out = c;
  out[i] -= pairing;
  return out;
}

int64_t RootSystemData::length2(const IntVec& c) const {
  int64_t acc = 0;
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c.size(); ++j) acc += c[i] * sym_bilinear[i][j] * c[j];
  return acc;
}

int64_t RootSystemData::short_length2() const { return 2; }

int64_t RootSystemData::long_length2() const {
  int64_t m = 2;
  for (int64_t d : symmetrizer) m = std::max(m, 2 * d);
  return m;
}

IntVec RootSystemData::root_to_weight(const IntVec& c) const {
  return int_mat_vec(cartan, c);
}

bool RootSystemData::is_root(const IntVec& c) const {
  return std::binary_search(roots.begin(), roots.end(), c);
}

RootSystemData build_root_system(CartanType t) {
  RootSystemData rs;
  rs.type = t;
  rs.cartan = cartan_matrix(t);
  rs.symmetrizer = symmetrizer_for(t);
  int r = t.rank;

  rs.sym_bilinear.assign(r, IntVec(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) rs.sym_bilinear[i][j] = rs.symmetrizer[i] * rs.cartan[i][j];
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      check_internal(rs.sym_bilinear[i][j] == rs.sym_bilinear[j][i],
                     "symmetrized Cartan matrix is not symmetric");

  rs.simple_roots.resize(r);
  for (int i = 0; i < r; ++i) {
    rs.simple_roots[i].assign(r, 0);
    rs.simple_roots[i][i] = 1;
  }

  // reflection closure from the simple roots
  std::set<IntVec> closure(rs.simple_roots.begin(), rs.simple_roots.end());
  std::vector<IntVec> frontier(rs.simple_roots);
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& c : frontier)
      for (int i = 0; i < r; ++i) {
        IntVec image = rs.reflect_root(i, c);
        if (closure.insert(image).second) next.push_back(std::move(image));
      }
    frontier = std::move(next);
  }
  rs.roots.assign(closure.begin(), closure.end());

  // simple reflections on weight coordinates: S_i = I - col_i(cartan) e_i^T
  rs.weyl_generators.resize(r);
  for (int i = 0; i < r; ++i) {
    IntMat s = int_identity(r);
    for (int j = 0; j < r; ++j) s[j][i] -= rs.cartan[j][i];
    rs.weyl_generators[i] = std::move(s);
  }
  return rs;
}

int64_t cartan_determinant(const RootSystemData& rs) { return int_mat_det(rs.cartan); }

CartanType dual_type(CartanType t) {
  if (t.series == Series::B) return CartanType{Series::C, t.rank};
  if (t.series == Series::C) return CartanType{Series::B, t.rank};
  return t;
}

IntVec highest_short_root(const RootSystemData& rs) {
  const int64_t target = rs.short_length2();
  for (const auto& c : rs.roots) {
    if (rs.length2(c) != target) continue;
    IntVec w = rs.root_to_weight(c);
    bool dominant = std::all_of(w.begin(), w.end(), [](int64_t x) { return x >= 0; });
    if (dominant) return c;
  }
  throw InternalError("no dominant short root found");
}

std::vector<int64_t> wps_weights(CartanType t) {
  RootSystemData dual = build_root_system(dual_type(t));
  IntVec hsr = highest_short_root(dual);
  std::vector<int64_t> w;
  w.reserve(hsr.size() + 1);
  w.push_back(1);  // affine node
  for (int64_t c : hsr) w.push_back(c);
  return w;
}

std::vector<int64_t> invariant_degrees(CartanType t) {
  std::vector<int> exps = exponents_table(t);
  std::vector<int64_t> d;
  d.reserve(exps.size() + 1);
  d.push_back(0);
  for (int e : exps) d.push_back(e + 1);
  std::sort(d.begin() + 1, d.end());
  return d;
}

std::vector<IntVec> weyl_orbit(const RootSystemData& rs, const IntVec& weight) {
  require(rs.rank() <= 7,
          "weyl_orbit is guarded to rank <= 7; full enumeration refused for " + rs.type.name());
  require(static_cast<int>(weight.size()) == rs.rank(), "weight has wrong dimension");
  std::set<IntVec> seen{weight};
  std::vector<IntVec> frontier{weight};
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& w : frontier)
      for (const auto& s : rs.weyl_generators) {
        IntVec image = int_mat_vec(s, w);
        if (seen.insert(image).second) next.push_back(std::move(image));
      }
    frontier = std::move(next);
  }
  return std::vector<IntVec>(seen.begin(), seen.end());
}

}  // namespace ellmod
