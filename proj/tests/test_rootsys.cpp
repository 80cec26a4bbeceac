#include <doctest.h>

#include <algorithm>
#include <set>

#include "rootsys.hpp"

using namespace ellmod;

namespace {

// independent determinant oracle: cofactor expansion
int64_t det_by_expansion(const IntMat& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  int64_t acc = 0;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    IntMat minor;
    for (size_t i = 1; i < n; ++i) {
      IntVec row;
      for (size_t jj = 0; jj < n; ++jj)
        if (jj != j) row.push_back(m[i][jj]);
      minor.push_back(row);
    }
    int64_t sign = (j % 2 == 0) ? 1 : -1;
    acc += sign * m[0][j] * det_by_expansion(minor);
  }
  return acc;
}

}  // namespace

TEST_CASE("root counts from reflection closure") {
  CHECK(build_root_system(CartanType::make('G', 2)).roots.size() == 12);
  auto a1 = build_root_system(CartanType::make('A', 1));
  CHECK(a1.roots.size() == 2);
  CHECK(a1.roots == std::vector<IntVec>{{-1}, {1}});
  // E8: 240, cross-checked as rank * Coxeter number = 8 * 30
  CHECK(build_root_system(CartanType::make('E', 8)).roots.size() == 240);
  CHECK(build_root_system(CartanType::make('E', 8)).roots.size() == 8 * 30);
  CHECK(build_root_system(CartanType::make('F', 4)).roots.size() == 48);
  CHECK(build_root_system(CartanType::make('D', 4)).roots.size() == 24);
}

TEST_CASE("inadmissible types are refused") {
  CHECK_THROWS_AS(CartanType::make('E', 5), InputError);
  CHECK_THROWS_AS(CartanType::make('B', 1), InputError);
  CHECK_THROWS_AS(CartanType::make('G', 3), InputError);
  CHECK_THROWS_AS(CartanType::make('H', 2), InputError);
  CHECK_THROWS_AS(CartanType::parse("Q7"), InputError);
}

TEST_CASE("cartan determinants") {
  for (int r = 1; r <= 8; ++r) {
    auto rs = build_root_system(CartanType::make('A', r));
    CHECK(cartan_determinant(rs) == r + 1);
    CHECK(cartan_determinant(rs) == det_by_expansion(rs.cartan));
  }
  CHECK(cartan_determinant(build_root_system(CartanType::make('E', 8))) == 1);
  CHECK(cartan_determinant(build_root_system(CartanType::make('G', 2))) == 1);
  CHECK(cartan_determinant(build_root_system(CartanType::make('B', 5))) == 2);
  CHECK(cartan_determinant(build_root_system(CartanType::make('D', 6))) == 4);
  for (const auto& t : all_types(8)) {
    auto rs = build_root_system(t);
    CHECK(cartan_determinant(rs) == det_by_expansion(rs.cartan));
  }
}

TEST_CASE("dual types") {
  CHECK(dual_type(CartanType::make('B', 3)) == CartanType::make('C', 3));
  CHECK(dual_type(CartanType::make('C', 5)) == CartanType::make('B', 5));
  CHECK(dual_type(CartanType::make('A', 5)) == CartanType::make('A', 5));
  CHECK(dual_type(CartanType::make('F', 4)) == CartanType::make('F', 4));
}

TEST_CASE("highest short root") {
  for (int r = 1; r <= 6; ++r) {
    IntVec ones(r, 1);
    CHECK(highest_short_root(build_root_system(CartanType::make('A', r))) == ones);
  }
  for (int r = 2; r <= 6; ++r) {
    IntVec ones(r, 1);
    CHECK(highest_short_root(build_root_system(CartanType::make('B', r))) == ones);
  }
  CHECK(highest_short_root(build_root_system(CartanType::make('G', 2))) == IntVec{2, 1});
}

TEST_CASE("wps weights match the three pinned statements") {
  for (int r = 1; r <= 8; ++r) {
    auto w = wps_weights(CartanType::make('A', r));
    CHECK(static_cast<int>(w.size()) == r + 1);
    CHECK(std::all_of(w.begin(), w.end(), [](int64_t x) { return x == 1; }));
  }
  for (int r = 2; r <= 8; ++r) {
    auto w = wps_weights(CartanType::make('C', r));
    CHECK(std::all_of(w.begin(), w.end(), [](int64_t x) { return x == 1; }));
  }
  for (int r = 2; r <= 8; ++r) {
    auto w = wps_weights(CartanType::make('B', r));
    CHECK(std::count(w.begin(), w.end(), 1) == 3);
    CHECK(std::count(w.begin(), w.end(), 2) == r - 2);
  }
  CHECK(wps_weights(CartanType::make('G', 2)) == std::vector<int64_t>{1, 2, 1});
  CHECK(wps_weights(CartanType::make('F', 4)) == std::vector<int64_t>{1, 1, 2, 3, 2});
}

TEST_CASE("invariant degrees") {
  CHECK(invariant_degrees(CartanType::make('A', 4)) == std::vector<int64_t>{0, 2, 3, 4, 5});
  CHECK(invariant_degrees(CartanType::make('C', 4)) == std::vector<int64_t>{0, 2, 4, 6, 8});
  CHECK(invariant_degrees(CartanType::make('G', 2)) == std::vector<int64_t>{0, 2, 6});
  CHECK(invariant_degrees(CartanType::make('E', 8)) ==
        std::vector<int64_t>{0, 2, 8, 12, 14, 18, 20, 24, 30});
  CHECK(invariant_degrees(CartanType::make('D', 4)) == std::vector<int64_t>{0, 2, 4, 4, 6});
}

TEST_CASE("atlas identities for every admissible type of rank <= 8") {
  for (const auto& t : all_types(8)) {
    CAPTURE(t.name());
    auto w = wps_weights(t);
    auto d = invariant_degrees(t);
    int64_t sum_w = 0;
    for (int64_t x : w) sum_w += x;
    CHECK(sum_w == dual_coxeter_table(t));
    int64_t prod = 1, sum_dm1 = 0;
    for (size_t i = 1; i < d.size(); ++i) {
      prod *= d[i];
      sum_dm1 += d[i] - 1;
    }
    CHECK(prod == weyl_order_table(t));
    CHECK(sum_dm1 == positive_root_count_table(t));
    CHECK(sum_dm1 * 2 == static_cast<int64_t>(build_root_system(t).roots.size()));
  }
}

TEST_CASE("weyl generators: involutions, det -1, braid relations, stabilize R") {
  for (const auto& t : all_types(4)) {
    auto rs = build_root_system(t);
    int r = rs.rank();
    for (int i = 0; i < r; ++i) {
      const IntMat& s = rs.weyl_generators[i];
      CHECK(int_mat_mul(s, s) == int_identity(r));
      CHECK(int_mat_det(s) == -1);
    }
    // braid relations: (s_i s_j)^{m_ij} = 1 with m from the Cartan matrix
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        int64_t prod_entries = rs.cartan[i][j] * rs.cartan[j][i];
        int m = prod_entries == 0 ? 2 : prod_entries == 1 ? 3 : prod_entries == 2 ? 4 : 6;
        IntMat acc = int_identity(r);
        for (int rep = 0; rep < m; ++rep)
          acc = int_mat_mul(acc, int_mat_mul(rs.weyl_generators[i], rs.weyl_generators[j]));
        CHECK(acc == int_identity(r));
      }
    // each reflection permutes the root set (checked in root coordinates)
    std::set<IntVec> root_set(rs.roots.begin(), rs.roots.end());
    for (int i = 0; i < r; ++i)
      for (const auto& root : rs.roots) CHECK(root_set.count(rs.reflect_root(i, root)) == 1);
  }
}

TEST_CASE("weyl orbits") {
  auto a2 = build_root_system(CartanType::make('A', 2));
  CHECK(weyl_orbit(a2, {1, 0}).size() == 3);
  CHECK(weyl_orbit(a2, {0, 0}) == std::vector<IntVec>{{0, 0}});

  auto g2 = build_root_system(CartanType::make('G', 2));
  // highest root: the dominant long root, in weight coordinates
  IntVec highest;
  std::set<IntVec> long_roots_w;
  for (const auto& c : g2.roots) {
    if (g2.length2(c) != g2.long_length2()) continue;
    IntVec w = g2.root_to_weight(c);
    if (std::all_of(w.begin(), w.end(), [](int64_t x) { return x >= 0; })) highest = w;
    long_roots_w.insert(w);
  }
  REQUIRE(!highest.empty());
  auto orbit = weyl_orbit(g2, highest);
  CHECK(std::set<IntVec>(orbit.begin(), orbit.end()) == long_roots_w);  // the 6 long roots

  CHECK_THROWS_AS(weyl_orbit(build_root_system(CartanType::make('E', 8)), IntVec(8, 1)),
                  InputError);
}

TEST_CASE("root/weight coordinate conversion") {
  auto g2 = build_root_system(CartanType::make('G', 2));
  // alpha_j in weight coordinates is the j-th column of the Cartan matrix
  for (int j = 0; j < 2; ++j) {
    IntVec w = g2.root_to_weight(g2.simple_roots[j]);
    for (int i = 0; i < 2; ++i) CHECK(w[i] == g2.cartan[i][j]);
  }
  // two length classes: 2 and 6
  CHECK(g2.length2(g2.simple_roots[0]) == 2);
  CHECK(g2.length2(g2.simple_roots[1]) == 6);
}
