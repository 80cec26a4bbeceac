// Derivation program for the frozen n=3, k=1 spectral constants, kept with
// the test suite so the numbers in selftest.hpp stay reproducible.
//
// Two independent routes to the branch divisor of the degree-3 cover:
//   x-chart: disc_x(A^2 - B^2 c) with the spurious factor a_y^2 removed
//            (the x-projection merges the +-y pair over roots of a_y);
//            disc_x computed by Bareiss elimination on the Sylvester matrix.
//   y-chart: disc_y of the cubic in y cut out by the section (x eliminated by
//            hand), spurious factor a_x^6 removed (all three sheets share a
//            y-value over roots of a_x); disc_y recomputed a second way, by
//            Bareiss elimination on the Sylvester matrix over Q[s],
//            independent of the evaluation/interpolation code path.
// The two monic results must coincide; their degree fixes branch = 30 and,
// via Riemann–Hurwitz (2g - 2 = -6 + 30), genus = 13.

#include <cstdio>

#include "selftest.hpp"
#include "spectral.hpp"

using namespace ellmod;

namespace {

int run_for_seed(uint64_t seed) {
  SpectralInstance inst = seeded_instance(3, 1, seed);
  const Poly<Rat>& ax = inst.section.coeffs[1];
  const Poly<Rat>& ay = inst.section.coeffs[2];

  // x-chart
  Poly2<Rat> r = eliminate_fiber_coordinate(inst.section, inst.family);
  Poly<Rat> disc_x = poly2_disc_x(r);
  Poly<Rat> branch_x = disc_x;
  int mult_y = 0;
  while (true) {
    auto [q, rem] = poly_divmod(branch_x, ay);
    if (!rem.zero()) break;
    branch_x = q;
    ++mult_y;
  }
  std::printf("  seed %llu: disc_x degree %d, a_y multiplicity %d, branch degree %d\n",
              static_cast<unsigned long long>(seed), disc_x.degree(), mult_y,
              branch_x.degree());
  if (mult_y != 2) {
    std::printf("  UNEXPECTED a_y multiplicity\n");
    return 1;
  }

  // y-chart, discriminant computed twice (interpolation vs Sylvester/Bareiss)
  Poly2<Rat> g = second_chart_n3(inst.section, inst.family);
  Poly<Rat> disc_y = poly2_disc_x(g);
  Poly<Rat> disc_y_syl = poly2_disc_x_sylvester(g);
  if (!(disc_y == disc_y_syl)) {
    std::printf("  interpolation and Sylvester routes disagree on disc_y\n");
    return 1;
  }
  Poly<Rat> branch_y = disc_y;
  int mult_x = 0;
  while (true) {
    auto [q, rem] = poly_divmod(branch_y, ax);
    if (!rem.zero()) break;
    branch_y = q;
    ++mult_x;
  }
  std::printf("  seed %llu: disc_y degree %d, a_x multiplicity %d, branch degree %d\n",
              static_cast<unsigned long long>(seed), disc_y.degree(), mult_x,
              branch_y.degree());
  if (mult_x != 6) {
    std::printf("  UNEXPECTED a_x multiplicity\n");
    return 1;
  }

  if (!(poly_monic(branch_x) == poly_monic(branch_y))) {
    std::printf("  branch divisors from the two charts DISAGREE\n");
    return 1;
  }
  if (branch_x.degree() != kFrozenBranchDegreeN3K1) {
    std::printf("  branch degree does not match the frozen value %lld\n",
                static_cast<long long>(kFrozenBranchDegreeN3K1));
    return 1;
  }
  int64_t genus = spectral_genus(3, branch_x.degree(), poly_squarefree(branch_x));
  if (genus != kFrozenGenusN3K1) {
    std::printf("  genus does not match the frozen value %lld\n",
                static_cast<long long>(kFrozenGenusN3K1));
    return 1;
  }
  std::printf("  seed %llu: charts agree; branch %d, genus %lld\n",
              static_cast<unsigned long long>(seed), branch_x.degree(),
              static_cast<long long>(genus));
  return 0;
}

}  // namespace

int main() {
  std::printf("two-chart oracle for the n=3, k=1 spectral family\n");
  for (uint64_t seed : {20250802ULL, 7ULL, 99991ULL}) {
    if (run_for_seed(seed) != 0) {
      std::printf("ORACLE FAILED\n");
      return 1;
    }
  }
  std::printf("frozen constants confirmed: branch degree %lld, genus %lld\n",
              static_cast<long long>(kFrozenBranchDegreeN3K1),
              static_cast<long long>(kFrozenGenusN3K1));
  return 0;
}
