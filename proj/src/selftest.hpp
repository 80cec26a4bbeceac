#pragma once

// The acceptance suite: one callable per criterion, exact expectations only.
// Used by cmd_selftest (JSON payload) and by the acceptance test binary
// (per-criterion pass/fail lines with runtime bounds).

#include <cstdint>
#include <vector>

#include "report.hpp"

namespace ellmod {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  Json details;  // deterministic payload fragment
};

// Frozen constants for the n=3, k=1 spectral family, derived by the
// two-chart discriminant oracle in tests/oracle_spectral.cpp before the
// suite was sealed.  branch = disc_x / a_y^2 exactly, reconciled against
// disc_y / a_x^6 in the y-chart.
inline constexpr int64_t kFrozenBranchDegreeN3K1 = 30;
inline constexpr int64_t kFrozenGenusN3K1 = 13;

CriterionResult criterion_wps_atlas();          // 1
CriterionResult criterion_cartan_determinants(); // 2
CriterionResult criterion_group_law(uint64_t seed);  // 3
CriterionResult criterion_quotient_fibers();    // 4
CriterionResult criterion_strata(uint64_t seed); // 5
CriterionResult criterion_sl2_counts();         // 6
CriterionResult criterion_spectral(uint64_t seed);  // 7

std::vector<CriterionResult> run_acceptance_criteria(uint64_t seed);

Json criteria_payload(const std::vector<CriterionResult>& results);

}  // namespace ellmod
