// Hardcoded classical tables used as independent oracles against the
// computed root-system data.  Nothing here is derived from the reflection
// closure or the Cartan matrices in rootsys.cpp.

#include "rootsys.hpp"

namespace ellmod {

int64_t weyl_order_table(CartanType t) {
  int64_t r = t.rank;
  auto factorial = [](int64_t n) {
    int64_t f = 1;
    for (int64_t i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (t.series) {
    case Series::A: return factorial(r + 1);
    case Series::B:
    case Series::C: return (int64_t(1) << r) * factorial(r);
    case Series::D: return (int64_t(1) << (r - 1)) * factorial(r);
    case Series::E:
      if (r == 6) return 51840;
      if (r == 7) return 2903040;
      return 696729600;
    case Series::F: return 1152;
    case Series::G: return 12;
  }
  throw InternalError("unreachable");
}

int64_t dual_coxeter_table(CartanType t) {
  int64_t r = t.rank;
  switch (t.series) {
    case Series::A: return r + 1;
    case Series::B: return 2 * r - 1;
    case Series::C: return r + 1;
    case Series::D: return 2 * r - 2;
    case Series::E:
      if (r == 6) return 12;
      if (r == 7) return 18;
      return 30;
    case Series::F: return 9;
    case Series::G: return 4;
  }
  throw InternalError("unreachable");
}

int64_t positive_root_count_table(CartanType t) {
  int64_t r = t.rank;
  switch (t.series) {
    case Series::A: return r * (r + 1) / 2;
    case Series::B:
    case Series::C: return r * r;
    case Series::D: return r * (r - 1);
    case Series::E:
      if (r == 6) return 36;
      if (r == 7) return 63;
      return 120;
    case Series::F: return 24;
    case Series::G: return 6;
  }
  throw InternalError("unreachable");
}

std::vector<int> exponents_table(CartanType t) {
  int r = t.rank;
  std::vector<int> e;
  switch (t.series) {
    case Series::A:
      for (int i = 1; i <= r; ++i) e.push_back(i);
      break;
    case Series::B:
    case Series::C:
      for (int i = 1; i <= r; ++i) e.push_back(2 * i - 1);
      break;
    case Series::D:
      for (int i = 1; i < r; ++i) e.push_back(2 * i - 1);
      e.push_back(r - 1);
      break;
    case Series::E:
      if (r == 6) e = {1, 4, 5, 7, 8, 11};
      else if (r == 7) e = {1, 5, 7, 9, 11, 13, 17};
      else e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case Series::F:
      e = {1, 5, 7, 11};
      break;
    case Series::G:
      e = {1, 5};
      break;
  }
  return e;
}

}  // namespace ellmod
