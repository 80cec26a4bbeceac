#pragma once

// Exact root systems for the simple types A--G: Cartan matrices, reflection
// closure, Weyl generators on weight coordinates, length classes, and the
// weighted-projective data (weights and invariant degrees) of the moduli
// space of bundles on an elliptic curve.
//
// Conventions.  cartan[i][j] = 2 (a_i, a_j) / (a_i, a_i), so a simple root
// a_j has weight coordinates equal to the j-th *column* of the Cartan matrix,
// and the reflection s_i acts on root coordinates c by
//   c -> c - (row_i(cartan) . c) e_i.
// Roots are stored as integer vectors in simple-root coordinates; weights as
// integer vectors in fundamental-weight coordinates.  Short roots are
// normalized to squared length 2.

#include <string>
#include <vector>

#include "linalg.hpp"

namespace ellmod {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Series series;
  int rank;

  static CartanType make(char series, int rank);  // validates admissibility
  static CartanType parse(const std::string& name);

  std::string name() const;
  friend bool operator==(const CartanType& a, const CartanType& b) {
    return a.series == b.series && a.rank == b.rank;
  }
};

// Every admissible type with rank <= max_rank, in series/rank order.
std::vector<CartanType> all_types(int max_rank);

struct RootSystemData {
  CartanType type;
  IntMat cartan;                 // rank x rank
  std::vector<int64_t> symmetrizer;  // d_i = (a_i, a_i)/2, short class = 1
  IntMat sym_bilinear;           // (a_i, a_j) = d_i * cartan[i][j], symmetric
  std::vector<IntVec> simple_roots;  // unit vectors in root coordinates
  std::vector<IntVec> roots;         // all roots, sorted lexicographically
  std::vector<IntMat> weyl_generators;  // simple reflections on weight coords

  int rank() const { return type.rank; }

  int64_t length2(const IntVec& root_coords) const;   // squared length
  int64_t short_length2() const;                      // = 2 by normalization
  int64_t long_length2() const;                       // = 2, 4, or 6
  bool two_lengths() const { return long_length2() != short_length2(); }

  IntVec root_to_weight(const IntVec& root_coords) const;  // cartan * c
  bool is_root(const IntVec& root_coords) const;

  // reflection s_i on root coordinates
  IntVec reflect_root(int i, const IntVec& c) const;
};

RootSystemData build_root_system(CartanType t);

int64_t cartan_determinant(const RootSystemData& rs);
CartanType dual_type(CartanType t);

// The unique dominant short root, in simple-root coordinates.
IntVec highest_short_root(const RootSystemData& rs);

// Looijenga weights: coefficients of the highest short root of the dual
// system, with 1 prepended for the affine node.  sum = dual Coxeter number.
std::vector<int64_t> wps_weights(CartanType t);

// (0, d_1 <= ... <= d_r) with d_i = exponent + 1.
std::vector<int64_t> invariant_degrees(CartanType t);

// Full Weyl orbit of a weight (fundamental-weight coordinates) by BFS over
// simple reflections.  Guarded: throws for rank > 7 rather than attempting
// an E8-sized enumeration.
std::vector<IntVec> weyl_orbit(const RootSystemData& rs, const IntVec& weight);

// Independent oracle tables, hardcoded from the classical formulas.  Kept in
// rootsys_tables.cpp, away from the computed quantities they cross-check.
int64_t weyl_order_table(CartanType t);
int64_t dual_coxeter_table(CartanType t);
int64_t positive_root_count_table(CartanType t);
std::vector<int> exponents_table(CartanType t);

}  // namespace ellmod
