// Simple root systems of types A-G: Cartan matrices, positive-root closure,
// highest roots. Bourbaki numbering throughout, except G2 where the short
// simple root comes first.
#pragma once

#include "rootobs/matrix.hpp"

#include <string>
#include <vector>

namespace rootobs {

struct SimpleType {
  char family = 'A';  // one of A B C D E F G
  int rank = 1;

  std::string str() const;  // "A3", "E7", ...
  bool operator==(const SimpleType& o) const { return family == o.family && rank == o.rank; }
};

// Throws input_error outside the legal ranges (A: l>=1, B: l>=2, C: l>=3 with
// C2 redirected to B2, D: l>=4, E: 6..8, F: 4, G: 2).
SimpleType make_simple_type(char family, int rank);
SimpleType parse_simple_type(const std::string& s);

// Cartan matrix with entries c[i][j] = alpha_i(alpha_j^vee).
IntMat cartan_matrix(const SimpleType& t);

// Closed-form number of positive roots.
long expected_positive_roots(const SimpleType& t);

struct RootSystem {
  std::vector<SimpleType> factors;
  IntMat cartan;                                 // l x l, block diagonal
  std::vector<std::vector<Int>> positive_roots;  // simple-root coordinates, length l
  std::vector<std::vector<Int>> highest_roots;   // one per factor, length l
  std::vector<int> factor_offset;                // size factors+1, offsets into [0, l)

  int rank() const { return cartan.rows(); }
  bool empty() const { return factors.empty(); }
  int factor_of_index(int i) const;

  // alpha(x) for a root alpha in simple-root coordinates and x a coweight in
  // fundamental-coweight coordinates: a plain dot product.
  static Int pair_root_coweight(const std::vector<Int>& root, const std::vector<Int>& coweight);
};

// Positive roots by closure: starting from the simple roots, repeatedly add a
// simple root whenever the root-string arithmetic of the Cartan matrix says
// the sum is again a root.
RootSystem build_root_system(const std::vector<SimpleType>& factors);

// Matrix of the simple reflection s_k on coroot coordinates:
// s_k(alpha_j^vee) = alpha_j^vee - c[k][j] * alpha_k^vee.
IntMat coroot_reflection(const IntMat& cartan, int k);

// Highest root of the dual root system per factor (simple-coroot coordinates
// of the full system). Used to sign-normalize invariant forms.
std::vector<std::vector<Int>> highest_dual_roots(const RootSystem& rs);

// Every simple type of rank <= max_rank, families A..G, rank ascending.
std::vector<SimpleType> all_simple_types(int max_rank);

}  // namespace rootobs
