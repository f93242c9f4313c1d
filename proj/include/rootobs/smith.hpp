// Normal forms and lattice operations over Z: Smith and Hermite forms,
// kernels, saturation, exact linear solving.
#pragma once

#include "rootobs/matrix.hpp"

#include <optional>

namespace rootobs {

struct SmithDecomposition {
  IntMat u;  // unimodular, rows x rows
  IntMat v;  // unimodular, cols x cols
  IntMat d;  // diagonal, same shape as input; d_i >= 0, d_i | d_{i+1}, zeros trail

  // Diagonal entries, length min(rows, cols).
  std::vector<Int> diagonal() const;
  int rank() const;  // number of nonzero diagonal entries
};

// u*a*v = d. Pivot choice: smallest nonzero |entry|, ties by lowest row, then
// lowest column. Deterministic for fixed input.
SmithDecomposition smith_normal_form(const IntMat& a);

// Test hook: when enabled, smith_normal_form corrupts one diagonal entry of
// its result so downstream property checks must fail. Never use outside the
// selftest harness.
void set_snf_fault_injection(bool enabled);

// Exact inverse of a unimodular integer matrix.
IntMat unimodular_inverse(const IntMat& u);

// Column-style Hermite normal form: the canonical basis of the column span.
// Full column rank output, zero columns dropped, pivots positive, entries in
// the pivot row reduced into [0, pivot).
IntMat column_hnf(const IntMat& a);

// Canonical Z-basis of {x : a*x = 0}; the basis is saturated (primitive).
IntMat kernel_basis(const IntMat& a);

// Canonical basis of {x in Z^ambient_rank : m*x in column-span(sub) for some m >= 1}.
IntMat saturation(const IntMat& sub, int ambient_rank);

// One integer solution of a*x = b, if any.
std::optional<std::vector<Int>> solve(const IntMat& a, const std::vector<Int>& b);

// Solves a*X = b column by column; nullopt if any column is unsolvable.
std::optional<IntMat> solve_columns(const IntMat& a, const IntMat& b);

bool in_column_span(const IntMat& span, const std::vector<Int>& x);

// Canonical basis of {x : a*x == 0 (mod m)}, m >= 1.
IntMat preimage_lattice_mod(const IntMat& a, const Int& m);

}  // namespace rootobs
