// Root data of reductive groups: the cocharacter lattice together with simple
// roots and coroots in fixed coordinates, plus the preset constructors and
// the group-expression grammar.
//
// Coordinate conventions:
//   SC(X):  lattice = coroot lattice, basis the simple coroots.
//   AD(X):  lattice = coweight lattice, basis the fundamental coweights, so
//           the coroot columns are the columns of the Cartan matrix and the
//           simple roots are coordinate functionals.
//   GL(n):  lattice = Z^n, coroots e_i - e_{i+1}.
//   T(r):   lattice = Z^r, empty root system.
//   INT(X; gens): sublattice of the coweight lattice generated by the coroots
//           and lifts of the given subgroup generators of the adjoint
//           fundamental group (invariant-factor coordinates).
#pragma once

#include "rootobs/root_system.hpp"

#include <string>
#include <vector>

namespace rootobs {

struct RootDatum {
  int lattice_rank = 0;   // n
  RootSystem rs;          // possibly empty (tori)
  IntMat simple_coroots;  // n x l, columns are coroots in lattice coordinates
  IntMat simple_roots;    // l x n, rows are roots as functionals on the lattice
  std::string name;

  int semisimple_rank() const { return rs.rank(); }

  // simple_roots * simple_coroots = Cartan; coroot columns independent; l <= n.
  void validate() const;

  // Lattice equal to the full coweight lattice in the AD coordinates above.
  bool is_adjoint_shaped() const;
};

RootDatum preset_sc(const std::vector<SimpleType>& factors);
RootDatum preset_ad(const std::vector<SimpleType>& factors);
RootDatum preset_gl(int n);
RootDatum preset_sl(int n);
RootDatum preset_pgl(int n);
RootDatum preset_torus(int r);
// One generator vector per chunk of k entries, k = number of invariant
// factors of the adjoint fundamental group of X.
RootDatum preset_intermediate(const SimpleType& type, const std::vector<std::vector<Int>>& gens);

RootDatum product(const std::vector<RootDatum>& terms);

// Grammar (case-insensitive keywords):
//   expr := term ("x" term)*
//   term := "SL(" n ")" | "GL(" n ")" | "PGL(" n ")" | "SC(" type ")"
//         | "AD(" type ")" | "T(" n ")" | "INT(" type ";" ints ")"
// Errors carry the offending position in the input string.
RootDatum parse_group_expression(const std::string& expr);

// Explicit root datum from its JSON document (see README for the schema).
RootDatum datum_from_json_text(const std::string& text);

}  // namespace rootobs
