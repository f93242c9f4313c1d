// Finitely generated abelian groups in invariant-factor form, with generator
// lifts into an ambient lattice, plus homomorphisms between them.
#pragma once

#include "rootobs/smith.hpp"

#include <optional>
#include <string>

namespace rootobs {

// Z^free_rank + Z/n_1 + ... + Z/n_k with 2 <= n_1 | n_2 | ... | n_k.
// Generators are ordered free part first, then torsion factors ascending.
// generator_lifts columns lift the generators into whatever ambient space the
// group was constructed from; coord_map sends an ambient vector to generator
// coordinates (exact before reduction mod orders). Either may be absent
// (zero-size) for abstract groups.
struct FinAbGroup {
  long free_rank = 0;
  std::vector<Int> invariant_factors;
  RatMat generator_lifts;
  IntMat coord_map;

  static FinAbGroup trivial();
  // Abstract group with the given shape and no ambient data.
  static FinAbGroup abstract(long free_rank, std::vector<Int> factors);

  int ngens() const { return int(free_rank) + int(invariant_factors.size()); }
  bool finite() const { return free_rank == 0; }
  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  Int order() const;      // throws on infinite groups
  Int exponent() const;   // largest invariant factor, 1 for trivial; throws on infinite

  // Order of a single generator: 0 marks a free generator.
  Int generator_order(int i) const;

  // Relation lattice in generator coordinates: columns n_i * e_i, torsion only.
  IntMat relations() const;

  // Torsion coordinates reduced into [0, n_i); free coordinates untouched.
  std::vector<Int> reduce(std::vector<Int> coords) const;

  std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const;
  std::vector<Int> scale(const Int& c, const std::vector<Int>& a) const;
  bool is_zero_class(const std::vector<Int>& coords) const;

  // Class of an ambient lattice vector; requires coord_map.
  std::vector<Int> class_of(const std::vector<Int>& ambient_vec) const;

  // Same isomorphism type (free rank and invariant factors).
  bool same_type(const FinAbGroup& other) const;

  // "0", "Z", "Z/2 x Z/4", "Z^2 x Z/3", ...
  std::string describe() const;
};

// Z^n modulo the column span of a; ambient basis is that of Z^n.
FinAbGroup cokernel(const IntMat& a);

// amb / <columns of sub_gens>, sub_gens in amb generator coordinates.
// Lifts and coord_map are composed into amb's own ambient when available.
FinAbGroup subquotient(const FinAbGroup& amb, const IntMat& sub_gens);

// Subquotient with the intermediate data kept in amb generator coordinates.
struct Quotient {
  FinAbGroup group;    // lifts/coord_map relative to Z^{amb.ngens}
  FinAbGroup ambient;  // shape-only copy
  // Generator coordinates (in amb) of a lift of each quotient generator.
  std::vector<Int> gen_lift_in_ambient(int i) const;
  // Quotient coordinates of an amb element.
  std::vector<Int> class_of(const std::vector<Int>& amb_coords) const;
};
Quotient quotient_by(const FinAbGroup& amb, const IntMat& sub_gens);

// Hom(g, Q/Z) for finite g; canonically isomorphic to g. generator_lifts hold
// the dual-basis character values: column j has value 1/n_j at row j.
FinAbGroup dual_group(const FinAbGroup& g);

// A homomorphism given on generators: column i of matrix is the image of
// source generator i in target generator coordinates.
struct AbelianHom {
  FinAbGroup source;
  FinAbGroup target;
  IntMat matrix;

  // Well-definedness: each source relation must land in the target relations.
  void validate() const;
  std::vector<Int> apply(const std::vector<Int>& source_coords) const;
};

struct ImageCokernel {
  FinAbGroup image;     // abstract; lifts are coefficient vectors over source generators
  FinAbGroup cokernel;  // target / image, lifts composed into target's ambient
};
ImageCokernel hom_image_cokernel(const AbelianHom& h);

// All elements of a finite group as coordinate vectors; throws
// oracle_bound_error past the bound.
std::vector<std::vector<Int>> all_elements(const FinAbGroup& g, const Int& bound);

// Every automorphism of a small finite abelian group, as matrices acting on
// generator coordinates.
std::vector<IntMat> automorphisms(const FinAbGroup& g, const Int& bound);

// A subgroup of a finitely generated abelian group, generated by the columns
// of gens (amb generator coordinates), with its abstract structure and the
// embedding back into amb.
struct Subgroup {
  FinAbGroup ambient;   // shape-only copy of the ambient group
  IntMat gens;          // amb.ngens x s
  FinAbGroup group;     // abstract structure
  IntMat embedding;     // amb.ngens x group.ngens, reduced generator images
  IntMat group_coord_from_span;  // group coords of a coefficient vector over gens

  static Subgroup of(const FinAbGroup& amb, const IntMat& gens);

  // Group coordinates of an amb element, if it lies in the subgroup.
  std::optional<std::vector<Int>> coords_of(const std::vector<Int>& amb_coords) const;

  // Canonical lattice of the subgroup: column HNF of [gens | amb relations].
  IntMat lattice_hnf() const;

  AbelianHom embedding_hom() const;
};

}  // namespace rootobs
