// Even Weyl-invariant symmetric bilinear forms on the coroot lattice, their
// descent to Q/Z-valued pairings on the adjoint fundamental group, the groups
// these pairings form, and the evaluation map at a topological type.
#pragma once

#include "rootobs/isogeny.hpp"

#include <set>

namespace rootobs {

// Z-basis of the even W-invariant symmetric forms, one Gram matrix per simple
// factor, in simple-coroot coordinates. Each basis form is normalized to be
// positive on the highest coroot of its factor.
struct InvariantFormLattice {
  std::vector<IntMat> basis;
};

InvariantFormLattice invariant_even_forms(const RootSystem& rs);

// A symmetric Q/Z-valued pairing on the generators of a finite abelian group,
// entries canonicalized into [0, 1).
struct PairingClass {
  RatMat values;

  int size() const { return values.rows(); }
  bool operator==(const PairingClass& o) const { return values == o.values; }
  // Row-major value list, for use as a set key.
  std::vector<Rat> packed() const;
  // b(x, y) for elements given in generator coordinates.
  Rat evaluate(const std::vector<Int>& x, const std::vector<Int>& y) const;
  // Order as an element of the pairing group: lcm of value denominators.
  Int element_order() const;
  // The pairing pulled back along a generator-coordinate substitution.
  PairingClass pullback(const IntMat& substitution) const;
};

// Descent of an even invariant form: values are x_i^T b x_j mod 1 on the
// rational coroot-coordinate lifts x_i of the generators. Raises
// integrity_error if any value is not annihilated by the generator orders.
PairingClass descend_form(const IntMat& gram, const RatMat& coroot_lifts, const std::vector<Int>& orders);

// Rational coroot-coordinate lifts of the generators of pi1(Gad).
RatMat adjoint_coroot_lifts(const RootSystem& rs, const FinAbGroup& pi1_gad);

// The group of pairings reachable from the invariant-form lattice, together
// with enough data to evaluate arbitrary coefficient combinations.
struct PsiGroup {
  InvariantFormLattice forms;          // shared basis of candidate forms
  RatMat coroot_lifts;                 // lifts of pi1(Gad) generators
  std::vector<Int> pi1_orders;         // generator orders of pi1(Gad)
  Int modulus = 1;                     // lcm of pairwise order products
  IntMat coefficient_span;             // s x s: which coefficient vectors belong
  FinAbGroup structure;                // invariant factors; lifts are coefficient vectors
  std::vector<PairingClass> ambient_generators;  // descents of the form basis

  PairingClass pairing_of_coefficients(const std::vector<Int>& c) const;
  PairingClass structure_generator_pairing(int j) const;
  // Structure coordinates of a coefficient vector, if it lies in the span.
  std::optional<std::vector<Int>> structure_coords(const std::vector<Int>& c) const;
  // Value sets of every element of the group.
  std::set<std::vector<Rat>> all_pairing_values() const;

private:
  friend PsiGroup psi_group(const RootSystem& rs);
  friend PsiGroup psi_prime(const PsiGroup& psi, const IsogenyData& iso);
  IntMat coeff_coord_map_;  // structure coords of a coefficient_span solution
};

// Pairings on pi1(Gad) descending from the even invariant forms.
PsiGroup psi_group(const RootSystem& rs);

// The subgroup of pairings vanishing on pi1(Gbar) x pi1(Gprime).
PsiGroup psi_prime(const PsiGroup& psi, const IsogenyData& iso);

// The evaluation b -> b(d_bar, .) as a homomorphism into the character group
// of pi1(Gad)/pi1(Gprime). d_bar is given in pi1_Gbar coordinates.
// Raises integrity_error if some character fails to kill pi1(Gprime).
AbelianHom ev_map(const PsiGroup& psi_prime_group, const IsogenyData& iso, const std::vector<Int>& d_bar);

// Independent enumeration oracle, desk scale only (|pi1(Gad)| <= 64, at most
// 3 simple factors): enumerates all coefficient vectors modulo the modulus,
// collects the distinct pairings, and reconstructs both groups from element
// orders alone.
struct PsiOracleResult {
  FinAbGroup psi_structure;
  FinAbGroup psi_prime_structure;
  std::set<std::vector<Rat>> psi_values;
  std::set<std::vector<Rat>> psi_prime_values;
};
PsiOracleResult psi_bruteforce_oracle(const RootSystem& rs, const IsogenyData& iso);

}  // namespace rootobs
