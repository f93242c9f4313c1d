// Expected catalogue rows for the simple types: the adjoint fundamental
// group, the group of descended pairings, and its generator. Generators are
// only pinned up to automorphism of the fundamental group, so the comparison
// tries every automorphism.
#pragma once

#include "rootobs/pairings.hpp"

namespace rootobs::testdata {

struct CatalogueRow {
  SimpleType type;
  std::vector<Int> pi1_factors;
  std::vector<Int> psi_factors;
  RatMat generator;  // expected generator pairing on pi1 generators; 0x0 if trivial
};

inline CatalogueRow catalogue_row(const SimpleType& t) {
  CatalogueRow row;
  row.type = t;
  const int l = t.rank;
  auto cyclic_mult = [&](long long n) {
    row.pi1_factors = {Int(n)};
    row.psi_factors = {Int(n)};
    row.generator = RatMat(1, 1);
    row.generator(0, 0) = Rat(1, n);
  };
  switch (t.family) {
    case 'A':
      cyclic_mult(l + 1);
      break;
    case 'B':
      row.pi1_factors = {2};
      break;
    case 'C':
      row.pi1_factors = {2};
      if (l % 2 == 1) {
        row.psi_factors = {2};
        row.generator = RatMat(1, 1);
        row.generator(0, 0) = Rat(1, 2);
      }
      break;
    case 'D':
      if (l % 2 == 1) {
        cyclic_mult(4);
      } else {
        row.pi1_factors = {2, 2};
        row.psi_factors = {2};
        row.generator = RatMat(2, 2);
        if (l % 4 == 0) {
          row.generator(0, 1) = Rat(1, 2);
          row.generator(1, 0) = Rat(1, 2);
        } else {
          row.generator(0, 0) = Rat(1, 2);
          row.generator(1, 1) = Rat(1, 2);
        }
      }
      break;
    case 'E':
      if (l == 6) cyclic_mult(3);
      else if (l == 7) cyclic_mult(2);
      break;
    case 'F':
    case 'G':
      break;
  }
  return row;
}

// The computed group matches the expected row: same isomorphism types, and
// some generator of the computed group equals the expected generator pairing
// after twisting by an automorphism of pi1.
inline bool psi_matches_row(const PsiGroup& psi, const FinAbGroup& pi1_ad, const CatalogueRow& row) {
  if (pi1_ad.invariant_factors != row.pi1_factors) return false;
  if (psi.structure.invariant_factors != row.psi_factors) return false;
  if (row.psi_factors.empty()) return true;

  // expected generator, twisted every possible way
  std::set<std::vector<Rat>> expected;
  for (const IntMat& sigma : automorphisms(pi1_ad, Int(256)))
    expected.insert(PairingClass{row.generator}.pullback(sigma).packed());

  // generators of the computed (cyclic) pairing group
  Int n = psi.structure.order();
  for (const auto& coords : all_elements(psi.structure, Int(4096))) {
    // order of the element = n / gcd(coords)
    Int g = n;
    for (size_t i = 0; i < coords.size(); ++i)
      g = gcd_int(g, coords[i] * (n / psi.structure.invariant_factors[i]));
    if (gcd_int(g, n) != 1 && n != 1) continue;  // not a generator
    std::vector<Int> c(psi.ambient_generators.size());
    for (int gi = 0; gi < psi.structure.ngens(); ++gi) {
      std::vector<Rat> lift = psi.structure.generator_lifts.column(gi);
      for (size_t f = 0; f < c.size(); ++f) c[f] += coords[gi] * numerator(lift[f]);
    }
    if (expected.count(psi.pairing_of_coefficients(c).packed())) return true;
  }
  return false;
}

}  // namespace rootobs::testdata
