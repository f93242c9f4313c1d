// Fundamental groups along the isogeny chain of a reductive group, center
// character groups, topological type reduction, and minuscule lifts.
#pragma once

#include "rootobs/abelian.hpp"
#include "rootobs/root_datum.hpp"

namespace rootobs {

struct IsogenyData {
  // Fundamental group of the group itself: lattice / coroot lattice.
  FinAbGroup pi1_G;
  // Fundamental group of the adjoint quotient: coweights / coroots, finite.
  // Lifts and coordinates live in the fundamental-coweight basis.
  FinAbGroup pi1_Gad;
  // Derived subgroup and the quotient by the connected center, both sitting
  // inside pi1_Gad.
  Subgroup pi1_Gprime;
  Subgroup pi1_Gbar;
  AbelianHom gprime_in_gbar;
  // Character group of the center: dual lattice / root lattice.
  FinAbGroup center_chars;
  bool center_is_torus = false;
  Int torsion_exponent = 1;  // exponent of the torsion of center_chars
};

IsogenyData isogeny_data(const RootDatum& datum);

struct TypeClasses {
  std::vector<Int> d_class;  // coordinates in pi1_G
  std::vector<Int> d_bar;    // coordinates in pi1_Gbar.group
};

// Class of a cocharacter-lattice vector in pi1_G, and of its projection to
// the coroot span in pi1_Gbar.
TypeClasses reduce_type(const RootDatum& datum, const IsogenyData& iso, const std::vector<Int>& d_lift);

// The unique nonzero coweight delta with the given nonzero class in pi1_Gad
// and <alpha, delta> in {0, 1} for every positive root. Requires an
// adjoint-shaped datum; the result is in fundamental-coweight coordinates.
std::vector<Int> minuscule_lift(const RootDatum& datum, const IsogenyData& iso,
                                const std::vector<Int>& d_ad_coords);

}  // namespace rootobs
