// Obstruction orders against Poincare families: the generic order over small
// open subsets, the global order over the full regularly-stable locus, and
// the assembled report with hypothesis flags.
#pragma once

#include "rootobs/pairings.hpp"

namespace rootobs {

struct Hypotheses {
  long genus = 0;
  bool char_any = false;
  Int characteristic = 0;  // 0 or a prime; ignored when char_any

  // Accepts "0", "any", or a prime number.
  static Hypotheses parse(long genus, const std::string& char_spec);
};

enum class HypothesisFlag { valid, valid_char0_relaxed, indeterminate };
const char* flag_name(HypothesisFlag f);

struct GroupShape {
  long free_rank = 0;
  std::vector<Int> invariant_factors;

  static GroupShape of(const FinAbGroup& g) { return GroupShape{g.free_rank, g.invariant_factors}; }
  bool operator==(const GroupShape& o) const = default;
  std::string describe() const;
};

struct ObstructionReport {
  std::string group_name;
  GroupShape pi1_G, pi1_Gbar;
  std::vector<Int> d_class;  // coordinates in pi1_G
  std::vector<Int> d_bar;    // coordinates in pi1_Gbar
  GroupShape psi, psi_prime, ev_image, ev_cokernel;
  Int generic_order = 1;
  Int center_torsion_exponent = 1;
  Int global_order = 1;
  bool center_is_torus = true;
  bool exists_generic = true;
  bool exists_global = true;
  HypothesisFlag generic_hypothesis = HypothesisFlag::indeterminate;
  HypothesisFlag global_hypothesis = HypothesisFlag::indeterminate;
  long genus = 0;
  std::string characteristic;  // "0", "any", or the prime

  bool operator==(const ObstructionReport& o) const = default;
};

// All intermediate objects of one obstruction computation, for callers that
// want more than the final orders.
struct ObstructionComputation {
  IsogenyData iso;
  PsiGroup psi;
  PsiGroup psi_prime;
  TypeClasses type;
  AbelianHom ev;
  ImageCokernel ev_image_cokernel;
  Int generic_order = 1;
  Int global_order = 1;
};
ObstructionComputation compute_obstruction(const RootDatum& datum, const std::vector<Int>& d_lift);

// Exponent of coker(ev) at the type class of d_lift.
Int generic_order(const RootDatum& datum, const std::vector<Int>& d_lift);

// lcm of the generic order and the torsion exponent of the center characters.
Int global_order(const RootDatum& datum, const std::vector<Int>& d_lift);

ObstructionReport report(const RootDatum& datum, const std::vector<Int>& d_lift, const Hypotheses& hyp);

std::string report_to_json(const ObstructionReport& r);
ObstructionReport report_from_json(const std::string& text);
std::string report_to_text(const ObstructionReport& r);

}  // namespace rootobs
