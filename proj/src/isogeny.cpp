#include "rootobs/isogeny.hpp"

namespace rootobs {

IsogenyData isogeny_data(const RootDatum& datum) {
  datum.validate();
  const int n = datum.lattice_rank, l = datum.rs.rank();
  IsogenyData iso;

  iso.pi1_G = cokernel(datum.simple_coroots);
  iso.pi1_Gad = cokernel(datum.rs.cartan);

  // pi1(G') = (saturation of the coroot span in the lattice) / coroots.
  IntMat sat = saturation(datum.simple_coroots, n);
  IntMat gprime_gens(iso.pi1_Gad.ngens(), sat.cols());
  for (int j = 0; j < sat.cols(); ++j) {
    // Elements of the coroot span keep their coweight coordinates under the
    // projection along the radical: roots evaluate them directly.
    std::vector<Int> omega = datum.simple_roots * sat.column(j);
    gprime_gens.set_column(j, iso.pi1_Gad.class_of(omega));
  }
  iso.pi1_Gprime = Subgroup::of(iso.pi1_Gad, gprime_gens);

  // pi1(Gbar) = p(lattice) / coroots, p the projection along the radical.
  IntMat gbar_gens(iso.pi1_Gad.ngens(), n);
  for (int j = 0; j < n; ++j) {
    std::vector<Int> basis_vec(n);
    basis_vec[j] = 1;
    gbar_gens.set_column(j, iso.pi1_Gad.class_of(datum.simple_roots * basis_vec));
  }
  iso.pi1_Gbar = Subgroup::of(iso.pi1_Gad, gbar_gens);

  // Embed pi1(G') into pi1(Gbar) generator by generator.
  IntMat emb(iso.pi1_Gbar.group.ngens(), iso.pi1_Gprime.group.ngens());
  for (int j = 0; j < iso.pi1_Gprime.group.ngens(); ++j) {
    auto c = iso.pi1_Gbar.coords_of(iso.pi1_Gprime.embedding.column(j));
    if (!c) throw integrity_error("derived-subgroup classes must lie in the connected-center quotient");
    emb.set_column(j, *c);
  }
  iso.gprime_in_gbar = AbelianHom{iso.pi1_Gprime.group, iso.pi1_Gbar.group, emb};
  iso.gprime_in_gbar.validate();

  iso.center_chars = cokernel(datum.simple_roots.transpose());
  iso.center_is_torus = iso.center_chars.invariant_factors.empty();
  iso.torsion_exponent = iso.center_chars.invariant_factors.empty()
                             ? Int(1)
                             : iso.center_chars.invariant_factors.back();
  (void)l;
  return iso;
}

TypeClasses reduce_type(const RootDatum& datum, const IsogenyData& iso, const std::vector<Int>& d_lift) {
  if (int(d_lift.size()) != datum.lattice_rank)
    throw input_error("type lift needs " + std::to_string(datum.lattice_rank) + " coordinates");
  TypeClasses t;
  t.d_class = iso.pi1_G.class_of(d_lift);
  std::vector<Int> omega = datum.simple_roots * d_lift;
  auto bar = iso.pi1_Gbar.coords_of(iso.pi1_Gad.class_of(omega));
  if (!bar) throw integrity_error("projected type must lie in the connected-center quotient subgroup");
  t.d_bar = *bar;
  return t;
}

std::vector<Int> minuscule_lift(const RootDatum& datum, const IsogenyData& iso,
                                const std::vector<Int>& d_ad_coords) {
  if (!datum.is_adjoint_shaped())
    throw input_error("minuscule lifts are computed for adjoint data (AD presets and their products)");
  if (iso.pi1_Gad.is_zero_class(d_ad_coords))
    throw input_error("minuscule lift requires a nonzero class");

  const RootSystem& rs = datum.rs;
  const int l = rs.rank();
  // Some integral representative of the class, in coweight coordinates.
  IntMat lifts = iso.pi1_Gad.generator_lifts.to_integer();
  std::vector<Int> rep = lifts * iso.pi1_Gad.reduce(d_ad_coords);

  std::vector<Int> delta(l);
  for (size_t f = 0; f < rs.factors.size(); ++f) {
    const int off = rs.factor_offset[f], lf = rs.factor_offset[f + 1] - off;
    IntMat cf = cartan_matrix(rs.factors[f]);
    FinAbGroup pi1_f = cokernel(cf);
    std::vector<Int> rep_f(lf);
    for (int i = 0; i < lf; ++i) rep_f[i] = rep[off + i];
    std::vector<Int> want = pi1_f.class_of(rep_f);

    // Candidates: zero, and the fundamental coweights pairing to 1 with the
    // highest root of the factor.
    std::vector<std::vector<Int>> candidates;
    candidates.emplace_back(lf);
    for (int i = 0; i < lf; ++i)
      if (rs.highest_roots[f][off + i] == 1) {
        std::vector<Int> cand(lf);
        cand[i] = 1;
        candidates.push_back(cand);
      }
    int hits = 0;
    std::vector<Int> chosen;
    for (const auto& cand : candidates)
      if (pi1_f.class_of(cand) == want) {
        ++hits;
        chosen = cand;
      }
    if (hits != 1) throw integrity_error("minuscule candidate count is " + std::to_string(hits) +
                                         " for factor " + rs.factors[f].str());
    for (int i = 0; i < lf; ++i) delta[off + i] = chosen[i];
  }

  // The defining property, rechecked on the way out.
  bool nonzero = false;
  for (const Int& x : delta) nonzero = nonzero || x != 0;
  if (!nonzero) throw integrity_error("minuscule lift came out zero for a nonzero class");
  for (const auto& alpha : rs.positive_roots) {
    Int v = RootSystem::pair_root_coweight(alpha, delta);
    if (v != 0 && v != 1) throw integrity_error("minuscule pairing outside {0,1}");
  }
  return delta;
}

}  // namespace rootobs
