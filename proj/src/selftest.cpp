#include "rootobs/selftest.hpp"

#include "rootobs/obstruction.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace rootobs {

namespace {

struct Harness {
  SelftestResult result;
  std::ostringstream log;

  // Runs one named property; prop returns an empty string on success and a
  // reproducer description on failure.
  void property(const std::string& name, const std::function<std::string()>& prop) {
    try {
      std::string reproducer = prop();
      if (reproducer.empty()) {
        ++result.passed;
        log << "ok    " << name << "\n";
      } else {
        ++result.failed;
        log << "FAIL  " << name << "  reproduce with: " << reproducer << "\n";
      }
    } catch (const oracle_bound_error& e) {
      ++result.skipped;
      log << "skip  " << name << "  (" << e.what() << ")\n";
    } catch (const std::exception& e) {
      ++result.failed;
      log << "FAIL  " << name << "  exception: " << e.what() << "\n";
    }
  }
};

IntMat random_matrix(std::mt19937_64& rng, int max_dim, int max_abs) {
  std::uniform_int_distribution<int> dim(1, max_dim), entry(-max_abs, max_abs);
  IntMat a(dim(rng), dim(rng));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
  return a;
}

std::string check_snf(const IntMat& a) {
  SmithDecomposition s = smith_normal_form(a);
  if (!(s.u * a * s.v == s.d)) return "smith_normal_form " + a.str() + " (u*a*v != d)";
  Int du = s.u.determinant(), dv = s.v.determinant();
  if (du != 1 && du != -1) return "smith_normal_form " + a.str() + " (u not unimodular)";
  if (dv != 1 && dv != -1) return "smith_normal_form " + a.str() + " (v not unimodular)";
  auto diag = s.diagonal();
  for (size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < 0) return "smith_normal_form " + a.str() + " (negative diagonal)";
    if (i > 0 && diag[i - 1] != 0 && diag[i] % diag[i - 1] != 0)
      return "smith_normal_form " + a.str() + " (divisibility chain broken)";
    if (i > 0 && diag[i - 1] == 0 && diag[i] != 0)
      return "smith_normal_form " + a.str() + " (zero before nonzero)";
  }
  return "";
}

}  // namespace

SelftestResult run_selftest(const SelftestOptions& opts) {
  Harness h;
  if (opts.inject_snf_fault) set_snf_fault_injection(true);

  h.property("smith contract on 500 random matrices (entries in [-9,9], size <= 6)", [] {
    std::mt19937_64 rng(20240611);
    for (int t = 0; t < 500; ++t) {
      IntMat a = random_matrix(rng, 6, 9);
      std::string r = check_snf(a);
      if (!r.empty()) return r;
    }
    return std::string();
  });

  // Deliberate corruption must not leak past the normal-form properties.
  set_snf_fault_injection(false);

  h.property("cokernel order equals |det| on nonsingular squares", [] {
    std::mt19937_64 rng(99102);
    int done = 0;
    while (done < 100) {
      IntMat a = random_matrix(rng, 5, 7);
      if (a.rows() != a.cols()) continue;
      Int det = a.determinant();
      if (det == 0) continue;
      if (cokernel(a).order() != abs(det)) return "cokernel " + a.str();
      ++done;
    }
    return std::string();
  });

  h.property("saturation idempotence and containment", [] {
    std::mt19937_64 rng(31337);
    for (int t = 0; t < 100; ++t) {
      IntMat s = random_matrix(rng, 5, 5);
      IntMat sat = saturation(s, s.rows());
      if (!(saturation(sat, s.rows()) == sat)) return "saturation " + s.str();
      for (int j = 0; j < s.cols(); ++j)
        if (!in_column_span(sat, s.column(j))) return "saturation-span " + s.str();
    }
    return std::string();
  });

  h.property("dual group involution", [] {
    for (auto factors : std::vector<std::vector<Int>>{{2}, {2, 4}, {3, 9}, {2, 2, 6}}) {
      FinAbGroup g = FinAbGroup::abstract(0, factors);
      if (!dual_group(dual_group(g)).same_type(g)) return g.describe();
    }
    return std::string();
  });

  h.property("positive-root counts match the closed forms (ranks <= 6)", [] {
    for (const SimpleType& t : all_simple_types(6)) {
      RootSystem rs = build_root_system({t});
      if (long(rs.positive_roots.size()) != expected_positive_roots(t)) return t.str();
    }
    return std::string();
  });

  h.property("|pi1(adjoint)| equals |det Cartan| (ranks <= 6)", [] {
    for (const SimpleType& t : all_simple_types(6)) {
      RootSystem rs = build_root_system({t});
      if (cokernel(rs.cartan).order() != abs(rs.cartan.determinant())) return t.str();
    }
    return std::string();
  });

  h.property("minuscule lift uniqueness (adjoint, ranks <= 6)", [] {
    for (const SimpleType& t : all_simple_types(6)) {
      RootDatum d = preset_ad({t});
      IsogenyData iso = isogeny_data(d);
      if (iso.pi1_Gad.is_trivial()) continue;
      for (const auto& coords : all_elements(iso.pi1_Gad, Int(64))) {
        if (iso.pi1_Gad.is_zero_class(coords)) continue;
        std::vector<Int> delta = minuscule_lift(d, iso, coords);
        for (const auto& alpha : d.rs.positive_roots) {
          Int v = RootSystem::pair_root_coweight(alpha, delta);
          if (v != 0 && v != 1) return t.str();
        }
      }
    }
    return std::string();
  });

  h.property("descent is well-defined modulo coroots (ranks <= 3, 50 trials each)", [] {
    std::mt19937_64 rng(5577);
    for (const SimpleType& t : all_simple_types(3)) {
      RootSystem rs = build_root_system({t});
      const int l = rs.rank();
      auto forms = invariant_even_forms(rs);
      RatMat cinv = rs.cartan.to_rational().inverse();
      std::uniform_int_distribution<int> coeff(-5, 5);
      for (int trial = 0; trial < 50; ++trial) {
        const IntMat& b = forms.basis[0];
        std::vector<Rat> omega(l), q(l);
        for (int i = 0; i < l; ++i) {
          omega[i] = coeff(rng);
          q[i] = coeff(rng);
        }
        std::vector<Rat> x = cinv * omega;
        auto val = [&](const std::vector<Rat>& u, const std::vector<Rat>& w) {
          Rat s = 0;
          for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j)
              if (b(i, j) != 0) s += u[i] * Rat(b(i, j)) * w[j];
          return mod1(s);
        };
        std::vector<Rat> xq(l);
        for (int i = 0; i < l; ++i) xq[i] = x[i] + q[i];
        if (val(x, x) != val(xq, x)) return t.str();
      }
    }
    return std::string();
  });

  h.property("root formula b(l, a^vee) = a(l) b(a^vee, a^vee)/2 (ranks <= 6)", [] {
    for (const SimpleType& t : all_simple_types(6)) {
      RootSystem rs = build_root_system({t});
      const IntMat b = invariant_even_forms(rs).basis[0];
      for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j)
          if (Rat(b(j, i)) != Rat(rs.cartan(i, j)) * Rat(b(i, i)) / 2) return t.str();
    }
    return std::string();
  });

  h.property("pairing-group enumeration oracle (ranks <= 3)", [] {
    for (const SimpleType& t : all_simple_types(3)) {
      RootDatum d = preset_sc({t});
      IsogenyData iso = isogeny_data(d);
      PsiGroup psi = psi_group(d.rs);
      PsiGroup psip = psi_prime(psi, iso);
      PsiOracleResult o = psi_bruteforce_oracle(d.rs, iso);
      if (psi.structure.invariant_factors != o.psi_structure.invariant_factors) return t.str();
      if (psip.structure.invariant_factors != o.psi_prime_structure.invariant_factors) return t.str();
      if (psi.all_pairing_values() != o.psi_values) return t.str();
    }
    return std::string();
  });

  h.property("oracle refuses inputs above the desk-scale bound", [] {
    RootDatum d = preset_sc({make_simple_type('A', 8), make_simple_type('A', 8)});
    IsogenyData iso = isogeny_data(d);
    try {
      psi_bruteforce_oracle(d.rs, iso);
    } catch (const oracle_bound_error&) {
      return std::string();
    }
    return std::string("oracle accepted an oversized input");
  });

  h.property("generic order divides global order on sample groups", [] {
    for (std::string expr : {"GL(4)", "SL(5)", "SC(D4)", "INT(A3; 2)", "PGL(3) x SL(2)"}) {
      RootDatum d = parse_group_expression(expr);
      std::vector<Int> lift(d.lattice_rank);
      lift[0] = 1;
      ObstructionComputation c = compute_obstruction(d, lift);
      if (c.global_order % c.generic_order != 0) return expr;
    }
    return std::string();
  });

  set_snf_fault_injection(false);
  h.result.log = h.log.str();
  std::ostringstream tail;
  tail << h.result.passed << " passed, " << h.result.failed << " failed, "
       << h.result.skipped << " skipped\n";
  h.result.log += tail.str();
  return h.result;
}

}  // namespace rootobs
