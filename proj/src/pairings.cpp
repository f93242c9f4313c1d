#include "rootobs/pairings.hpp"

#include <algorithm>
#include <map>

namespace rootobs {

namespace {

// Packed indexing of symmetric matrix entries (i <= j), row-major.
std::vector<std::pair<int, int>> sym_pairs(int l) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < l; ++i)
    for (int j = i; j < l; ++j) out.emplace_back(i, j);
  return out;
}

IntMat unpack_sym(const std::vector<Int>& packed, int l) {
  IntMat b(l, l);
  int at = 0;
  for (int i = 0; i < l; ++i)
    for (int j = i; j < l; ++j) {
      b(i, j) = packed[at];
      b(j, i) = packed[at];
      ++at;
    }
  return b;
}

}  // namespace

InvariantFormLattice invariant_even_forms(const RootSystem& rs) {
  InvariantFormLattice out;
  const int l = rs.rank();
  if (l == 0) return out;

  const auto pairs = sym_pairs(l);
  const int m = int(pairs.size());

  // Linear system: S_k^T B S_k = B for every simple reflection, B symmetric.
  IntMat sys(l * m, m);
  for (int k = 0; k < l; ++k) {
    IntMat s = coroot_reflection(rs.cartan, k);
    for (int row = 0; row < m; ++row) {
      auto [i, j] = pairs[row];
      for (int col = 0; col < m; ++col) {
        auto [p, q] = pairs[col];
        Int coeff = s(p, i) * s(q, j);
        if (p != q) coeff += s(q, i) * s(p, j);
        if (p == i && q == j) coeff -= 1;
        sys(k * m + row, col) = coeff;
      }
    }
  }
  IntMat invariant = kernel_basis(sys);  // m x r, packed coordinates

  // Intersect with the even-diagonal sublattice.
  std::vector<int> diag_rows;
  for (int row = 0; row < m; ++row)
    if (pairs[row].first == pairs[row].second) diag_rows.push_back(row);
  IntMat diag_part = invariant.select_rows(diag_rows);
  IntMat even_coeffs = preimage_lattice_mod(diag_part, 2);
  IntMat basis = column_hnf(invariant * even_coeffs);

  if (basis.cols() != int(rs.factors.size()))
    throw integrity_error("invariant form lattice rank " + std::to_string(basis.cols()) +
                          " does not match the factor count");

  auto dual_highest = highest_dual_roots(rs);
  for (int c = 0; c < basis.cols(); ++c) {
    IntMat gram = unpack_sym(basis.column(c), l);
    // the form must live on a single factor, with even diagonal
    int factor = -1;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        if (gram(i, j) == 0) continue;
        int fi = rs.factor_of_index(i);
        if (fi != rs.factor_of_index(j) || (factor >= 0 && fi != factor))
          throw integrity_error("invariant form mixes simple factors");
        factor = fi;
      }
    if (factor < 0) throw integrity_error("zero column in the invariant form basis");
    for (int i = 0; i < l; ++i)
      if (gram(i, i) % 2 != 0) throw integrity_error("invariant form basis has odd diagonal");

    // sign: positive on the factor's highest coroot
    const auto& hc = dual_highest[size_t(factor)];
    Int val = 0;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) val += hc[i] * gram(i, j) * hc[j];
    if (val == 0) throw integrity_error("invariant form vanishes on the highest coroot");
    if (val < 0)
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) gram(i, j) = -gram(i, j);
    out.basis.push_back(gram);
  }
  // one form per factor, factor order
  std::stable_sort(out.basis.begin(), out.basis.end(), [&](const IntMat& a, const IntMat& b) {
    auto first_factor = [&](const IntMat& g) {
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
          if (g(i, j) != 0) return rs.factor_of_index(i);
      return 0;
    };
    return first_factor(a) < first_factor(b);
  });
  return out;
}

std::vector<Rat> PairingClass::packed() const {
  std::vector<Rat> out;
  out.reserve(size_t(values.rows()) * values.cols());
  for (int i = 0; i < values.rows(); ++i)
    for (int j = 0; j < values.cols(); ++j) out.push_back(values(i, j));
  return out;
}

Rat PairingClass::evaluate(const std::vector<Int>& x, const std::vector<Int>& y) const {
  if (int(x.size()) != size() || int(y.size()) != size())
    throw integrity_error("pairing evaluation length mismatch");
  Rat v = 0;
  for (int i = 0; i < size(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < size(); ++j)
      if (y[j] != 0) v += Rat(x[i] * y[j]) * values(i, j);
  }
  return mod1(v);
}

Int PairingClass::element_order() const {
  Int o = 1;
  for (int i = 0; i < values.rows(); ++i)
    for (int j = 0; j < values.cols(); ++j) o = lcm_int(o, denominator(values(i, j)));
  return o;
}

PairingClass PairingClass::pullback(const IntMat& substitution) const {
  const int k = size();
  if (substitution.rows() != k || substitution.cols() != k)
    throw integrity_error("pullback substitution shape mismatch");
  RatMat out(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Rat v = 0;
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          if (substitution(a, i) != 0 && substitution(b, j) != 0)
            v += Rat(substitution(a, i) * substitution(b, j)) * values(a, b);
      out(i, j) = mod1(v);
    }
  return PairingClass{out};
}

PairingClass descend_form(const IntMat& gram, const RatMat& coroot_lifts, const std::vector<Int>& orders) {
  const int k = coroot_lifts.cols();
  RatMat v = coroot_lifts.transpose() * gram.to_rational() * coroot_lifts;
  RatMat values(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      values(i, j) = mod1(v(i, j));
      if (mod1(values(i, j) * orders[i]) != 0 || mod1(values(i, j) * orders[j]) != 0)
        throw integrity_error("pairing value not annihilated by generator orders; the form is not in the invariant lattice");
    }
  return PairingClass{values};
}

RatMat adjoint_coroot_lifts(const RootSystem& rs, const FinAbGroup& pi1_gad) {
  if (rs.rank() == 0) return RatMat(0, 0);
  return rs.cartan.to_rational().inverse() * pi1_gad.generator_lifts;
}

namespace {

// Coefficient vectors whose pairing has the given rows vanishing mod 1,
// linearized modulo D.
IntMat vanishing_lattice(const std::vector<std::vector<Rat>>& value_rows, int s, const Int& d) {
  IntMat m(int(value_rows.size()), s);
  for (int r = 0; r < int(value_rows.size()); ++r)
    for (int f = 0; f < s; ++f) {
      Rat scaled = value_rows[r][f] * d;
      if (!is_integral(scaled)) throw integrity_error("pairing denominator exceeds the linearization modulus");
      m(r, f) = numerator(scaled);
    }
  return preimage_lattice_mod(m, d);
}

}  // namespace

PairingClass PsiGroup::pairing_of_coefficients(const std::vector<Int>& c) const {
  const int k = int(pi1_orders.size());
  RatMat sum(k, k);
  for (size_t f = 0; f < ambient_generators.size(); ++f) {
    if (c[f] == 0) continue;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sum(i, j) += Rat(c[f]) * ambient_generators[f].values(i, j);
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sum(i, j) = mod1(sum(i, j));
  return PairingClass{sum};
}

PairingClass PsiGroup::structure_generator_pairing(int j) const {
  std::vector<Rat> lift = structure.generator_lifts.column(j);
  std::vector<Int> c(lift.size());
  for (size_t i = 0; i < lift.size(); ++i) {
    if (!is_integral(lift[i])) throw integrity_error("structure lift not integral");
    c[i] = numerator(lift[i]);
  }
  return pairing_of_coefficients(c);
}

std::optional<std::vector<Int>> PsiGroup::structure_coords(const std::vector<Int>& c) const {
  auto x = solve(coefficient_span, c);
  if (!x) return std::nullopt;
  return structure.reduce(coeff_coord_map_ * *x);
}

std::set<std::vector<Rat>> PsiGroup::all_pairing_values() const {
  std::set<std::vector<Rat>> out;
  const int s = int(ambient_generators.size());
  for (const auto& coords : all_elements(structure, Int(100000))) {
    std::vector<Int> c(s);
    for (int g = 0; g < structure.ngens(); ++g) {
      std::vector<Rat> lift = structure.generator_lifts.column(g);
      for (int f = 0; f < s; ++f) c[f] += coords[g] * numerator(lift[f]);
    }
    out.insert(pairing_of_coefficients(c).packed());
  }
  return out;
}

PsiGroup psi_group(const RootSystem& rs) {
  PsiGroup p;
  p.forms = invariant_even_forms(rs);
  FinAbGroup pi1 = cokernel(rs.cartan);
  p.coroot_lifts = adjoint_coroot_lifts(rs, pi1);
  p.pi1_orders = pi1.invariant_factors;
  const int s = int(p.forms.basis.size());
  const int k = int(p.pi1_orders.size());

  p.modulus = 1;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) p.modulus = lcm_int(p.modulus, p.pi1_orders[i] * p.pi1_orders[j]);

  for (const IntMat& b : p.forms.basis)
    p.ambient_generators.push_back(descend_form(b, p.coroot_lifts, p.pi1_orders));

  // Coefficient vectors with identically vanishing pairing.
  std::vector<std::vector<Rat>> rows;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      std::vector<Rat> row(s);
      for (int f = 0; f < s; ++f) row[f] = p.ambient_generators[f].values(i, j);
      rows.push_back(row);
    }
  IntMat kernel = vanishing_lattice(rows, s, p.modulus);
  p.coefficient_span = IntMat::identity(s);
  FinAbGroup st = cokernel(kernel);
  p.coeff_coord_map_ = st.coord_map;
  p.structure = std::move(st);
  return p;
}

PsiGroup psi_prime(const PsiGroup& psi, const IsogenyData& iso) {
  const int s = int(psi.ambient_generators.size());
  const int k = int(psi.pi1_orders.size());

  // Vanishing on pi1(Gbar) x pi1(Gprime), one row per generator pair.
  std::vector<std::vector<Rat>> rows;
  for (int a = 0; a < iso.pi1_Gbar.group.ngens(); ++a)
    for (int b = 0; b < iso.pi1_Gprime.group.ngens(); ++b) {
      std::vector<Rat> row(s);
      for (int f = 0; f < s; ++f)
        row[f] = psi.ambient_generators[f].evaluate(iso.pi1_Gbar.embedding.column(a),
                                                    iso.pi1_Gprime.embedding.column(b));
      rows.push_back(row);
    }
  IntMat span = vanishing_lattice(rows, s, psi.modulus);

  // Identically vanishing coefficients, always inside the span.
  std::vector<std::vector<Rat>> zero_rows;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      std::vector<Rat> row(s);
      for (int f = 0; f < s; ++f) row[f] = psi.ambient_generators[f].values(i, j);
      zero_rows.push_back(row);
    }
  IntMat kernel = vanishing_lattice(zero_rows, s, psi.modulus);

  auto rel = solve_columns(span, kernel);
  if (!rel) throw integrity_error("vanishing kernel must lie inside the vanishing span");

  PsiGroup p;
  p.forms = psi.forms;
  p.coroot_lifts = psi.coroot_lifts;
  p.pi1_orders = psi.pi1_orders;
  p.modulus = psi.modulus;
  p.ambient_generators = psi.ambient_generators;
  p.coefficient_span = span;

  FinAbGroup st = cokernel(*rel);  // ambient: span coordinates
  p.coeff_coord_map_ = st.coord_map;
  st.generator_lifts = span.to_rational() * st.generator_lifts;  // back to coefficient vectors
  st.coord_map = IntMat();
  p.structure = std::move(st);
  return p;
}

AbelianHom ev_map(const PsiGroup& psi_prime_group, const IsogenyData& iso, const std::vector<Int>& d_bar) {
  const FinAbGroup& ad = iso.pi1_Gad;
  std::vector<Int> d_ad = ad.reduce(iso.pi1_Gbar.embedding * iso.pi1_Gbar.group.reduce(d_bar));

  Quotient q = quotient_by(ad, iso.pi1_Gprime.embedding);
  FinAbGroup target = dual_group(q.group);

  const int src_gens = psi_prime_group.structure.ngens();
  IntMat matrix(target.ngens(), src_gens);
  for (int j = 0; j < src_gens; ++j) {
    PairingClass b = psi_prime_group.structure_generator_pairing(j);
    // the character must kill pi1(Gprime)
    for (int c = 0; c < iso.pi1_Gprime.embedding.cols(); ++c)
      if (b.evaluate(d_ad, iso.pi1_Gprime.embedding.column(c)) != 0)
        throw integrity_error("evaluation character does not kill the derived-subgroup classes");
    for (int m = 0; m < q.group.ngens(); ++m) {
      Rat v = b.evaluate(d_ad, q.gen_lift_in_ambient(m));
      Rat scaled = v * q.group.invariant_factors[m];
      if (!is_integral(scaled))
        throw integrity_error("evaluation character is not well-defined on the quotient");
      matrix(m, j) = floor_mod(numerator(scaled), q.group.invariant_factors[m]);
    }
  }
  AbelianHom h{psi_prime_group.structure, std::move(target), std::move(matrix)};
  h.validate();
  return h;
}

namespace {

// Isomorphism type of a finite abelian group from the multiset of element
// orders alone. For each prime p dividing the exponent, N_j = #{x : p^j x = 0}
// determines how many invariant factors carry p-exponent >= j.
FinAbGroup structure_from_orders(const std::vector<Int>& orders) {
  Int exponent = 1;
  for (const Int& o : orders) exponent = lcm_int(exponent, o);
  if (exponent == 1) {
    if (orders.size() != 1) throw integrity_error("non-trivial pairing set with exponent 1");
    return FinAbGroup::trivial();
  }

  std::vector<Int> primes;
  Int e = exponent;
  for (Int p = 2; p * p <= e; ++p)
    if (e % p == 0) {
      primes.push_back(p);
      while (e % p == 0) e /= p;
    }
  if (e > 1) primes.push_back(e);

  std::vector<std::vector<long>> prime_exponents;  // descending per prime
  for (const Int& p : primes) {
    std::vector<long> mult;  // mult[j-1] = #factors with p-exponent >= j
    Int prev = 0;
    for (const Int& o : orders)
      if (o == 1) ++prev;  // N_0: only the zero element
    if (prev != 1) throw integrity_error("pairing set must contain exactly one zero element");
    Int pj = 1;
    for (;;) {
      pj *= p;
      Int nj = 0;
      for (const Int& o : orders)
        if (pj % o == 0) ++nj;
      if (nj % prev != 0) throw integrity_error("pairing set is not a subgroup");
      Int ratio = nj / prev;
      long m = 0;
      while (ratio % p == 0) {
        ratio /= p;
        ++m;
      }
      if (ratio != 1) throw integrity_error("pairing set size is not a prime power within a layer");
      if (m == 0) break;
      mult.push_back(m);
      prev = nj;
    }
    std::vector<long> exps;  // e_i = #{j : mult_j >= i}, descending
    if (!mult.empty())
      for (long i = 1; i <= mult[0]; ++i) {
        long cnt = 0;
        for (long mj : mult)
          if (mj >= i) ++cnt;
        exps.push_back(cnt);
      }
    prime_exponents.push_back(exps);
  }

  size_t nfactors = 0;
  for (const auto& exps : prime_exponents) nfactors = std::max(nfactors, exps.size());
  std::vector<Int> factors;  // built largest-first
  for (size_t t = 0; t < nfactors; ++t) {
    Int f = 1;
    for (size_t pi = 0; pi < primes.size(); ++pi)
      if (t < prime_exponents[pi].size())
        for (long j = 0; j < prime_exponents[pi][t]; ++j) f *= primes[pi];
    factors.push_back(f);
  }
  std::reverse(factors.begin(), factors.end());

  Int total = 1;
  for (const Int& f : factors) total *= f;
  if (total != Int(orders.size())) throw integrity_error("reconstructed order disagrees with the set size");
  return FinAbGroup::abstract(0, factors);
}

FinAbGroup structure_from_value_set(const std::set<std::vector<Rat>>& values) {
  std::vector<Int> orders;
  for (const auto& v : values) {
    Int o = 1;
    for (const Rat& x : v) o = lcm_int(o, denominator(x));
    orders.push_back(o);
  }
  return structure_from_orders(orders);
}

}  // namespace

PsiOracleResult psi_bruteforce_oracle(const RootSystem& rs, const IsogenyData& iso) {
  FinAbGroup pi1 = cokernel(rs.cartan);
  if (!pi1.finite() || pi1.order() > 64)
    throw oracle_bound_error("oracle bound: |pi1(adjoint)| must be at most 64");
  if (rs.factors.size() > 3)
    throw oracle_bound_error("oracle bound: at most 3 simple factors");

  InvariantFormLattice forms = invariant_even_forms(rs);
  RatMat lifts = adjoint_coroot_lifts(rs, pi1);
  const std::vector<Int>& orders = pi1.invariant_factors;
  const int k = int(orders.size()), s = int(forms.basis.size());

  Int d = 1;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) d = lcm_int(d, orders[i] * orders[j]);

  std::vector<PairingClass> base;
  for (const IntMat& b : forms.basis) base.push_back(descend_form(b, lifts, orders));

  auto combine = [&](const std::vector<Int>& c) {
    RatMat sum(k, k);
    for (int f = 0; f < s; ++f) {
      if (c[f] == 0) continue;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sum(i, j) += Rat(c[f]) * base[f].values(i, j);
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sum(i, j) = mod1(sum(i, j));
    return PairingClass{sum};
  };

  PsiOracleResult res;
  std::vector<Int> c(s, 0);
  for (;;) {
    PairingClass p = combine(c);
    res.psi_values.insert(p.packed());
    bool vanishes = true;
    for (int a = 0; a < iso.pi1_Gbar.group.ngens() && vanishes; ++a)
      for (int b = 0; b < iso.pi1_Gprime.group.ngens(); ++b)
        if (p.evaluate(iso.pi1_Gbar.embedding.column(a), iso.pi1_Gprime.embedding.column(b)) != 0) {
          vanishes = false;
          break;
        }
    if (vanishes) res.psi_prime_values.insert(p.packed());

    int pos = s - 1;
    while (pos >= 0) {
      c[pos] += 1;
      if (c[pos] < d) break;
      c[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }

  res.psi_structure = structure_from_value_set(res.psi_values);
  res.psi_prime_structure = structure_from_value_set(res.psi_prime_values);
  return res;
}

}  // namespace rootobs
