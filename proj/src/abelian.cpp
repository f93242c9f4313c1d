#include "rootobs/abelian.hpp"

#include <set>
#include <sstream>

namespace rootobs {

FinAbGroup FinAbGroup::trivial() { return FinAbGroup{}; }

FinAbGroup FinAbGroup::abstract(long free_rank, std::vector<Int> factors) {
  FinAbGroup g;
  g.free_rank = free_rank;
  g.invariant_factors = std::move(factors);
  for (size_t i = 0; i < g.invariant_factors.size(); ++i) {
    if (g.invariant_factors[i] < 2) throw input_error("invariant factors must be >= 2");
    if (i > 0 && g.invariant_factors[i] % g.invariant_factors[i - 1] != 0)
      throw input_error("invariant factors must form a divisibility chain");
  }
  return g;
}

Int FinAbGroup::order() const {
  if (free_rank > 0) throw input_error("order of an infinite group");
  Int o = 1;
  for (const Int& f : invariant_factors) o *= f;
  return o;
}

Int FinAbGroup::exponent() const {
  if (free_rank > 0) throw input_error("exponent of an infinite group");
  return invariant_factors.empty() ? Int(1) : invariant_factors.back();
}

Int FinAbGroup::generator_order(int i) const {
  if (i < free_rank) return 0;
  return invariant_factors[size_t(i) - free_rank];
}

IntMat FinAbGroup::relations() const {
  IntMat r(ngens(), int(invariant_factors.size()));
  for (int j = 0; j < int(invariant_factors.size()); ++j) r(int(free_rank) + j, j) = invariant_factors[j];
  return r;
}

std::vector<Int> FinAbGroup::reduce(std::vector<Int> coords) const {
  if (int(coords.size()) != ngens()) throw integrity_error("coordinate length mismatch");
  for (size_t j = 0; j < invariant_factors.size(); ++j) {
    Int& c = coords[free_rank + j];
    c = floor_mod(c, invariant_factors[j]);
  }
  return coords;
}

std::vector<Int> FinAbGroup::add(const std::vector<Int>& a, const std::vector<Int>& b) const {
  std::vector<Int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return reduce(std::move(c));
}

std::vector<Int> FinAbGroup::scale(const Int& k, const std::vector<Int>& a) const {
  std::vector<Int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = k * a[i];
  return reduce(std::move(c));
}

bool FinAbGroup::is_zero_class(const std::vector<Int>& coords) const {
  for (const Int& c : reduce(coords))
    if (c != 0) return false;
  return true;
}

std::vector<Int> FinAbGroup::class_of(const std::vector<Int>& ambient_vec) const {
  if (coord_map.cols() != int(ambient_vec.size()) || coord_map.rows() != ngens())
    throw integrity_error("group has no coordinate map for this ambient");
  return reduce(coord_map * ambient_vec);
}

bool FinAbGroup::same_type(const FinAbGroup& other) const {
  return free_rank == other.free_rank && invariant_factors == other.invariant_factors;
}

std::string FinAbGroup::describe() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) { os << "Z"; first = false; }
  else if (free_rank > 1) { os << "Z^" << free_rank; first = false; }
  for (const Int& f : invariant_factors) {
    os << (first ? "" : " x ") << "Z/" << f;
    first = false;
  }
  return os.str();
}

FinAbGroup cokernel(const IntMat& a) {
  const int n = a.rows();
  SmithDecomposition s = smith_normal_form(a);
  IntMat uinv = unimodular_inverse(s.u);
  const int mn = std::min(a.rows(), a.cols());

  std::vector<int> free_pos, torsion_pos;
  for (int i = 0; i < n; ++i) {
    Int di = (i < mn) ? s.d(i, i) : Int(0);
    if (di == 0) free_pos.push_back(i);
    else if (di >= 2) torsion_pos.push_back(i);
  }

  FinAbGroup g;
  g.free_rank = long(free_pos.size());
  for (int i : torsion_pos) g.invariant_factors.push_back(s.d(i, i));

  std::vector<int> gen_pos = free_pos;
  gen_pos.insert(gen_pos.end(), torsion_pos.begin(), torsion_pos.end());
  g.generator_lifts = uinv.select_columns(gen_pos).to_rational();
  g.coord_map = s.u.select_rows(gen_pos);
  return g;
}

Quotient quotient_by(const FinAbGroup& amb, const IntMat& sub_gens) {
  if (sub_gens.rows() != amb.ngens()) throw input_error("subgroup generators must use ambient generator coordinates");
  FinAbGroup q = cokernel(amb.relations().hcat(sub_gens));
  return Quotient{std::move(q), amb};
}

std::vector<Int> Quotient::gen_lift_in_ambient(int i) const {
  std::vector<Rat> c = group.generator_lifts.column(i);
  std::vector<Int> out(c.size());
  for (size_t k = 0; k < c.size(); ++k) {
    if (!is_integral(c[k])) throw integrity_error("quotient generator lift not integral");
    out[k] = numerator(c[k]);
  }
  return ambient.reduce(std::move(out));
}

std::vector<Int> Quotient::class_of(const std::vector<Int>& amb_coords) const {
  return group.reduce(group.coord_map * amb_coords);
}

FinAbGroup subquotient(const FinAbGroup& amb, const IntMat& sub_gens) {
  Quotient q = quotient_by(amb, sub_gens);
  FinAbGroup g = q.group;
  if (amb.generator_lifts.rows() > 0) g.generator_lifts = amb.generator_lifts * g.generator_lifts;
  if (amb.coord_map.rows() > 0) g.coord_map = g.coord_map * amb.coord_map;
  else g.coord_map = IntMat();
  return g;
}

FinAbGroup dual_group(const FinAbGroup& g) {
  if (!g.finite()) throw input_error("dual is only taken of finite groups");
  const int k = int(g.invariant_factors.size());
  FinAbGroup d;
  d.invariant_factors = g.invariant_factors;
  d.generator_lifts = RatMat(k, k);
  for (int j = 0; j < k; ++j) d.generator_lifts(j, j) = Rat(1, g.invariant_factors[j]);
  return d;
}

void AbelianHom::validate() const {
  if (matrix.rows() != target.ngens() || matrix.cols() != source.ngens())
    throw integrity_error("hom matrix shape mismatch");
  // n_i * (image of generator i) must vanish in the target.
  for (int i = 0; i < source.ngens(); ++i) {
    Int n = source.generator_order(i);
    if (n == 0) continue;
    std::vector<Int> img = matrix.column(i);
    for (Int& c : img) c *= n;
    if (!target.is_zero_class(img)) throw integrity_error("hom is not well-defined on generator orders");
  }
}

std::vector<Int> AbelianHom::apply(const std::vector<Int>& source_coords) const {
  return target.reduce(matrix * source_coords);
}

ImageCokernel hom_image_cokernel(const AbelianHom& h) {
  if (!h.source.finite() || !h.target.finite())
    throw input_error("image/cokernel computed for finite source and target only");
  h.validate();

  ImageCokernel out;
  out.cokernel = subquotient(h.target, h.matrix);

  // Image = Z^s / {x : M x lies in the target relation lattice}.
  const int s = h.source.ngens();
  IntMat r = h.target.relations();
  IntMat block = h.matrix.hcat(r);
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) block(i, s + j) = -r(i, j);
  IntMat k = kernel_basis(block);
  std::vector<int> top(s);
  for (int i = 0; i < s; ++i) top[i] = i;
  out.image = cokernel(column_hnf(k.select_rows(top)));
  return out;
}

std::vector<std::vector<Int>> all_elements(const FinAbGroup& g, const Int& bound) {
  if (!g.finite()) throw input_error("cannot enumerate an infinite group");
  if (g.order() > bound)
    throw oracle_bound_error("group of order " + g.order().str() + " exceeds the enumeration bound " + bound.str());
  std::vector<std::vector<Int>> out;
  std::vector<Int> coords(g.ngens());
  for (;;) {
    out.push_back(coords);
    int pos = g.ngens() - 1;
    while (pos >= 0) {
      coords[pos] += 1;
      if (coords[pos] < g.generator_order(pos)) break;
      coords[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

std::vector<IntMat> automorphisms(const FinAbGroup& g, const Int& bound) {
  if (!g.finite()) throw input_error("automorphisms computed for finite groups only");
  const int k = g.ngens();
  auto elements = all_elements(g, bound);
  Int tuples = 1;
  for (int j = 0; j < k; ++j) tuples *= g.order();
  if (tuples > bound * bound) throw oracle_bound_error("automorphism enumeration too large");

  std::vector<IntMat> out;
  std::vector<int> pick(k, 0);
  const int ne = int(elements.size());
  for (;;) {
    IntMat m(k, k);
    for (int j = 0; j < k; ++j) m.set_column(j, elements[pick[j]]);
    // well-defined and injective => automorphism
    bool ok = true;
    for (int j = 0; j < k && ok; ++j)
      if (!g.is_zero_class(g.scale(g.generator_order(j), m.column(j)))) ok = false;
    if (ok) {
      std::set<std::vector<Int>> image;
      for (const auto& e : elements) image.insert(g.reduce(m * e));
      if (Int(image.size()) == g.order()) out.push_back(m);
    }
    int pos = k - 1;
    while (pos >= 0) {
      if (++pick[pos] < ne) break;
      pick[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

Subgroup Subgroup::of(const FinAbGroup& amb, const IntMat& gens) {
  if (gens.rows() != amb.ngens()) throw input_error("subgroup generators must use ambient generator coordinates");
  Subgroup sg;
  sg.gens = gens;

  // Relations among the generating set: coefficient vectors x with gens*x = 0 in amb.
  const int s = gens.cols();
  IntMat r = amb.relations();
  IntMat block = gens.hcat(r);
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) block(i, s + j) = -r(i, j);
  IntMat k = kernel_basis(block);
  std::vector<int> top(s);
  for (int i = 0; i < s; ++i) top[i] = i;
  IntMat rel = column_hnf(k.select_rows(top));

  FinAbGroup h = cokernel(rel);
  sg.group_coord_from_span = h.coord_map;

  IntMat lifts = h.generator_lifts.to_integer();  // coefficient vectors over gens
  IntMat emb(amb.ngens(), h.ngens());
  for (int j = 0; j < h.ngens(); ++j) {
    std::vector<Int> img = amb.reduce(gens * lifts.column(j));
    emb.set_column(j, img);
  }
  h.generator_lifts = RatMat();
  h.coord_map = IntMat();
  sg.group = std::move(h);
  sg.embedding = std::move(emb);
  sg.ambient = amb;
  sg.ambient.generator_lifts = RatMat();
  sg.ambient.coord_map = IntMat();
  return sg;
}

std::optional<std::vector<Int>> Subgroup::coords_of(const std::vector<Int>& amb_coords) const {
  // Solve gens*x + relations*y = elt over Z.
  IntMat sys = gens.hcat(ambient.relations());
  auto sol = solve(sys, amb_coords);
  if (!sol) return std::nullopt;
  std::vector<Int> x(sol->begin(), sol->begin() + gens.cols());
  return group.reduce(group_coord_from_span * x);
}

IntMat Subgroup::lattice_hnf() const {
  return column_hnf(gens.hcat(ambient.relations()));
}

AbelianHom Subgroup::embedding_hom() const {
  return AbelianHom{group, ambient, embedding};
}

}  // namespace rootobs
