#include "rootobs/obstruction.hpp"

#include <json.hpp>

#include <sstream>

namespace rootobs {

namespace {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace

Hypotheses Hypotheses::parse(long genus, const std::string& char_spec) {
  Hypotheses h;
  if (genus < 0) throw input_error("genus must be >= 0");
  h.genus = genus;
  if (char_spec == "any" || char_spec == "ANY" || char_spec == "Any") {
    h.char_any = true;
  } else {
    try {
      h.characteristic = Int(char_spec);
    } catch (...) {
      throw input_error("characteristic must be 0, a prime, or 'any'");
    }
    if (h.characteristic != 0 && !is_prime(h.characteristic))
      throw input_error("characteristic " + h.characteristic.str() + " is neither 0 nor prime");
  }
  return h;
}

const char* flag_name(HypothesisFlag f) {
  switch (f) {
    case HypothesisFlag::valid: return "valid";
    case HypothesisFlag::valid_char0_relaxed: return "valid-char0-relaxed";
    case HypothesisFlag::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

std::string GroupShape::describe() const {
  FinAbGroup g;
  g.free_rank = free_rank;
  g.invariant_factors = invariant_factors;
  return g.describe();
}

ObstructionComputation compute_obstruction(const RootDatum& datum, const std::vector<Int>& d_lift) {
  ObstructionComputation c;
  c.iso = isogeny_data(datum);
  c.psi = psi_group(datum.rs);
  c.psi_prime = psi_prime(c.psi, c.iso);
  c.type = reduce_type(datum, c.iso, d_lift);
  c.ev = ev_map(c.psi_prime, c.iso, c.type.d_bar);
  c.ev_image_cokernel = hom_image_cokernel(c.ev);
  c.generic_order = c.ev_image_cokernel.cokernel.exponent();
  c.global_order = lcm_int(c.generic_order, c.iso.torsion_exponent);
  return c;
}

Int generic_order(const RootDatum& datum, const std::vector<Int>& d_lift) {
  return compute_obstruction(datum, d_lift).generic_order;
}

Int global_order(const RootDatum& datum, const std::vector<Int>& d_lift) {
  return compute_obstruction(datum, d_lift).global_order;
}

ObstructionReport report(const RootDatum& datum, const std::vector<Int>& d_lift, const Hypotheses& hyp) {
  ObstructionComputation c = compute_obstruction(datum, d_lift);
  ObstructionReport r;
  r.group_name = datum.name;
  r.pi1_G = GroupShape::of(c.iso.pi1_G);
  r.pi1_Gbar = GroupShape::of(c.iso.pi1_Gbar.group);
  r.d_class = c.type.d_class;
  r.d_bar = c.type.d_bar;
  r.psi = GroupShape::of(c.psi.structure);
  r.psi_prime = GroupShape::of(c.psi_prime.structure);
  r.ev_image = GroupShape::of(c.ev_image_cokernel.image);
  r.ev_cokernel = GroupShape::of(c.ev_image_cokernel.cokernel);
  r.generic_order = c.generic_order;
  r.center_torsion_exponent = c.iso.torsion_exponent;
  r.global_order = c.global_order;
  r.center_is_torus = c.iso.center_is_torus;
  r.exists_generic = (r.generic_order == 1);
  r.exists_global = (r.global_order == 1);
  r.genus = hyp.genus;
  r.characteristic = hyp.char_any ? "any" : hyp.characteristic.str();

  const bool char0 = !hyp.char_any && hyp.characteristic == 0;
  if (hyp.genus >= 3) r.generic_hypothesis = HypothesisFlag::valid;
  else if (char0 && hyp.genus == 2) r.generic_hypothesis = HypothesisFlag::valid_char0_relaxed;
  else r.generic_hypothesis = HypothesisFlag::indeterminate;

  if (hyp.genus >= 4) r.global_hypothesis = HypothesisFlag::valid;
  else if (char0 && hyp.genus == 3) r.global_hypothesis = HypothesisFlag::valid_char0_relaxed;
  else r.global_hypothesis = HypothesisFlag::indeterminate;
  return r;
}

namespace {

nlohmann::json shape_to_json(const GroupShape& g) {
  nlohmann::json j;
  j["free_rank"] = g.free_rank;
  j["invariant_factors"] = nlohmann::json::array();
  for (const Int& f : g.invariant_factors) j["invariant_factors"].push_back(to_ll(f));
  return j;
}

GroupShape shape_from_json(const nlohmann::json& j) {
  GroupShape g;
  g.free_rank = j.at("free_rank").get<long>();
  for (const auto& f : j.at("invariant_factors")) g.invariant_factors.push_back(Int(f.get<long long>()));
  return g;
}

nlohmann::json ints_to_json(const std::vector<Int>& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const Int& x : v) j.push_back(to_ll(x));
  return j;
}

std::vector<Int> ints_from_json(const nlohmann::json& j) {
  std::vector<Int> v;
  for (const auto& x : j) v.push_back(Int(x.get<long long>()));
  return v;
}

HypothesisFlag flag_from_name(const std::string& s) {
  if (s == "valid") return HypothesisFlag::valid;
  if (s == "valid-char0-relaxed") return HypothesisFlag::valid_char0_relaxed;
  if (s == "indeterminate") return HypothesisFlag::indeterminate;
  throw input_error("unknown hypothesis flag '" + s + "'");
}

}  // namespace

std::string report_to_json(const ObstructionReport& r) {
  nlohmann::json j;
  j["spec_version"] = 1;
  j["group"] = r.group_name;
  j["pi1_G"] = shape_to_json(r.pi1_G);
  j["pi1_Gbar"] = shape_to_json(r.pi1_Gbar);
  j["d_class"] = ints_to_json(r.d_class);
  j["d_bar"] = ints_to_json(r.d_bar);
  j["psi"] = shape_to_json(r.psi);
  j["psi_prime"] = shape_to_json(r.psi_prime);
  j["ev_image"] = shape_to_json(r.ev_image);
  j["ev_cokernel"] = shape_to_json(r.ev_cokernel);
  j["generic_order"] = to_ll(r.generic_order);
  j["center_torsion_exponent"] = to_ll(r.center_torsion_exponent);
  j["global_order"] = to_ll(r.global_order);
  j["center_is_torus"] = r.center_is_torus;
  j["exists_generic"] = r.exists_generic;
  j["exists_global"] = r.exists_global;
  j["generic_hypothesis"] = flag_name(r.generic_hypothesis);
  j["global_hypothesis"] = flag_name(r.global_hypothesis);
  j["genus"] = r.genus;
  j["characteristic"] = r.characteristic;
  return j.dump(2) + "\n";
}

ObstructionReport report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("invalid report JSON: ") + e.what());
  }
  try {
    if (j.at("spec_version").get<int>() != 1) throw input_error("unsupported report version");
    ObstructionReport r;
    r.group_name = j.at("group").get<std::string>();
    r.pi1_G = shape_from_json(j.at("pi1_G"));
    r.pi1_Gbar = shape_from_json(j.at("pi1_Gbar"));
    r.d_class = ints_from_json(j.at("d_class"));
    r.d_bar = ints_from_json(j.at("d_bar"));
    r.psi = shape_from_json(j.at("psi"));
    r.psi_prime = shape_from_json(j.at("psi_prime"));
    r.ev_image = shape_from_json(j.at("ev_image"));
    r.ev_cokernel = shape_from_json(j.at("ev_cokernel"));
    r.generic_order = Int(j.at("generic_order").get<long long>());
    r.center_torsion_exponent = Int(j.at("center_torsion_exponent").get<long long>());
    r.global_order = Int(j.at("global_order").get<long long>());
    r.center_is_torus = j.at("center_is_torus").get<bool>();
    r.exists_generic = j.at("exists_generic").get<bool>();
    r.exists_global = j.at("exists_global").get<bool>();
    r.generic_hypothesis = flag_from_name(j.at("generic_hypothesis").get<std::string>());
    r.global_hypothesis = flag_from_name(j.at("global_hypothesis").get<std::string>());
    r.genus = j.at("genus").get<long>();
    r.characteristic = j.at("characteristic").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad report document: ") + e.what());
  }
}

namespace {

std::string coords_str(const std::vector<Int>& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

}  // namespace

std::string report_to_text(const ObstructionReport& r) {
  std::ostringstream os;
  os << "group: " << r.group_name << "\n";
  os << "genus " << r.genus << ", characteristic " << r.characteristic << "\n";
  os << "type d in pi1(G) = " << r.pi1_G.describe() << ": " << coords_str(r.d_class) << "\n";
  os << "projected type in pi1(Gbar) = " << r.pi1_Gbar.describe() << ": " << coords_str(r.d_bar) << "\n";
  os << "Psi(G^ad) = " << r.psi.describe() << "\n";
  os << "Psi'(G) = " << r.psi_prime.describe() << "\n";
  os << "ev image = " << r.ev_image.describe() << ", ev cokernel = " << r.ev_cokernel.describe() << "\n";
  os << "generic order = " << r.generic_order
     << "  (Poincare family on some open subset: " << (r.exists_generic ? "yes" : "no")
     << "; hypothesis " << flag_name(r.generic_hypothesis) << ")\n";
  os << "center torsion exponent = " << r.center_torsion_exponent
     << (r.center_is_torus ? "  (center is a torus)" : "") << "\n";
  os << "global order = " << r.global_order
     << "  (Poincare family on the regularly stable locus: " << (r.exists_global ? "yes" : "no")
     << "; hypothesis " << flag_name(r.global_hypothesis) << ")\n";
  return os.str();
}

}  // namespace rootobs
