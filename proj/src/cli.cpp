#include "rootobs/cli.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace rootobs {

namespace {

std::string rational_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

nlohmann::json factors_json(const FinAbGroup& g) {
  nlohmann::json j = nlohmann::json::array();
  for (const Int& f : g.invariant_factors) j.push_back(to_ll(f));
  return j;
}

nlohmann::json pairing_json(const PairingClass& p) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < p.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < p.size(); ++j) row.push_back(rational_str(p.values(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string pairing_text(const PairingClass& p) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < p.size(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < p.size(); ++j) os << (j ? "," : "") << rational_str(p.values(i, j));
  }
  os << "]";
  return os.str();
}

std::string cmd_describe(const RootDatum& datum, Invocation::Format format) {
  IsogenyData iso = isogeny_data(datum);
  if (format == Invocation::Format::json) {
    nlohmann::json j;
    j["spec_version"] = 1;
    j["group"] = datum.name;
    j["lattice_rank"] = datum.lattice_rank;
    nlohmann::json factors = nlohmann::json::array();
    for (const SimpleType& t : datum.rs.factors) factors.push_back(t.str());
    j["factors"] = factors;
    j["pi1_G"] = {{"free_rank", iso.pi1_G.free_rank}, {"invariant_factors", factors_json(iso.pi1_G)}};
    j["pi1_Gprime"] = factors_json(iso.pi1_Gprime.group);
    j["pi1_Gbar"] = factors_json(iso.pi1_Gbar.group);
    j["pi1_Gad"] = factors_json(iso.pi1_Gad);
    j["center_chars"] = {{"free_rank", iso.center_chars.free_rank},
                         {"invariant_factors", factors_json(iso.center_chars)}};
    j["center_is_torus"] = iso.center_is_torus;
    j["center_torsion_exponent"] = to_ll(iso.torsion_exponent);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "group: " << datum.name << "\n";
  os << "lattice rank: " << datum.lattice_rank << "\n";
  os << "factors:";
  if (datum.rs.factors.empty()) os << " none (torus)";
  for (const SimpleType& t : datum.rs.factors) os << " " << t.str();
  os << "\n";
  os << "pi1(G)      = " << iso.pi1_G.describe() << "\n";
  os << "pi1(G')     = " << iso.pi1_Gprime.group.describe() << "\n";
  os << "pi1(Gbar)   = " << iso.pi1_Gbar.group.describe() << "\n";
  os << "pi1(G^ad)   = " << iso.pi1_Gad.describe() << "\n";
  os << "center characters = " << iso.center_chars.describe()
     << "  (torus: " << (iso.center_is_torus ? "yes" : "no")
     << ", torsion exponent " << iso.torsion_exponent << ")\n";
  return os.str();
}

std::string cmd_psi(const RootDatum& datum, Invocation::Format format) {
  IsogenyData iso = isogeny_data(datum);
  PsiGroup psi = psi_group(datum.rs);
  PsiGroup psip = psi_prime(psi, iso);
  if (format == Invocation::Format::json) {
    nlohmann::json j;
    j["spec_version"] = 1;
    j["group"] = datum.name;
    j["pi1_Gad"] = factors_json(iso.pi1_Gad);
    j["psi"] = factors_json(psi.structure);
    nlohmann::json gens = nlohmann::json::array();
    for (int g = 0; g < psi.structure.ngens(); ++g) gens.push_back(pairing_json(psi.structure_generator_pairing(g)));
    j["psi_generators"] = gens;
    j["psi_prime"] = factors_json(psip.structure);
    nlohmann::json pgens = nlohmann::json::array();
    for (int g = 0; g < psip.structure.ngens(); ++g)
      pgens.push_back(pairing_json(psip.structure_generator_pairing(g)));
    j["psi_prime_generators"] = pgens;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "group: " << datum.name << "\n";
  os << "pi1(G^ad) = " << iso.pi1_Gad.describe() << "\n";
  os << "Psi(G^ad) = " << psi.structure.describe() << "\n";
  for (int g = 0; g < psi.structure.ngens(); ++g)
    os << "  generator " << (g + 1) << " pairing: " << pairing_text(psi.structure_generator_pairing(g)) << "\n";
  os << "Psi'(G)   = " << psip.structure.describe() << "\n";
  for (int g = 0; g < psip.structure.ngens(); ++g)
    os << "  generator " << (g + 1) << " pairing: " << pairing_text(psip.structure_generator_pairing(g)) << "\n";
  return os.str();
}

std::string cmd_obstruct(const RootDatum& datum, const Invocation& inv) {
  if (!inv.d_lift) throw input_error("obstruct needs --d (a comma-separated lift of the topological type)");
  if (!inv.genus) throw input_error("obstruct needs --genus");
  Hypotheses hyp = Hypotheses::parse(*inv.genus, inv.characteristic);
  ObstructionReport r = report(datum, *inv.d_lift, hyp);
  if (inv.format == Invocation::Format::json) return report_to_json(r);
  return report_to_text(r);
}

std::string cmd_table(const Invocation& inv) {
  if (inv.rank_bound < 1 || inv.rank_bound > 8)
    throw input_error("table needs --rank-bound between 1 and 8");
  std::ostringstream text;
  nlohmann::json rows = nlohmann::json::array();
  for (const SimpleType& t : all_simple_types(inv.rank_bound)) {
    RootSystem rs = build_root_system({t});
    FinAbGroup pi1 = cokernel(rs.cartan);
    PsiGroup psi = psi_group(rs);
    std::string gen_text = "---";
    nlohmann::json gen_json = nlohmann::json::array();
    if (!psi.structure.is_trivial()) {
      PairingClass p = psi.structure_generator_pairing(0);
      gen_text = pairing_text(p);
      gen_json = pairing_json(p);
    }
    if (inv.format == Invocation::Format::json) {
      nlohmann::json row;
      row["type"] = t.str();
      row["pi1"] = factors_json(pi1);
      row["psi"] = factors_json(psi.structure);
      row["generator"] = gen_json;
      rows.push_back(row);
    } else {
      text << t.str() << "\tpi1 = " << pi1.describe() << "\tPsi = " << psi.structure.describe()
           << "\tgenerator " << gen_text << "\n";
    }
  }
  if (inv.format == Invocation::Format::json) {
    nlohmann::json j;
    j["spec_version"] = 1;
    j["rank_bound"] = inv.rank_bound;
    j["rows"] = rows;
    return j.dump(2) + "\n";
  }
  return text.str();
}

std::string cmd_selftest(const Invocation& inv, int& exit_code) {
  SelftestOptions opts;
  opts.inject_snf_fault = inv.inject_snf_fault;
  SelftestResult r = run_selftest(opts);
  if (!r.ok()) exit_code = 3;
  return r.log;
}

}  // namespace

RootDatum resolve_datum(const Invocation& inv) {
  if (!inv.group_expr.empty() && !inv.datum_file.empty())
    throw input_error("give either --group or --datum, not both");
  if (!inv.group_expr.empty()) return parse_group_expression(inv.group_expr);
  if (!inv.datum_file.empty()) {
    std::ifstream in(inv.datum_file);
    if (!in) throw input_error("cannot open datum file '" + inv.datum_file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return datum_from_json_text(buf.str());
  }
  throw input_error("a group is required: --group <expr> or --datum <file.json>");
}

CommandResult run_invocation(const Invocation& inv) {
  CommandResult res;
  try {
    switch (inv.command) {
      case Invocation::Command::describe:
        res.output = cmd_describe(resolve_datum(inv), inv.format);
        break;
      case Invocation::Command::psi:
        res.output = cmd_psi(resolve_datum(inv), inv.format);
        break;
      case Invocation::Command::obstruct:
        res.output = cmd_obstruct(resolve_datum(inv), inv);
        break;
      case Invocation::Command::table:
        res.output = cmd_table(inv);
        break;
      case Invocation::Command::selftest:
        res.output = cmd_selftest(inv, res.exit_code);
        break;
    }
  } catch (const input_error& e) {
    res.exit_code = 2;
    res.output = std::string("error: ") + e.what() + "\n";
  } catch (const integrity_error& e) {
    res.exit_code = 3;
    res.output = std::string("integrity violation (this is a bug): ") + e.what() + "\n";
  } catch (const std::exception& e) {
    res.exit_code = 3;
    res.output = std::string("unexpected failure: ") + e.what() + "\n";
  }
  return res;
}

}  // namespace rootobs
