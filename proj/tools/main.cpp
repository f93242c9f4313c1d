// rootobs: obstruction orders against Poincare families of principal bundles,
// computed from root data in exact arithmetic.
#include "rootobs/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using rootobs::Invocation;

void add_group_options(CLI::App* cmd, Invocation& inv) {
  cmd->add_option("--group", inv.group_expr,
                  "group expression, e.g. \"GL(4)\", \"SC(D4)\", \"INT(A3; 2)\", products with x");
  cmd->add_option("--datum", inv.datum_file, "path to an explicit root datum (JSON)");
}

void add_format_option(CLI::App* cmd, Invocation& inv, std::string& format) {
  cmd->add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"obstruction orders against Poincare families of principal G-bundles on curves"};
  app.require_subcommand(1);

  Invocation inv;
  std::string format = "text";
  std::string d_arg;
  std::string out_path;
  long genus = -1;

  CLI::App* describe = app.add_subcommand("describe", "lattice, root system, and fundamental groups");
  add_group_options(describe, inv);
  add_format_option(describe, inv, format);

  CLI::App* psi = app.add_subcommand("psi", "the pairing groups Psi(G^ad) and Psi'(G)");
  add_group_options(psi, inv);
  add_format_option(psi, inv, format);

  CLI::App* obstruct = app.add_subcommand("obstruct", "generic and global obstruction orders for one type");
  add_group_options(obstruct, inv);
  add_format_option(obstruct, inv, format);
  obstruct->add_option("--d", d_arg, "lift of the topological type, comma-separated integers")->required();
  obstruct->add_option("--genus", genus, "genus of the base curve")->required();
  obstruct->add_option("--char", inv.characteristic, "base field characteristic: 0, a prime, or any")
      ->default_val("any");

  CLI::App* table = app.add_subcommand("table", "catalogue of Psi for all simple types up to a rank bound");
  add_format_option(table, inv, format);
  table->add_option("--rank-bound", inv.rank_bound, "largest rank to list (1..8)")->required();

  CLI::App* selftest = app.add_subcommand("selftest", "run the desk-scale property and oracle suites");
  selftest->add_flag("--inject-snf-fault", inv.inject_snf_fault,
                     "corrupt one normal form to prove the harness catches it")
      ->group("");  // hidden

  for (CLI::App* cmd : {describe, psi, obstruct, table, selftest})
    cmd->add_option("--out", out_path, "also write the output to this file");

  CLI11_PARSE(app, argc, argv);

  if (describe->parsed()) inv.command = Invocation::Command::describe;
  if (psi->parsed()) inv.command = Invocation::Command::psi;
  if (obstruct->parsed()) inv.command = Invocation::Command::obstruct;
  if (table->parsed()) inv.command = Invocation::Command::table;
  if (selftest->parsed()) inv.command = Invocation::Command::selftest;
  inv.format = (format == "json") ? Invocation::Format::json : Invocation::Format::text;
  if (genus >= 0) inv.genus = genus;
  if (!d_arg.empty()) {
    std::vector<rootobs::Int> lift;
    std::string token;
    std::istringstream ss(d_arg);
    try {
      while (std::getline(ss, token, ',')) lift.emplace_back(token);
    } catch (...) {
      std::cerr << "error: --d expects comma-separated integers\n";
      return 2;
    }
    inv.d_lift = std::move(lift);
  }

  rootobs::CommandResult res = rootobs::run_invocation(inv);
  std::cout << res.output;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
    out << res.output;
  }
  return res.exit_code;
}
