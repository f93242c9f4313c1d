#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rootobs/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>

using namespace rootobs;

namespace {

Invocation base(Invocation::Command cmd, const std::string& group = "") {
  Invocation inv;
  inv.command = cmd;
  inv.group_expr = group;
  return inv;
}

}  // namespace

TEST_CASE("describe") {
  SUBCASE("GL(3): free fundamental group, torus center") {
    CommandResult r = run_invocation(base(Invocation::Command::describe, "GL(3)"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("pi1(G)      = Z\n") != std::string::npos);
    CHECK(r.output.find("torus: yes") != std::string::npos);
  }
  SUBCASE("SC(G2): everything trivial") {
    CommandResult r = run_invocation(base(Invocation::Command::describe, "SC(G2)"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("pi1(G)      = 0") != std::string::npos);
    CHECK(r.output.find("pi1(G^ad)   = 0") != std::string::npos);
  }
  SUBCASE("malformed expression exits 2 and names the position") {
    CommandResult r = run_invocation(base(Invocation::Command::describe, "SL(0)"));
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("parse error at position") != std::string::npos);
    CHECK(r.output.find("SL(0)") != std::string::npos);
  }
  SUBCASE("missing group exits 2") {
    CommandResult r = run_invocation(base(Invocation::Command::describe));
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("psi command") {
  auto psi_of = [](const std::string& expr) {
    return run_invocation(base(Invocation::Command::psi, expr));
  };
  CHECK(psi_of("AD(D5)").output.find("Psi(G^ad) = Z/4") != std::string::npos);
  CHECK(psi_of("AD(C5)").output.find("Psi(G^ad) = Z/2") != std::string::npos);
  CHECK(psi_of("AD(C4)").output.find("Psi(G^ad) = 0") != std::string::npos);
  CHECK(psi_of("T(2)").output.find("Psi(G^ad) = 0") != std::string::npos);
}

TEST_CASE("obstruct command") {
  auto obstruct = [](const std::string& expr, std::vector<long long> d, long genus,
                     Invocation::Format fmt = Invocation::Format::text) {
    Invocation inv = base(Invocation::Command::obstruct, expr);
    std::vector<Int> lift(d.size());
    for (size_t i = 0; i < d.size(); ++i) lift[i] = d[i];
    inv.d_lift = lift;
    inv.genus = genus;
    inv.format = fmt;
    return run_invocation(inv);
  };
  SUBCASE("GL(4) coprime degree: both orders 1") {
    CommandResult r = obstruct("GL(4)", {1, 0, 0, 0}, 4);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("generic order = 1") != std::string::npos);
    CHECK(r.output.find("global order = 1") != std::string::npos);
  }
  SUBCASE("GL(4) degree 2: both orders 2") {
    CommandResult r = obstruct("GL(4)", {1, 1, 0, 0}, 4);
    CHECK(r.output.find("generic order = 2") != std::string::npos);
    CHECK(r.output.find("global order = 2") != std::string::npos);
  }
  SUBCASE("SC(D4) trivial type: orders 2") {
    CommandResult r = obstruct("SC(D4)", {0, 0, 0, 0}, 4);
    CHECK(r.output.find("generic order = 2") != std::string::npos);
    CHECK(r.output.find("global order = 2") != std::string::npos);
  }
  SUBCASE("dimension mismatch exits 2") {
    CommandResult r = obstruct("GL(4)", {1, 0}, 4);
    CHECK(r.exit_code == 2);
  }
  SUBCASE("missing genus exits 2") {
    Invocation inv = base(Invocation::Command::obstruct, "GL(2)");
    inv.d_lift = std::vector<Int>{1, 0};
    CHECK(run_invocation(inv).exit_code == 2);
  }
  SUBCASE("json report round-trips") {
    CommandResult r = obstruct("GL(4)", {1, 1, 0, 0}, 4, Invocation::Format::json);
    REQUIRE(r.exit_code == 0);
    ObstructionReport back = report_from_json(r.output);
    CHECK(report_to_json(back) == r.output);
    CHECK(back.generic_order == 2);
  }
}

TEST_CASE("table command") {
  SUBCASE("rank bound 2: four rows") {
    Invocation inv = base(Invocation::Command::table);
    inv.rank_bound = 2;
    inv.format = Invocation::Format::json;
    CommandResult r = run_invocation(inv);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j["rows"].size() == 4);
    CHECK(j["rows"][0]["type"] == "A1");
    CHECK(j["rows"][0]["psi"] == nlohmann::json::array({2}));
    CHECK(j["rows"][1]["type"] == "A2");
    CHECK(j["rows"][1]["psi"] == nlohmann::json::array({3}));
    CHECK(j["rows"][2]["type"] == "B2");
    CHECK(j["rows"][2]["psi"] == nlohmann::json::array());
    CHECK(j["rows"][3]["type"] == "G2");
    CHECK(j["rows"][3]["psi"] == nlohmann::json::array());
  }
  SUBCASE("rank bound 8 includes E8 with trivial psi") {
    Invocation inv = base(Invocation::Command::table);
    inv.rank_bound = 8;
    inv.format = Invocation::Format::json;
    CommandResult r = run_invocation(inv);
    auto j = nlohmann::json::parse(r.output);
    bool found = false;
    for (const auto& row : j["rows"])
      if (row["type"] == "E8") {
        found = true;
        CHECK(row["psi"] == nlohmann::json::array());
      }
    CHECK(found);
  }
  SUBCASE("rank bound 9 rejected") {
    Invocation inv = base(Invocation::Command::table);
    inv.rank_bound = 9;
    CHECK(run_invocation(inv).exit_code == 2);
  }
}

TEST_CASE("determinism: identical invocations give byte-identical output") {
  Invocation table = base(Invocation::Command::table);
  table.rank_bound = 8;
  table.format = Invocation::Format::json;
  CHECK(run_invocation(table).output == run_invocation(table).output);

  Invocation obstruct = base(Invocation::Command::obstruct, "INT(D4; 1,0)");
  obstruct.d_lift = std::vector<Int>{1, 0, 0, 0};
  obstruct.genus = 5;
  obstruct.format = Invocation::Format::json;
  CHECK(run_invocation(obstruct).output == run_invocation(obstruct).output);
}

TEST_CASE("datum files") {
  const char* path = "cli_test_datum.json";
  {
    std::ofstream out(path);
    out << R"json({
      "lattice_rank": 2,
      "factors": ["A1"],
      "simple_coroots": [[1, -1]],
      "simple_roots": [[1, -1]],
      "name": "GL(2)"
    })json";
  }
  Invocation inv = base(Invocation::Command::describe);
  inv.datum_file = path;
  CommandResult r = run_invocation(inv);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("pi1(G)      = Z\n") != std::string::npos);
  std::remove(path);

  inv.datum_file = "no_such_file.json";
  CHECK(run_invocation(inv).exit_code == 2);

  inv.datum_file = path;
  inv.group_expr = "GL(2)";
  CHECK(run_invocation(inv).exit_code == 2);  // both sources given
}

TEST_CASE("selftest command") {
  Invocation inv = base(Invocation::Command::selftest);
  CommandResult r = run_invocation(inv);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0 failed") != std::string::npos);

  inv.inject_snf_fault = true;
  CommandResult f = run_invocation(inv);
  CHECK(f.exit_code == 3);
  CHECK(f.output.find("reproduce with: smith_normal_form") != std::string::npos);
}
