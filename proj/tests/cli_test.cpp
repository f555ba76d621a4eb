#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <vector>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "sigmagrp/checks.hpp"
#include "sigmagrp/group_io.hpp"
#include "sigmagrp/partition.hpp"
#include "sigmagrp/section.hpp"

using namespace sigmagrp;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* cli_path() {
  const char* p = std::getenv("SIGMAGRP_CLI");
  REQUIRE_MESSAGE(p != nullptr, "SIGMAGRP_CLI must point at the command-line binary");
  return p;
}

std::string data_file(const std::string& name) {
  const char* d = std::getenv("SIGMAGRP_DATA");
  REQUIRE_MESSAGE(d != nullptr, "SIGMAGRP_DATA must point at the sample group files");
  return (std::filesystem::path(d) / name).string();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const auto tmp = std::filesystem::temp_directory_path();
  const auto tag = std::to_string(::getpid()) + "_" + std::to_string(counter++);
  const auto out_path = tmp / ("sigmagrp_cli_out_" + tag);
  const auto err_path = tmp / ("sigmagrp_cli_err_" + tag);

  const std::string cmd = std::string("\"") + cli_path() + "\" " + args + " > " +
                          out_path.string() + " 2> " + err_path.string();
  const int status = std::system(cmd.c_str());

  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return r;
}

}  // namespace

TEST_CASE("check verdicts print tersely and exit zero") {
  const auto r = run_cli("check nilpotent --group " + data_file("s3.grp") + " --sigma \"2|3\"");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "verdict: false\n"
        "witness: cross-commutator: components of blocks {2} and {3} do not commute modulo the "
        "normal subgroup\n");
  CHECK(r.err.empty());
}

TEST_CASE("least subcommands print the partition") {
  const auto r = run_cli("least nilpotent --group " + data_file("c6.grp"));
  CHECK(r.code == 0);
  CHECK(r.out == "least partition: 2|3\n");

  const auto s = run_cli("least soluble --group " + data_file("a5.grp"));
  CHECK(s.code == 0);
  CHECK(s.out == "least partition: 2,3,5\n");

  const auto t = run_cli("least ppermutable --group " + data_file("s3.grp") + " --subgroup " +
                         data_file("c2_in_s3.grp"));
  CHECK(t.code == 0);
  CHECK(t.out == "least partition: 2,3\n");
}

TEST_CASE("a subgroup equals the whole group is trivially subnormal") {
  const auto r = run_cli("check subnormal --group " + data_file("s3.grp") + " --subgroup " +
                         data_file("s3.grp") + " --sigma \"2|3\"");
  CHECK(r.code == 0);
  CHECK(r.out == "verdict: true\n");
}

TEST_CASE("assert flag turns a false verdict into exit one") {
  const auto r = run_cli("check nilpotent --group " + data_file("s3.grp") + " --sigma \"2|3\" --assert");
  CHECK(r.code == 1);
  CHECK(r.out.substr(0, 14) == "verdict: false");

  const auto ok = run_cli("check soluble --group " + data_file("s4.grp") + " --sigma \"2|3\" --assert");
  CHECK(ok.code == 0);
}

TEST_CASE("json reports carry the full context") {
  const auto r = run_cli("check ppermutable --group " + data_file("s4.grp") + " --subgroup " +
                         data_file("d8.grp") + " --sigma \"2|3\" --json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "check ppermutable");
  CHECK(j["group"]["order"] == "24");
  CHECK(j["subgroup"]["order"] == "8");
  CHECK(j["sigma"] == "2|3");
  CHECK(j["verdict"] == false);
  CHECK(j["witness"]["kind"] == "closure-not-nilpotent");
  CHECK(j["millis"].is_number_unsigned());
  CHECK_FALSE(j.contains("normal"));
}

TEST_CASE("sections come from the normal flag and fix the sigma ground") {
  const auto r = run_cli("check nilpotent --group " + data_file("c6.grp") + " --normal " +
                         data_file("c3_in_c6.grp") + " --sigma \"2\" --json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == true);
  CHECK(j["normal"]["order"] == "3");

  const auto bad = run_cli("check nilpotent --group " + data_file("c6.grp") + " --normal " +
                           data_file("c3_in_c6.grp") + " --sigma \"2|3\"");
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err.substr(0, 7) == "error: ");
}

TEST_CASE("input problems exit two with a diagnostic on stderr") {
  const auto missing = run_cli("check soluble --group /nonexistent.grp --sigma \"2\"");
  CHECK(missing.code == 2);
  CHECK(missing.out.empty());
  CHECK(missing.err.substr(0, 7) == "error: ");

  const auto ground = run_cli("check nilpotent --group " + data_file("s3.grp") + " --sigma \"2|5\"");
  CHECK(ground.code == 2);

  const auto nosub = run_cli("check subnormal --group " + data_file("s3.grp") + " --sigma \"2|3\"");
  CHECK(nosub.code == 2);

  const auto extrasub = run_cli("least soluble --group " + data_file("s3.grp") + " --subgroup " +
                                data_file("a3.grp"));
  CHECK(extrasub.code == 2);

  const auto badprop = run_cli("check frobnicate --group " + data_file("s3.grp") + " --sigma \"2|3\"");
  CHECK(badprop.code == 2);

  const auto sigma_on_least = run_cli("least nilpotent --group " + data_file("s3.grp") +
                                      " --sigma \"2|3\"");
  CHECK(sigma_on_least.code == 2);

  const auto insoluble = run_cli("check permutable --group " + data_file("a5.grp") +
                                 " --subgroup " + data_file("a5.grp") + " --sigma \"2|3|5\"");
  CHECK(insoluble.code == 2);
}

TEST_CASE("desk-scale caps exit three") {
  const auto r = run_cli("check ppermutable --group " + data_file("s4.grp") + " --subgroup " +
                         data_file("d8.grp") + " --sigma \"2|3\" --max-index 1");
  CHECK(r.code == 3);
  CHECK(r.out.empty());
  CHECK(r.err.substr(0, 7) == "error: ");
}

TEST_CASE("cli verdicts equal direct library calls") {
  const std::vector<std::string> files = {"s3.grp", "s4.grp", "a4.grp", "d8.grp", "v4.grp",
                                          "c6.grp", "c30.grp", "a5.grp"};
  for (const auto& file : files) {
    const auto g = parse_group_file(data_file(file));
    const Section s(g, PermGroup::trivial(g.degree()));
    for (const auto& tau : all_partitions(g.prime_set())) {
      const auto quoted = "\"" + tau.to_string() + "\"";
      const auto nil = run_cli("check nilpotent --group " + data_file(file) + " --sigma " +
                               quoted + " --json");
      REQUIRE(nil.code == 0);
      CHECK(nlohmann::json::parse(nil.out)["verdict"] == is_sigma_nilpotent(s, tau).verdict);

      const auto sol = run_cli("check soluble --group " + data_file(file) + " --sigma " + quoted +
                               " --json");
      REQUIRE(sol.code == 0);
      CHECK(nlohmann::json::parse(sol.out)["verdict"] == is_sigma_soluble(s, tau).verdict);
    }
  }

  const auto g = parse_group_file(data_file("s4.grp"));
  for (const auto& sub : {"v4.grp", "d8.grp", "a4.grp"}) {
    const auto h = parse_group_file(data_file(sub));
    for (const auto& tau : all_partitions(g.prime_set())) {
      const auto args = " --group " + data_file("s4.grp") + " --subgroup " + data_file(sub) +
                        " --sigma \"" + tau.to_string() + "\" --json";
      const auto sn = run_cli("check subnormal" + args);
      REQUIRE(sn.code == 0);
      CHECK(nlohmann::json::parse(sn.out)["verdict"] ==
            is_sigma_subnormal(g, h, PermGroup::trivial(4), tau).verdict);

      const auto pp = run_cli("check ppermutable" + args);
      REQUIRE(pp.code == 0);
      CHECK(nlohmann::json::parse(pp.out)["verdict"] ==
            is_sigma_p_permutable(g, h, PermGroup::trivial(4), tau).verdict);
    }
  }
}
