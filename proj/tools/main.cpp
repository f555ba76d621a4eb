#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sigmagrp/checks.hpp"
#include "sigmagrp/errors.hpp"
#include "sigmagrp/group_io.hpp"
#include "sigmagrp/least.hpp"
#include "sigmagrp/toolbox.hpp"

namespace {

using namespace sigmagrp;

struct Options {
  std::string property;
  std::string group_path;
  std::string normal_path;
  std::string subgroup_path;
  std::string sigma_text;
  bool json = false;
  bool assert_true = false;
  std::optional<std::uint64_t> max_index;
  std::optional<std::uint64_t> max_enum;
};

void add_common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--group", opt.group_path, "group file for the ambient group")->required();
  cmd->add_option("--normal", opt.normal_path, "group file for the normal subgroup (default trivial)");
  cmd->add_option("--subgroup", opt.subgroup_path, "group file for the subgroup under test");
  cmd->add_flag("--json", opt.json, "emit the report as JSON");
  cmd->add_flag("--assert", opt.assert_true, "exit 1 when the verdict is false");
  cmd->add_option("--max-index", opt.max_index, "cap on enumerated coset counts");
  cmd->add_option("--max-enum", opt.max_enum, "cap on enumerated element counts");
}

bool needs_subgroup(const std::string& command, const std::string& property) {
  if (command == "check") {
    return property == "subnormal" || property == "ppermutable" || property == "permutable";
  }
  return property == "ppermutable";
}

int run(const std::string& command, const Options& opt) {
  Config cfg;
  if (opt.max_index) cfg.max_index = *opt.max_index;
  if (opt.max_enum) cfg.max_enum = *opt.max_enum;

  const auto started = std::chrono::steady_clock::now();
  const PermGroup g = parse_group_file(opt.group_path);
  const PermGroup k =
      opt.normal_path.empty() ? PermGroup::trivial(g.degree()) : parse_group_file(opt.normal_path);
  if (k.degree() != g.degree()) {
    throw input_error("the normal subgroup file must use the group's degree");
  }

  std::optional<PermGroup> h;
  if (needs_subgroup(command, opt.property)) {
    if (opt.subgroup_path.empty()) {
      throw input_error("this command needs --subgroup");
    }
    h = parse_group_file(opt.subgroup_path);
    if (h->degree() != g.degree()) {
      throw input_error("the subgroup file must use the group's degree");
    }
  } else if (!opt.subgroup_path.empty()) {
    throw input_error("--subgroup does not apply to this command");
  }

  Report report;
  report.command = command + " " + opt.property;
  report.group = summarize(g);
  if (!opt.normal_path.empty()) report.normal = summarize(k);
  if (h) report.subgroup = summarize(*h);

  const Section section(g, k);
  const auto quotient_primes = section_primes(section);

  if (command == "check") {
    const Partition sigma = Partition::parse(opt.sigma_text, quotient_primes);
    report.sigma = sigma.to_string();
    const Partition wide = extend_by_singletons(sigma, g.prime_set());

    CheckReport result;
    if (opt.property == "nilpotent") {
      result = is_sigma_nilpotent(section, sigma);
    } else if (opt.property == "soluble") {
      result = is_sigma_soluble(section, sigma, cfg);
    } else if (opt.property == "subnormal") {
      result = is_sigma_subnormal(g, *h, k, wide, cfg);
    } else if (opt.property == "ppermutable") {
      result = is_sigma_p_permutable(g, *h, k, wide, cfg);
    } else {
      result = is_sigma_permutable_soluble(g, *h, k, wide, cfg);
    }
    report.verdict = result.verdict;
    report.witness = result.witness;
  } else {
    Partition least;
    if (opt.property == "nilpotent") {
      least = least_sigma_nilpotent(section);
    } else if (opt.property == "soluble") {
      least = least_sigma_soluble(section, cfg);
    } else {
      least = least_sigma_p_permutable(g, *h, k, cfg);
    }
    report.least = least.to_string();
  }
  const auto elapsed = std::chrono::steady_clock::now() - started;
  report.millis = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());

  std::cout << emit_report(report, opt.json);
  if (opt.assert_true && report.verdict && !*report.verdict) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sigma-property decisions for sections of permutation groups"};
  app.require_subcommand(1);

  Options check_opt;
  Options least_opt;

  CLI::App* check = app.add_subcommand("check", "decide a property at a given partition");
  check->add_option("property", check_opt.property, "nilpotent|soluble|subnormal|ppermutable|permutable")
      ->required()
      ->check(CLI::IsMember({"nilpotent", "soluble", "subnormal", "ppermutable", "permutable"}));
  check->add_option("--sigma", check_opt.sigma_text, "partition of the section primes, e.g. \"2,3|5\"")
      ->required();
  add_common_flags(check, check_opt);

  CLI::App* least = app.add_subcommand("least", "compute the finest partition with the property");
  least->add_option("property", least_opt.property, "nilpotent|soluble|ppermutable")
      ->required()
      ->check(CLI::IsMember({"nilpotent", "soluble", "ppermutable"}));
  add_common_flags(least, least_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return run("check", check_opt);
    return run("least", least_opt);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
