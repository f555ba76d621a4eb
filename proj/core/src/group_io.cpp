#include "sigmagrp/group_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sigmagrp/errors.hpp"

namespace sigmagrp {

namespace {

std::string trimmed(const std::string& line) {
  const auto a = line.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = line.find_last_not_of(" \t\r\n");
  return line.substr(a, b - a + 1);
}

[[noreturn]] void fail_at(const std::string& path, int line_no, const std::string& what) {
  throw input_error(path + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

GroupFile read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open group file: " + path);

  GroupFile f;
  bool have_degree = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trimmed(raw);
    if (line.empty() || line[0] == '#') continue;

    std::istringstream words(line);
    std::string head;
    words >> head;
    std::string rest;
    std::getline(words, rest);
    rest = trimmed(rest);

    if (head == "degree") {
      if (have_degree) fail_at(path, line_no, "degree declared twice");
      int d = 0;
      try {
        std::size_t used = 0;
        d = std::stoi(rest, &used);
        if (used != rest.size()) d = 0;
      } catch (const std::exception&) {
        d = 0;
      }
      if (d < 1) fail_at(path, line_no, "degree needs a positive integer, got '" + rest + "'");
      f.degree = d;
      have_degree = true;
    } else if (!have_degree) {
      fail_at(path, line_no, "the first entry must be 'degree N'");
    } else if (head == "gen") {
      if (rest.empty()) fail_at(path, line_no, "gen line needs cycle notation");
      f.generators.push_back(rest);
    } else if (head == "name") {
      f.name = rest;
    } else {
      fail_at(path, line_no, "unknown entry '" + head + "'");
    }
  }
  if (!have_degree) throw input_error(path + ": no degree declared");
  return f;
}

GroupFile to_group_file(const PermGroup& g, const std::string& name) {
  GroupFile f;
  f.degree = g.degree();
  f.name = name;
  for (const auto& gen : g.generators()) f.generators.push_back(format_cycles(gen));
  return f;
}

std::string serialize(const GroupFile& f) {
  std::string out = "degree " + std::to_string(f.degree) + "\n";
  if (!f.name.empty()) out += "name " + f.name + "\n";
  for (const auto& gen : f.generators) out += "gen " + gen + "\n";
  return out;
}

PermGroup to_group(const GroupFile& f) {
  std::vector<Permutation> gens;
  gens.reserve(f.generators.size());
  for (const auto& text : f.generators) gens.push_back(parse_cycles(text, f.degree));
  return PermGroup(f.degree, std::move(gens));
}

PermGroup parse_group_file(const std::string& path) {
  const GroupFile f = read_group_file(path);
  try {
    return to_group(f);
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

GroupSummary summarize(const PermGroup& g) {
  return {g.degree(), g.order().to_decimal(), g.prime_set()};
}

namespace {

nlohmann::ordered_json summary_json(const GroupSummary& s) {
  return {{"degree", s.degree}, {"order", s.order}, {"primes", s.primes}};
}

}  // namespace

std::string emit_report(const Report& r, bool json) {
  if (!json) {
    std::string out;
    if (r.verdict) out += std::string("verdict: ") + (*r.verdict ? "true" : "false") + "\n";
    if (r.least) out += "least partition: " + *r.least + "\n";
    if (r.witness) out += "witness: " + r.witness->kind + ": " + r.witness->detail + "\n";
    return out;
  }

  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["command"] = r.command;
  j["group"] = summary_json(r.group);
  if (r.normal) j["normal"] = summary_json(*r.normal);
  if (r.subgroup) j["subgroup"] = summary_json(*r.subgroup);
  if (r.sigma) j["sigma"] = *r.sigma;
  if (r.verdict) j["verdict"] = *r.verdict;
  if (r.least) j["least"] = *r.least;
  if (r.witness) {
    nlohmann::ordered_json w;
    w["kind"] = r.witness->kind;
    w["detail"] = r.witness->detail;
    if (!r.witness->block_a.empty()) w["block_a"] = r.witness->block_a;
    if (!r.witness->block_b.empty()) w["block_b"] = r.witness->block_b;
    if (!r.witness->primes.empty()) w["primes"] = r.witness->primes;
    j["witness"] = w;
  }
  j["millis"] = r.millis;
  return j.dump() + "\n";
}

}  // namespace sigmagrp
