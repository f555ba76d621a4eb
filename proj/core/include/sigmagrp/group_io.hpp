#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigmagrp/checks.hpp"
#include "sigmagrp/perm_group.hpp"

namespace sigmagrp {

/// Line-based group description: `degree N` first, then optional `name ...`
/// and `gen <cycles>` lines; `#` starts a comment.
struct GroupFile {
  int degree = 1;
  std::vector<std::string> generators;
  std::string name;
};

GroupFile read_group_file(const std::string& path);
GroupFile to_group_file(const PermGroup& g, const std::string& name = {});
std::string serialize(const GroupFile& f);
PermGroup to_group(const GroupFile& f);
PermGroup parse_group_file(const std::string& path);

struct GroupSummary {
  int degree = 0;
  std::string order;
  std::vector<std::uint64_t> primes;
};

GroupSummary summarize(const PermGroup& g);

struct Report {
  std::string command;
  GroupSummary group;
  std::optional<GroupSummary> normal;
  std::optional<GroupSummary> subgroup;
  std::optional<std::string> sigma;
  std::optional<bool> verdict;
  std::optional<std::string> least;
  std::optional<Witness> witness;
  std::uint64_t millis = 0;
};

/// Text mode prints the terse verdict/partition lines; JSON mode prints the
/// full versioned object on one line.
std::string emit_report(const Report& r, bool json);

}  // namespace sigmagrp
