#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"
#include "sigmagrp/errors.hpp"
#include "sigmagrp/group_io.hpp"
#include "sigmagrp/perm_group.hpp"
#include "support/corpus.hpp"

using namespace sigmagrp;

namespace {

// Writes content to a fresh temp file and parses it; the file is removed
// before returning so failures cannot leak state between cases.
struct TempFile {
  std::filesystem::path path;

  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("sigmagrp_io_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
            ".grp");
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

PermGroup parse_text(const std::string& content) {
  const TempFile f(content);
  return parse_group_file(f.path.string());
}

}  // namespace

TEST_CASE("group files parse to the declared group") {
  const auto g = parse_text("degree 3\ngen (1 2)\ngen (1 2 3)\n");
  CHECK(g.degree() == 3);
  CHECK(g.order_u64() == 6);
}

TEST_CASE("a degree line alone is the trivial group") {
  const auto g = parse_text("degree 4\n");
  CHECK(g.degree() == 4);
  CHECK(g.order_u64() == 1);
}

TEST_CASE("comments, blank lines and names are accepted") {
  const TempFile f("# header\n\ndegree 4\nname klein four\n# mid\ngen (1 2)(3 4)\ngen (1 3)(2 4)\n");
  const auto gf = read_group_file(f.path.string());
  CHECK(gf.degree == 4);
  CHECK(gf.name == "klein four");
  CHECK(gf.generators.size() == 2);
  CHECK(to_group(gf).order_u64() == 4);
}

TEST_CASE("group file errors carry the offending line") {
  CHECK_THROWS_AS(parse_text("degree 3\ngen (1 4)\n"), input_error);
  CHECK_THROWS_WITH_AS(parse_text("gen (1 2)\ndegree 3\n"),
                       doctest::Contains("the first entry must be 'degree N'"), input_error);
  CHECK_THROWS_WITH_AS(parse_text("degree 3\ndegree 3\n"), doctest::Contains("degree declared twice"),
                       input_error);
  CHECK_THROWS_WITH_AS(parse_text("degree 3\nfoo bar\n"), doctest::Contains("unknown entry 'foo'"),
                       input_error);
  CHECK_THROWS_WITH_AS(parse_text("degree zero\n"), doctest::Contains("positive integer"),
                       input_error);
  CHECK_THROWS_WITH_AS(parse_text("degree 3\ngen\n"), doctest::Contains("cycle notation"),
                       input_error);
  CHECK_THROWS_WITH_AS(parse_text("# only a comment\n"), doctest::Contains("no degree declared"),
                       input_error);
  CHECK_THROWS_AS(parse_group_file("/nonexistent/file.grp"), input_error);
}

TEST_CASE("every corpus group survives a serialize and reparse round trip") {
  for (const auto& e : corpus::entries()) {
    const TempFile f(serialize(to_group_file(e.group, e.name)));
    const auto back = parse_group_file(f.path.string());
    CHECK(back.degree() == e.group.degree());
    CHECK(equal_groups(back, e.group));
  }
}

TEST_CASE("serialization is stable") {
  const auto g = corpus::from_cycles(3, {"(1 2)", "(1 2 3)"});
  CHECK(serialize(to_group_file(g, "s3")) == "degree 3\nname s3\ngen (1 2)\ngen (1 2 3)\n");
  CHECK(serialize(to_group_file(PermGroup::trivial(2))) == "degree 2\n");
}

TEST_CASE("summaries carry degree, order and primes") {
  const auto s = summarize(corpus::symmetric(4));
  CHECK(s.degree == 4);
  CHECK(s.order == "24");
  CHECK(s.primes == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("text reports stay terse and stable") {
  Report r;
  r.command = "check nilpotent";
  r.group = summarize(corpus::symmetric(3));
  r.verdict = false;
  r.witness = Witness{"cross-commutator", "details here", {2}, {3}, {}};
  CHECK(emit_report(r, false) ==
        "verdict: false\nwitness: cross-commutator: details here\n");

  Report l;
  l.command = "least nilpotent";
  l.group = summarize(corpus::symmetric(3));
  l.least = "2,3";
  CHECK(emit_report(l, false) == "least partition: 2,3\n");
}

TEST_CASE("json reports parse and keep field order") {
  Report r;
  r.command = "check soluble";
  r.group = summarize(corpus::symmetric(4));
  r.normal = summarize(corpus::from_cycles(4, {"(1 2)(3 4)", "(1 3)(2 4)"}));
  r.sigma = "2|3";
  r.verdict = true;
  r.millis = 7;

  const auto text = emit_report(r, true);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "check soluble");
  CHECK(j["group"]["degree"] == 4);
  CHECK(j["group"]["order"] == "24");
  CHECK(j["group"]["primes"] == nlohmann::json({2, 3}));
  CHECK(j["normal"]["order"] == "4");
  CHECK(j["sigma"] == "2|3");
  CHECK(j["verdict"] == true);
  CHECK(j["millis"] == 7);
  CHECK_FALSE(j.contains("subgroup"));
  CHECK_FALSE(j.contains("witness"));
  CHECK(text.substr(0, 12) == "{\"schema\":1,");
}

TEST_CASE("json witness blocks appear only when populated") {
  Report r;
  r.command = "check nilpotent";
  r.group = summarize(corpus::symmetric(3));
  r.verdict = false;
  r.witness = Witness{"block-primes-escape", "d", {2}, {}, {2, 3}};
  const auto j = nlohmann::json::parse(emit_report(r, true));
  CHECK(j["witness"]["kind"] == "block-primes-escape");
  CHECK(j["witness"]["block_a"] == nlohmann::json({2}));
  CHECK_FALSE(j["witness"].contains("block_b"));
  CHECK(j["witness"]["primes"] == nlohmann::json({2, 3}));
}
