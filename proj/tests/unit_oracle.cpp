#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sigmagrp/errors.hpp"
#include "sigmagrp/oracle.hpp"
#include "sigmagrp/partition.hpp"
#include "sigmagrp/perm_group.hpp"
#include "sigmagrp/section.hpp"
#include "support/corpus.hpp"

using namespace sigmagrp;

namespace {

const PermGroup s3 = corpus::symmetric(3);
const PermGroup s4 = corpus::symmetric(4);
const PermGroup a4 = corpus::from_cycles(4, {"(1 2 3)", "(2 3 4)"});

Section whole(const PermGroup& g) { return Section(g, PermGroup::trivial(g.degree())); }

int find_subgroup(const SubgroupLattice& lat, const PermGroup& h) {
  auto members = h.elements(1000);
  std::sort(members.begin(), members.end());
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
    if (lat.subgroups[i] == members) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

TEST_CASE("subgroup lattices have the textbook sizes") {
  CHECK(subgroup_lattice(s3).subgroups.size() == 6);
  CHECK(subgroup_lattice(s4).subgroups.size() == 30);
  CHECK(subgroup_lattice(a4).subgroups.size() == 10);
  CHECK(subgroup_lattice(corpus::from_cycles(5, {"(1 2)(3 4 5)"})).subgroups.size() == 4);
  CHECK(subgroup_lattice(corpus::from_cycles(4, {"(1 2)(3 4)", "(1 3)(2 4)"})).subgroups.size() ==
        5);
}

TEST_CASE("lattice inclusion and normality flags") {
  const auto lat = subgroup_lattice(s4);
  const int whole_idx = static_cast<int>(lat.subgroups.size()) - 1;
  CHECK(lat.subgroups.front().size() == 1);
  CHECK(lat.subgroups.back().size() == 24);

  const int v4 = find_subgroup(lat, corpus::from_cycles(4, {"(1 2)(3 4)", "(1 3)(2 4)"}));
  const int d8 = find_subgroup(lat, corpus::from_cycles(4, {"(1 2 3 4)", "(1 3)"}));
  const int c2 = find_subgroup(lat, corpus::from_cycles(4, {"(1 2)"}));
  REQUIRE(v4 >= 0);
  REQUIRE(d8 >= 0);
  REQUIRE(c2 >= 0);
  CHECK(lat.includes[v4][d8]);
  CHECK_FALSE(lat.includes[d8][v4]);
  CHECK(lat.normal_in[v4][whole_idx]);
  CHECK(lat.normal_in[v4][d8]);
  CHECK_FALSE(lat.normal_in[d8][whole_idx]);
  CHECK_FALSE(lat.normal_in[c2][whole_idx]);
  CHECK(lat.includes[0][c2]);
}

TEST_CASE("lattice enumeration respects the cap") {
  CHECK_THROWS_AS(subgroup_lattice(corpus::symmetric(5), 100), cap_error);
}

TEST_CASE("hall subgroup enumeration") {
  CHECK(hall_subgroups(s4, {2}).size() == 3);
  CHECK(hall_subgroups(s4, {3}).size() == 4);
  for (const auto& p : hall_subgroups(s4, {2})) CHECK(p.order_u64() == 8);

  const auto full = hall_subgroups(s4, {2, 3});
  REQUIRE(full.size() == 1);
  CHECK(equal_groups(full.front(), s4));

  const auto a5 = corpus::from_cycles(5, {"(1 2 3)", "(1 2 3 4 5)"});
  CHECK(hall_subgroups(a5, {2, 5}).empty());

  const auto c30 = corpus::from_cycles(10, {"(1 2)(3 4 5)(6 7 8 9 10)"});
  const auto h10 = hall_subgroups(c30, {2, 5});
  REQUIRE(h10.size() == 1);
  CHECK(h10.front().order_u64() == 10);
}

TEST_CASE("set products detect one-sided factorizations") {
  const auto p = corpus::from_cycles(3, {"(1 2)"});
  const auto q = corpus::from_cycles(3, {"(1 3)"});
  const auto a3 = corpus::from_cycles(3, {"(1 2 3)"});
  CHECK(set_product_permutes(p, a3));
  CHECK(set_product_permutes(a3, p));
  CHECK_FALSE(set_product_permutes(p, q));
  CHECK(set_product_permutes(p, p));
  CHECK_THROWS_AS(set_product_permutes(s4, s4, 100), cap_error);
}

TEST_CASE("nilpotency oracle") {
  const auto c6 = corpus::from_cycles(5, {"(1 2)(3 4 5)"});
  CHECK(sigma_nilpotent_oracle(whole(c6), Partition::parse("2|3", {2, 3})));
  CHECK_FALSE(sigma_nilpotent_oracle(whole(s3), Partition::parse("2|3", {2, 3})));
  CHECK(sigma_nilpotent_oracle(whole(s3), Partition::parse("2,3", {2, 3})));
  const auto d8 = corpus::from_cycles(4, {"(1 2 3 4)", "(1 3)"});
  CHECK(sigma_nilpotent_oracle(Section(d8, corpus::from_cycles(4, {"(1 3)(2 4)"})),
                               Partition::parse("2", {2})));
}

TEST_CASE("solubility oracle") {
  CHECK(sigma_soluble_oracle(whole(s4), Partition::parse("2|3", {2, 3})));
  CHECK(sigma_soluble_oracle(Section(s4, corpus::from_cycles(4, {"(1 2)(3 4)", "(1 3)(2 4)"})),
                             Partition::parse("2|3", {2, 3})));
  const auto a5 = corpus::from_cycles(5, {"(1 2 3)", "(1 2 3 4 5)"});
  CHECK_FALSE(sigma_soluble_oracle(whole(a5), Partition::parse("2|3|5", {2, 3, 5})));
  CHECK_FALSE(sigma_soluble_oracle(whole(a5), Partition::parse("2,3|5", {2, 3, 5})));
  CHECK(sigma_soluble_oracle(whole(a5), Partition::parse("2,3,5", {2, 3, 5})));
}

TEST_CASE("subnormality oracle searches the whole lattice") {
  const auto data = subnormal_search_data(s4);
  const auto sigma = Partition::parse("2|3", {2, 3});
  const auto single = Partition::parse("2,3", {2, 3});

  CHECK(sigma_subnormal_oracle(data, corpus::from_cycles(4, {"(1 2)(3 4)", "(1 3)(2 4)"}), sigma));
  CHECK(sigma_subnormal_oracle(data, a4, sigma));
  CHECK(sigma_subnormal_oracle(data, s4, sigma));
  CHECK_FALSE(sigma_subnormal_oracle(data, corpus::from_cycles(4, {"(1 2 3 4)", "(1 3)"}), sigma));
  CHECK(sigma_subnormal_oracle(data, corpus::from_cycles(4, {"(1 2 3 4)", "(1 3)"}), single));
  CHECK_FALSE(sigma_subnormal_oracle(data, corpus::from_cycles(4, {"(1 2)"}), sigma));
  // single-step convenience overload
  CHECK(sigma_subnormal_oracle(s4, a4, sigma));
}

TEST_CASE("subnormality oracle rejects foreign subgroups") {
  const auto data = subnormal_search_data(a4);
  CHECK_THROWS_AS(sigma_subnormal_oracle(data, corpus::from_cycles(4, {"(1 2)"}),
                                         Partition::parse("2|3", {2, 3})),
                  input_error);
}

TEST_CASE("permutability oracle agrees with hand-checked cases") {
  const auto sigma = Partition::parse("2|3", {2, 3});
  CHECK(sigma_permutable_oracle(s4, corpus::from_cycles(4, {"(1 2)(3 4)", "(1 3)(2 4)"}), sigma));
  CHECK_FALSE(sigma_permutable_oracle(s4, corpus::from_cycles(4, {"(1 2 3 4)", "(1 3)"}), sigma));
  CHECK_FALSE(sigma_permutable_oracle(s3, corpus::from_cycles(3, {"(1 2)"}),
                                      Partition::parse("2|3", {2, 3})));
  CHECK(sigma_permutable_oracle(s3, corpus::from_cycles(3, {"(1 2 3)"}),
                                Partition::parse("2|3", {2, 3})));
}

TEST_CASE("permutability oracle refuses insoluble ground groups") {
  const auto a5 = corpus::from_cycles(5, {"(1 2 3)", "(1 2 3 4 5)"});
  CHECK_THROWS_AS(
      sigma_permutable_oracle(a5, corpus::from_cycles(5, {"(1 2 3)"}),
                              Partition::parse("2|3|5", {2, 3, 5})),
      input_error);
}

TEST_CASE("least partition search over all partitions") {
  const auto everything = [](const Partition&) { return true; };
  CHECK(least_partition_oracle({2, 3}, everything) == Partition::singletons({2, 3}));

  const auto only_single = [](const Partition& t) { return t.size() <= 1; };
  CHECK(least_partition_oracle({2, 3, 5}, only_single) == Partition::single_block({2, 3, 5}));

  const auto never = [](const Partition&) { return false; };
  CHECK_THROWS_AS(least_partition_oracle({2, 3}, never), std::logic_error);
  CHECK_THROWS_AS(least_partition_oracle({2, 3, 5, 7, 11}, everything), cap_error);
}
