#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "sigmagrp/errors.hpp"
#include "sigmagrp/perm_group.hpp"
#include "sigmagrp/permutation.hpp"
#include "sigmagrp/section.hpp"
#include "sigmagrp/toolbox.hpp"
#include "support/corpus.hpp"

using namespace sigmagrp;

namespace {

const PermGroup s4 = corpus::symmetric(4);
const PermGroup a4 = corpus::from_cycles(4, {"(1 2 3)", "(2 3 4)"});
const PermGroup v4 = corpus::from_cycles(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
const PermGroup d8 = corpus::from_cycles(4, {"(1 2 3 4)", "(1 3)"});

}  // namespace

TEST_CASE("join of a rotation and a transposition") {
  const auto a3 = corpus::from_cycles(3, {"(1 2 3)"});
  const auto c2 = corpus::from_cycles(3, {"(1 2)"});
  CHECK(equal_groups(join(a3, c2), corpus::symmetric(3)));
  CHECK(join(a3, PermGroup::trivial(3)).order_u64() == 3);
}

TEST_CASE("normal closures in the symmetric group") {
  CHECK(equal_groups(normal_closure(s4, corpus::from_cycles(4, {"(1 2)"})), s4));
  CHECK(equal_groups(normal_closure(s4, corpus::from_cycles(4, {"(1 2)(3 4)"})), v4));
  CHECK(equal_groups(normal_closure(s4, corpus::from_cycles(4, {"(1 2 3)"})), a4));
  CHECK(equal_groups(normal_closure(s4, v4), v4));
}

TEST_CASE("derived subgroups") {
  CHECK(equal_groups(commutator_subgroup(s4, s4), a4));
  CHECK(equal_groups(commutator_subgroup(a4, a4), v4));
  CHECK(commutator_subgroup(v4, v4).is_trivial());
}

TEST_CASE("intersection with a normal subgroup") {
  CHECK(equal_groups(intersect_with_normal(d8, a4, s4), v4));
  CHECK(intersect_with_normal(corpus::from_cycles(4, {"(1 2)"}), a4, s4).is_trivial());
}

TEST_CASE("core of the dihedral subgroup is the Klein subgroup") {
  CHECK(equal_groups(core(s4, d8), v4));
  CHECK(core(s4, corpus::from_cycles(4, {"(1 2)", "(1 2 3)"})).is_trivial());
  CHECK(equal_groups(core(s4, a4), a4));
}

TEST_CASE("sylow subgroups have the right orders") {
  CHECK(sylow(s4, 2).order_u64() == 8);
  CHECK(sylow(s4, 3).order_u64() == 3);
  CHECK(sylow(s4, 5).is_trivial());
  const auto s6 = corpus::symmetric(6);
  CHECK(sylow(s6, 2).order_u64() == 16);
  CHECK(sylow(s6, 3).order_u64() == 9);
  CHECK(sylow(s6, 5).order_u64() == 5);
}

TEST_CASE("smallest normal subgroup with restricted index primes") {
  CHECK(equal_groups(o_upper_pi(s4, {2}), a4));
  CHECK(equal_groups(o_upper_pi(s4, {3}), s4));
  CHECK(equal_groups(o_upper_pi(s4, {2, 3}), PermGroup::trivial(4)));
  const auto c30 = corpus::from_cycles(10, {"(1 2)(3 4 5)(6 7 8 9 10)"});
  CHECK(o_upper_pi(c30, {2, 3}).order_u64() == 5);
  CHECK(o_upper_pi(c30, {5}).order_u64() == 6);
}

TEST_CASE("chief series of the symmetric group on four points") {
  const auto cs = chief_series(Section(s4, PermGroup::trivial(4)));
  REQUIRE(cs.groups.size() == 4);
  std::vector<std::uint64_t> sizes;
  for (const auto& f : cs.factor_orders) sizes.push_back(f.to_u64());
  CHECK(sizes == std::vector<std::uint64_t>{4, 3, 2});
  CHECK(cs.factor_prime_sets[0] == std::vector<std::uint64_t>{2});
  CHECK(cs.factor_prime_sets[1] == std::vector<std::uint64_t>{3});
  CHECK(equal_groups(cs.groups[1], v4));
  CHECK(equal_groups(cs.groups[2], a4));
}

TEST_CASE("chief series of a simple group is one step") {
  const auto a5 = corpus::from_cycles(5, {"(1 2 3)", "(1 2 3 4 5)"});
  const auto cs = chief_series(Section(a5, PermGroup::trivial(5)));
  REQUIRE(cs.factor_orders.size() == 1);
  CHECK(cs.factor_orders[0].to_u64() == 60);
  CHECK(cs.factor_prime_sets[0] == std::vector<std::uint64_t>{2, 3, 5});
}

TEST_CASE("chief series respects the floor of the section") {
  const auto cs = chief_series(Section(s4, v4));
  REQUIRE(cs.groups.size() == 3);
  CHECK(equal_groups(cs.groups.front(), v4));
  CHECK(equal_groups(cs.groups.back(), s4));
  std::vector<std::uint64_t> sizes;
  for (const auto& f : cs.factor_orders) sizes.push_back(f.to_u64());
  CHECK(sizes == std::vector<std::uint64_t>{3, 2});
}

TEST_CASE("section order helpers") {
  const Section s(s4, v4);
  CHECK(section_order(s).to_u64() == 6);
  CHECK(section_primes(s) == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("section construction rejects non-normal floors") {
  CHECK_THROWS_AS(Section(s4, d8), input_error);
  CHECK_THROWS_AS(Section(a4, corpus::from_cycles(4, {"(1 2)"})), input_error);
}

TEST_CASE("sylow cache agrees with direct computation") {
  SylowCache cache(s4);
  CHECK(cache.get(2).order_u64() == 8);
  CHECK(cache.get(3).order_u64() == 3);
  CHECK(equal_groups(cache.o_upper({2}), a4));
  CHECK(equal_groups(cache.o_upper({2, 3}), PermGroup::trivial(4)));
}
