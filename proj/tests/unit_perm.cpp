#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "sigmagrp/errors.hpp"
#include "sigmagrp/factored.hpp"
#include "sigmagrp/permutation.hpp"

using namespace sigmagrp;

TEST_CASE("compose applies the left factor first") {
  const auto a = parse_cycles("(1 2)", 3);
  const auto b = parse_cycles("(2 3)", 3);
  const auto ab = compose(a, b);
  for (int i = 0; i < 3; ++i) CHECK(ab.apply(i) == b.apply(a.apply(i)));
  CHECK(format_cycles(ab) == "(1 3 2)");
  CHECK(format_cycles(compose(b, a)) == "(1 2 3)");
}

TEST_CASE("inverse and power") {
  const auto c = parse_cycles("(1 2 3 4 5)", 5);
  CHECK(compose(c, inverse(c)).is_identity());
  CHECK(power(c, 5).is_identity());
  CHECK(power(c, -2) == power(c, 3));
  CHECK(power(c, 0).is_identity());
  CHECK(power(c, 7) == compose(c, c));
}

TEST_CASE("conjugate and commutator follow the right-action convention") {
  const auto h = parse_cycles("(1 2)", 4);
  const auto g = parse_cycles("(1 3)(2 4)", 4);
  CHECK(conjugate(h, g) == compose(compose(inverse(g), h), g));
  CHECK(format_cycles(conjugate(h, g)) == "(3 4)");
  const auto a = parse_cycles("(1 2 3)", 4);
  CHECK(commutator(a, g) == compose(compose(inverse(a), inverse(g)), compose(a, g)));
  CHECK(commutator(a, a).is_identity());
}

TEST_CASE("element order is the lcm of cycle lengths") {
  CHECK(element_order(Permutation(6)) == 1);
  CHECK(element_order(parse_cycles("(1 2)(3 4 5)", 5)) == 6);
  CHECK(element_order(parse_cycles("(1 2 3 4)(5 6 7 8 9 10)", 10)) == 12);
}

TEST_CASE("cycle text round-trips") {
  const std::string text = "(1 3)(2 5 4)";
  const auto p = parse_cycles(text, 6);
  CHECK(format_cycles(p) == text);
  CHECK(parse_cycles(format_cycles(p), 6) == p);
  CHECK(format_cycles(Permutation(4)) == "()");
  CHECK(parse_cycles("()", 3).is_identity());
  CHECK(parse_cycles("", 3).is_identity());
}

TEST_CASE("cycle parsing rejects bad input") {
  CHECK_THROWS_AS(parse_cycles("(1 4)", 3), input_error);
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3), input_error);
  CHECK_THROWS_AS(parse_cycles("(1 1)", 3), input_error);
  CHECK_THROWS_AS(parse_cycles("(0 1)", 3), input_error);
  CHECK_THROWS_AS(parse_cycles("(1 2", 3), input_error);
  CHECK_THROWS_AS(parse_cycles("xyz", 3), input_error);
}

TEST_CASE("from_images rejects non-bijections") {
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), input_error);
  CHECK(Permutation::from_images({1, 0, 2}) == parse_cycles("(1 2)", 3));
}

TEST_CASE("embed fixes the new points") {
  const auto p = parse_cycles("(1 2 3)", 3);
  const auto q = embed(p, 6);
  CHECK(q.degree() == 6);
  for (int i = 3; i < 6; ++i) CHECK(q.apply(i) == i);
  CHECK(format_cycles(q) == "(1 2 3)");
}

TEST_CASE("factored arithmetic") {
  const auto n = Factored::from_u64(360);
  CHECK(n.to_u64() == 360);
  CHECK(n.primes() == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(n.part({2}).to_u64() == 8);
  CHECK(n.part({2, 5}).to_u64() == 40);
  CHECK(n.divided_by(Factored::from_u64(45)).to_u64() == 8);
  CHECK(n.to_decimal() == "360");
  CHECK(Factored::from_u64(1).is_one());
  CHECK_THROWS_AS(Factored::from_u64(0), input_error);
}

TEST_CASE("factored values past 64 bits still print and compare") {
  const auto big = Factored::from_prime_power(2, 70);
  CHECK_FALSE(big.fits_u64());
  CHECK(big.to_decimal() == "1180591620717411303424");
  CHECK(big.compare(Factored::from_prime_power(2, 69)) > 0);
  CHECK(big.compare(big.times(Factored::from_u64(3))) < 0);
}

TEST_CASE("factored lcm") {
  const auto l = factored_lcm(Factored::from_u64(12), Factored::from_u64(18));
  CHECK(l.to_u64() == 36);
}

TEST_CASE("primality spot checks") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(97));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(91));
}
