#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sigmagrp {

/// A partition of a finite set of primes into disjoint nonempty blocks.
/// Canonical form (primes ascending within a block, blocks ordered by least
/// prime) makes this a value type: equal partitions compare equal and the
/// ordering is usable for map keys. The empty partition (no primes) is valid.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<std::vector<std::uint64_t>> blocks);

  /// Grammar: `block ("|" block)*` with `block := prime ("," prime)*`, e.g.
  /// "2,3|5". The parsed blocks must cover exactly the given prime set.
  static Partition parse(const std::string& text, const std::vector<std::uint64_t>& ground);

  static Partition singletons(const std::vector<std::uint64_t>& primes);
  static Partition single_block(const std::vector<std::uint64_t>& primes);

  const std::vector<std::vector<std::uint64_t>>& blocks() const { return blocks_; }
  std::vector<std::uint64_t> ground() const;
  std::size_t size() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }

  /// Index of the block holding p, or -1 when p is not in the ground set.
  int block_of(std::uint64_t p) const;
  bool contains(std::uint64_t p) const { return block_of(p) >= 0; }
  bool same_block(std::uint64_t p, std::uint64_t q) const;

  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

private:
  std::vector<std::vector<std::uint64_t>> blocks_;
};

/// Blockwise intersection, the greatest lower bound of the refinement order.
Partition meet(const Partition& a, const Partition& b);

/// Refinement test: every block of a lies inside a single block of b.
bool leq(const Partition& a, const Partition& b);

/// Partition induced on a subset of the ground primes.
Partition restrict_to(const Partition& sigma, const std::vector<std::uint64_t>& primes);

/// Adds every listed prime that is missing from the ground set as its own
/// singleton block.
Partition extend_by_singletons(const Partition& sigma, const std::vector<std::uint64_t>& primes);

/// Every partition of the given primes (Bell-number many), deterministic
/// order. Meant for exhaustive search over small prime sets.
std::vector<Partition> all_partitions(const std::vector<std::uint64_t>& primes);

}  // namespace sigmagrp
