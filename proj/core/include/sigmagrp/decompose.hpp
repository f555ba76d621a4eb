#pragma once

#include <cstdint>
#include <vector>

#include "sigmagrp/partition.hpp"
#include "sigmagrp/perm_group.hpp"
#include "sigmagrp/permutation.hpp"

namespace sigmagrp {

/// Splits s along the blocks of sigma. Entry i is a power of s whose order
/// involves only primes of block i; the entries pairwise commute, multiply to
/// s in any order, and together generate the same cyclic group as s. Blocks
/// sharing no prime with the order of s get the identity.
std::vector<Permutation> decompose_element(const Permutation& s, const Partition& sigma);

/// Generators of a group bucketed by order support: per_block[i] holds
/// components whose orders involve only primes of partition block i, extra
/// holds the components over extra_primes. The union of all buckets
/// generates the original group.
struct SigmaGenerators {
  Partition partition;
  std::vector<std::vector<Permutation>> per_block;
  std::vector<std::uint64_t> extra_primes;
  std::vector<Permutation> extra;

  std::vector<Permutation> all() const;
};

SigmaGenerators decompose_generators(const PermGroup& g, const Partition& sigma,
                                     const std::vector<std::uint64_t>& extra);

}  // namespace sigmagrp
