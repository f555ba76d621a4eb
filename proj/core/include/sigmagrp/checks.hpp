#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigmagrp/config.hpp"
#include "sigmagrp/partition.hpp"
#include "sigmagrp/perm_group.hpp"
#include "sigmagrp/section.hpp"

namespace sigmagrp {

/// Structured reason for a false verdict.
struct Witness {
  std::string kind;
  std::string detail;
  std::vector<std::uint64_t> block_a;
  std::vector<std::uint64_t> block_b;
  std::vector<std::uint64_t> primes;
};

struct CheckReport {
  bool verdict = false;
  std::optional<Witness> witness;  // present exactly when verdict is false
};

/// Whether big/small splits as a direct-style product of its blockwise Hall
/// subgroups: each block's generator components stay inside their block's
/// primes modulo small, and components of different blocks commute modulo
/// small. The partition must cover exactly the primes of |big|/|small|.
CheckReport is_sigma_nilpotent(const Section& s, const Partition& sigma);

/// Whether every factor of a chief series of big through small has its
/// primes inside a single block.
CheckReport is_sigma_soluble(const Section& s, const Partition& sigma, const Config& cfg = {});

/// Whether h/k can be reached from g/k by a descending chain in which each
/// step is either a normal closure or cuts the index down to one block's
/// primes. Needs k <= h <= g with k normal in g and sigma covering pi(g).
CheckReport is_sigma_subnormal(const PermGroup& g, const PermGroup& h, const PermGroup& k,
                               const Partition& sigma, const Config& cfg = {});

/// Whether h/k permutes with every blockwise Hall-style subgroup: the normal
/// closure over the core must be sigma-nilpotent, and each block's part of h
/// over the core must be stable under the complementary residual subgroup.
CheckReport is_sigma_p_permutable(const PermGroup& g, const PermGroup& h, const PermGroup& k,
                                  const Partition& sigma, const Config& cfg = {});

/// Permutability with Hall subgroups in the soluble setting, where it
/// coincides with the blockwise test above. Errors out when g/k is not
/// sigma-soluble, because the notion is not defined there.
CheckReport is_sigma_permutable_soluble(const PermGroup& g, const PermGroup& h,
                                        const PermGroup& k, const Partition& sigma,
                                        const Config& cfg = {});

}  // namespace sigmagrp
