#pragma once

#include <functional>

#include "sigmagrp/config.hpp"
#include "sigmagrp/partition.hpp"
#include "sigmagrp/perm_group.hpp"
#include "sigmagrp/section.hpp"

namespace sigmagrp {

/// Finest partition of the section's primes under which the section is
/// sigma-nilpotent. Singleton blocks are merged until no block pair is linked
/// by a non-central commutator or by prime leakage between blocks.
Partition least_sigma_nilpotent(const Section& s);

/// Finest partition of the section's primes under which the section is
/// sigma-soluble: connected components of the chief factor prime sets under
/// overlap.
Partition least_sigma_soluble(const Section& s, const Config& cfg = {});

/// Finest partition of the primes of g/k under which h/k is
/// sigma-p-permutable in g/k. Starts from the nilpotency answer for the
/// normal closure over the core and merges blocks whose Hall pieces are not
/// conjugation-stable against each other's complementary residuals.
Partition least_sigma_p_permutable(const PermGroup& g, const PermGroup& h, const PermGroup& k,
                                   const Config& cfg = {});

/// Exhaustive certificate for a claimed least partition: true iff the
/// property holds at `result` and `result` equals the meet of every partition
/// of its ground set where the property holds. The ground set must stay
/// enumerable (at most four primes).
bool verify_least(const Partition& result,
                  const std::function<bool(const Partition&)>& property_holds);

}  // namespace sigmagrp
