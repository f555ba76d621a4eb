#pragma once

#include <cstdint>

namespace sigmagrp {

/// Size caps and sampling knobs for the exact-but-bounded subgroup machinery.
/// Everything is deterministic given a fixed seed.
struct Config {
  /// Largest coset count for coset tables (subgroup core, exact chief-series scan).
  std::uint64_t max_index = 1'000'000;

  /// Largest group order for element-enumeration paths (intersection with a
  /// normal subgroup, exact Sylow ascent, exact minimal-normal scan).
  std::uint64_t max_enum = 100'000;

  /// Sampled candidates per chief-series step above the exact threshold.
  std::uint64_t chief_samples = 10'000;
  /// Fresh elements drawn per re-check round of a sampled chief factor.
  std::uint64_t chief_recheck = 100;
  /// Re-check rounds before giving up on a stabilizing factor.
  std::uint64_t chief_recheck_rounds = 20;

  /// Candidate draws before the randomized Sylow ascent reports failure.
  std::uint64_t sylow_retries = 2'000;

  /// Largest group order for subgroup-lattice oracles.
  std::uint64_t lattice_cap = 200;
  /// Largest group order for multiplication-table oracles.
  std::uint64_t oracle_enum_cap = 2'000;

  /// Seed for every randomized path; fixed so runs reproduce.
  std::uint64_t seed = 0x5157ULL;
};

}  // namespace sigmagrp
