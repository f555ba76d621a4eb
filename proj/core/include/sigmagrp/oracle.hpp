#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sigmagrp/partition.hpp"
#include "sigmagrp/perm_group.hpp"
#include "sigmagrp/section.hpp"

namespace sigmagrp {

/// Full subgroup lattice of a small group, as plain element sets. The list is
/// ordered by size and then lexicographically, so the first entry is the
/// trivial subgroup and the last is the whole group.
struct SubgroupLattice {
  std::vector<std::vector<Permutation>> subgroups;
  std::vector<std::vector<bool>> includes;   // includes[i][j]: subgroups[i] <= subgroups[j]
  std::vector<std::vector<bool>> normal_in;  // normal_in[i][j]: includes[i][j], conjugation-closed
};

/// Exhaustive enumeration: cyclic subgroups closed under pairwise joins.
SubgroupLattice subgroup_lattice(const PermGroup& g, std::uint64_t cap = 200);

/// Lattice plus, for every proper inclusion A < B, the primes of
/// |B| / |core_B(A)|. Precomputing this once per group makes the chain search
/// below cheap to repeat across many subgroups and partitions.
struct SubnormalSearchData {
  SubgroupLattice lattice;
  std::vector<std::vector<std::vector<std::uint64_t>>> step_primes;
};

SubnormalSearchData subnormal_search_data(const PermGroup& g, std::uint64_t cap = 200);

/// All subgroups whose order is the full block-part of |g|.
std::vector<PermGroup> hall_subgroups(const PermGroup& g, const std::vector<std::uint64_t>& block,
                                      std::uint64_t cap = 2000);

/// True iff {xy} and {yx} coincide as element sets.
bool set_product_permutes(const PermGroup& a, const PermGroup& b, std::uint64_t cap = 2000);

// Definitional certifiers for tiny instances. They enumerate coset labels and
// scan subgroup lattices; none of them calls the production decision
// procedures, so agreement with those is meaningful evidence.

/// A normal subgroup of full block-order exists in the section, per block.
bool sigma_nilpotent_oracle(const Section& s, const Partition& sigma, std::uint64_t cap = 200);

/// Every factor of a chief series of the section has its primes in one block.
bool sigma_soluble_oracle(const Section& s, const Partition& sigma, std::uint64_t cap = 200);

/// Chain search over the whole lattice: a chain from h to the top exists in
/// which every step is normal or has block-primary quotient over the core.
bool sigma_subnormal_oracle(const SubnormalSearchData& data, const PermGroup& h,
                            const Partition& sigma);
bool sigma_subnormal_oracle(const PermGroup& g, const PermGroup& h, const Partition& sigma,
                            std::uint64_t cap = 200);

/// Hall set-product test: h permutes with every conjugate of one Hall
/// block-subgroup, for every block. Requires g sigma-soluble so that Hall
/// subgroups exist and form one conjugacy class per block.
bool sigma_permutable_oracle(const PermGroup& g, const PermGroup& h, const Partition& sigma,
                             std::uint64_t cap = 2000);

/// Meet of all partitions of the given primes satisfying the predicate. The
/// one-block partition must satisfy it, and so must the meet; at most four
/// primes.
Partition least_partition_oracle(const std::vector<std::uint64_t>& primes,
                                 const std::function<bool(const Partition&)>& predicate);

}  // namespace sigmagrp
