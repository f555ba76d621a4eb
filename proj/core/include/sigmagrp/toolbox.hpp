#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sigmagrp/config.hpp"
#include "sigmagrp/factored.hpp"
#include "sigmagrp/perm_group.hpp"
#include "sigmagrp/section.hpp"

namespace sigmagrp {

/// Group generated by both generator lists.
PermGroup join(const PermGroup& h, const PermGroup& k);

/// Smallest subgroup of g containing t and closed under conjugation by g.
PermGroup normal_closure(const PermGroup& g, const PermGroup& t);

/// Normal closure, inside join(h, k), of all commutators of an h-generator
/// with a k-generator.
PermGroup commutator_subgroup(const PermGroup& h, const PermGroup& k);

/// H ∩ K for subgroups of g with k normal in g. Exact; enumerates the
/// smaller side, so it needs min(|H|, |K|) within cfg.max_enum.
PermGroup intersect_with_normal(const PermGroup& h, const PermGroup& k, const PermGroup& g,
                                const Config& cfg = {});

/// Largest normal subgroup of g inside h: the kernel of the action of g on
/// the cosets of h. Needs the index |g : h| within cfg.max_index.
PermGroup core(const PermGroup& g, const PermGroup& h, const Config& cfg = {});

/// A Sylow p-subgroup of g (the trivial group when p does not divide |g|).
/// Exact enumeration within cfg.max_enum; above that a randomized climb with
/// bounded retries that either reaches the full p-part or throws.
PermGroup sylow(const PermGroup& g, std::uint64_t p, const Config& cfg = {});

/// Smallest normal subgroup of g whose index is divisible only by primes in
/// pi: the normal closure of Sylow q-subgroups for every other prime q.
PermGroup o_upper_pi(const PermGroup& g, const std::vector<std::uint64_t>& pi,
                     const Config& cfg = {});

/// Ascending normal series small = groups[0] < ... < groups.back() = big
/// with every quotient of consecutive terms minimal normal in big over the
/// previous term.
struct ChiefSeries {
  std::vector<PermGroup> groups;
  std::vector<Factored> factor_orders;
  std::vector<std::vector<std::uint64_t>> factor_prime_sets;
};

ChiefSeries chief_series(const Section& s, const Config& cfg = {});

/// |big| / |small|, exact.
Factored section_order(const Section& s);
/// Primes dividing |big| / |small|.
std::vector<std::uint64_t> section_primes(const Section& s);

/// Memoizes Sylow subgroups of one fixed group, so repeated o_upper
/// computations for different prime sets share the expensive part.
class SylowCache {
public:
  explicit SylowCache(const PermGroup& g, const Config& cfg = {});

  const PermGroup& get(std::uint64_t p);
  /// o_upper_pi(g, pi) built from cached Sylow subgroups.
  PermGroup o_upper(const std::vector<std::uint64_t>& pi);

private:
  const PermGroup& g_;
  Config cfg_;
  std::map<std::uint64_t, PermGroup> memo_;
};

}  // namespace sigmagrp
