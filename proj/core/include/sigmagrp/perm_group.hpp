#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "sigmagrp/factored.hpp"
#include "sigmagrp/permutation.hpp"

namespace sigmagrp {

/// One level of a stabilizer chain: a base point, the strong generators first
/// stored at this level (they fix every earlier base point), and the orbit of
/// the base point with explicit transversal elements.
struct ChainLevel {
  int base_point = 0;
  std::vector<Permutation> gens;      // generators first stalled here
  std::vector<int> orbit;             // BFS order; orbit[0] == base_point
  std::vector<int> slot;              // slot[pt] = index into orbit, or -1
  std::vector<Permutation> transversal;  // parallel to orbit; u maps base_point to orbit[k]
  std::vector<std::vector<int>> transversal_inv;  // image tables of the inverses
};

/// Deterministic Schreier-Sims chain. Base points are chosen as the least
/// moved point each time the base must grow, so identical generator lists
/// always produce identical chains. Construction verifies that every Schreier
/// generator sifts to the identity, which is exactly the chain condition.
class StabilizerChain {
public:
  StabilizerChain(int degree, const std::vector<Permutation>& gens);

  int degree() const { return degree_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }

  Factored order() const;

  /// Strip `p` through levels [start, end); returns the residue and the level
  /// index where sifting stopped (levels().size() means it ran through).
  std::pair<Permutation, std::size_t> sift_from(Permutation p, std::size_t start) const;
  bool contains(const Permutation& p) const;

  std::vector<Permutation> strong_generators() const;

  /// Depth-first product of transversal elements; throws cap_error when the
  /// order exceeds `cap`.
  std::vector<Permutation> elements(std::uint64_t cap) const;

  /// Uniformly random element (independent uniform transversal picks).
  Permutation random_element(std::mt19937_64& rng) const;

private:
  void recompute_orbit(std::size_t level);
  // effective generator set of a level: everything stored at this level or deeper
  std::vector<const Permutation*> effective_gens(std::size_t level) const;

  int degree_;
  std::vector<ChainLevel> levels_;
};

/// A permutation group given by generators, with a lazily built chain.
/// Value semantics; the cached chain is shared between copies.
class PermGroup {
public:
  PermGroup(int degree, std::vector<Permutation> gens);
  static PermGroup trivial(int degree) { return PermGroup(degree, {}); }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  const StabilizerChain& chain() const;

  Factored order() const { return chain().order(); }
  std::uint64_t order_u64() const { return order().to_u64(); }
  /// Primes dividing the order.
  std::vector<std::uint64_t> prime_set() const { return order().primes(); }
  bool is_trivial() const { return order().is_one(); }

  bool contains(const Permutation& p) const;
  std::vector<Permutation> elements(std::uint64_t cap) const { return chain().elements(cap); }
  Permutation random_element(std::mt19937_64& rng) const { return chain().random_element(rng); }

private:
  int degree_;
  std::vector<Permutation> gens_;
  mutable std::shared_ptr<const StabilizerChain> chain_;
};

bool is_subgroup(const PermGroup& h, const PermGroup& g);
bool equal_groups(const PermGroup& a, const PermGroup& b);

/// Group generated by a subset of the listed elements: scans in order and
/// keeps only elements not already generated, so the generator list stays
/// short even when `elems` is a full enumeration.
PermGroup group_from_elements(int degree, const std::vector<Permutation>& elems);

}  // namespace sigmagrp
