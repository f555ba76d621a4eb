#include "sigmagrp/decompose.hpp"

#include <algorithm>
#include <string>

#include "sigmagrp/errors.hpp"
#include "sigmagrp/factored.hpp"

namespace sigmagrp {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, next_t = 1;
  __int128 r = static_cast<__int128>(m), next_r = static_cast<__int128>(a % m);
  while (next_r != 0) {
    const __int128 q = r / next_r;
    const __int128 hold_t = t - q * next_t;
    t = next_t;
    next_t = hold_t;
    const __int128 hold_r = r - q * next_r;
    r = next_r;
    next_r = hold_r;
  }
  internal_check(r == 1, "modular inverse needs coprime arguments");
  if (t < 0) t += static_cast<__int128>(m);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

std::vector<Permutation> decompose_element(const Permutation& s, const Partition& sigma) {
  const std::uint64_t m = element_order(s);
  std::vector<Permutation> out(sigma.size(), Permutation(s.degree()));
  if (m == 1) return out;

  // One exponent per prime power p^a of m, congruent to 1 mod p^a and to 0
  // mod the rest of m; summing them over a block gives the exponent whose
  // power of s is the block component.
  std::vector<std::uint64_t> block_exp(sigma.size(), 0);
  const Factored fm = Factored::from_u64(m);
  for (const auto& [p, e] : fm.factors()) {
    const int bi = sigma.block_of(p);
    if (bi < 0) {
      throw input_error("element order has a prime outside the partition: " + std::to_string(p));
    }
    std::uint64_t pa = 1;
    for (unsigned i = 0; i < e; ++i) pa *= p;
    const std::uint64_t rest = m / pa;
    const std::uint64_t ep = mulmod_u64(rest % m, invmod_u64(rest % pa, pa), m);
    const auto slot = static_cast<std::size_t>(bi);
    block_exp[slot] = (block_exp[slot] + ep) % m;
  }
  for (std::size_t i = 0; i < block_exp.size(); ++i) {
    if (block_exp[i] != 0) out[i] = power(s, static_cast<std::int64_t>(block_exp[i]));
  }
  return out;
}

std::vector<Permutation> SigmaGenerators::all() const {
  std::vector<Permutation> out;
  for (const auto& bucket : per_block) out.insert(out.end(), bucket.begin(), bucket.end());
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

SigmaGenerators decompose_generators(const PermGroup& g, const Partition& sigma,
                                     const std::vector<std::uint64_t>& extra) {
  std::vector<std::uint64_t> ex = extra;
  std::sort(ex.begin(), ex.end());
  ex.erase(std::unique(ex.begin(), ex.end()), ex.end());
  for (std::uint64_t p : ex) {
    if (sigma.contains(p)) {
      throw input_error("extra primes must lie outside the partition: " + std::to_string(p));
    }
  }
  for (std::uint64_t p : g.prime_set()) {
    if (!sigma.contains(p) && !std::binary_search(ex.begin(), ex.end(), p)) {
      throw input_error("group order has an uncovered prime: " + std::to_string(p));
    }
  }

  Partition work = sigma;
  if (!ex.empty()) {
    auto blocks = sigma.blocks();
    blocks.push_back(ex);
    work = Partition(std::move(blocks));
  }

  SigmaGenerators out;
  out.partition = sigma;
  out.per_block.assign(sigma.size(), {});
  out.extra_primes = ex;
  std::size_t count = 0;
  for (const auto& s : g.generators()) {
    auto comps = decompose_element(s, work);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (comps[i].is_identity()) continue;
      ++count;
      const int bi = sigma.block_of(work.blocks()[i].front());
      if (bi >= 0) {
        out.per_block[static_cast<std::size_t>(bi)].push_back(std::move(comps[i]));
      } else {
        out.extra.push_back(std::move(comps[i]));
      }
    }
  }
  const auto n = static_cast<std::size_t>(g.degree());
  internal_check(count <= n * n * n, "component count exceeded the cubic bound");
  return out;
}

}  // namespace sigmagrp
