#include "sigmagrp/least.hpp"

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <numeric>
#include <utility>

#include "sigmagrp/checks.hpp"
#include "sigmagrp/decompose.hpp"
#include "sigmagrp/errors.hpp"
#include "sigmagrp/toolbox.hpp"

namespace sigmagrp {

namespace {

bool meets(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      return true;
    }
  }
  return false;
}

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

bool stable_under(const PermGroup& t, const PermGroup& w) {
  for (const auto& x : t.generators()) {
    for (const auto& y : w.generators()) {
      if (!t.contains(conjugate(x, y))) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> complement_in(const std::vector<std::uint64_t>& all,
                                         const std::vector<std::uint64_t>& part) {
  std::vector<std::uint64_t> out;
  std::set_difference(all.begin(), all.end(), part.begin(), part.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Partition least_sigma_nilpotent(const Section& s) {
  const PermGroup& g = s.big();
  const PermGroup& k = s.small();
  const std::vector<std::uint64_t> sect = section_primes(s);
  if (sect.empty()) return Partition();

  const std::vector<std::uint64_t> extra = complement_in(g.prime_set(), sect);
  const SigmaGenerators sg = decompose_generators(g, Partition::singletons(sect), extra);
  std::vector<std::vector<std::uint64_t>> blocks = Partition::singletons(sect).blocks();
  std::vector<std::vector<Permutation>> gens = sg.per_block;

  for (std::size_t round = 0;; ++round) {
    internal_check(round <= sect.size(), "block merging did not settle in time");
    const std::size_t m = blocks.size();
    std::vector<std::vector<std::uint64_t>> labels(m);
    for (std::size_t i = 0; i < m; ++i) {
      const PermGroup span(g.degree(), gens[i]);
      labels[i] = join(span, k).order().divided_by(k.order()).primes();
    }

    UnionFind uf(m);
    bool merged = false;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        bool edge = meets(labels[i], blocks[j]) || meets(labels[j], blocks[i]);
        for (std::size_t a = 0; !edge && a < gens[i].size(); ++a) {
          for (std::size_t b = 0; !edge && b < gens[j].size(); ++b) {
            if (!k.contains(commutator(gens[i][a], gens[j][b]))) edge = true;
          }
        }
        if (edge) merged |= uf.unite(i, j);
      }
    }
    if (!merged) break;

    std::vector<std::vector<std::uint64_t>> nb(m);
    std::vector<std::vector<Permutation>> ng(m);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t r = uf.find(i);
      nb[r].insert(nb[r].end(), blocks[i].begin(), blocks[i].end());
      ng[r].insert(ng[r].end(), gens[i].begin(), gens[i].end());
    }
    blocks.clear();
    gens.clear();
    for (std::size_t r = 0; r < m; ++r) {
      if (nb[r].empty()) continue;
      std::sort(nb[r].begin(), nb[r].end());
      blocks.push_back(std::move(nb[r]));
      gens.push_back(std::move(ng[r]));
    }
  }

  Partition out(std::move(blocks));
  internal_check(is_sigma_nilpotent(s, out).verdict,
                 "nilpotency least partition failed its own check");
  return out;
}

Partition least_sigma_soluble(const Section& s, const Config& cfg) {
  const std::vector<std::uint64_t> sect = section_primes(s);
  if (sect.empty()) return Partition();
  const ChiefSeries cs = chief_series(s, cfg);

  UnionFind uf(sect.size());
  auto index_of = [&](std::uint64_t p) {
    return static_cast<std::size_t>(
        std::lower_bound(sect.begin(), sect.end(), p) - sect.begin());
  };
  for (const auto& ps : cs.factor_prime_sets) {
    for (std::size_t i = 1; i < ps.size(); ++i) uf.unite(index_of(ps[0]), index_of(ps[i]));
  }

  std::vector<std::vector<std::uint64_t>> blocks(sect.size());
  for (std::size_t i = 0; i < sect.size(); ++i) blocks[uf.find(i)].push_back(sect[i]);
  std::erase_if(blocks, [](const auto& b) { return b.empty(); });

  Partition out(std::move(blocks));
  internal_check(is_sigma_soluble(s, out, cfg).verdict,
                 "solubility least partition failed its own check");
  return out;
}

Partition least_sigma_p_permutable(const PermGroup& g, const PermGroup& h, const PermGroup& k,
                                   const Config& cfg) {
  if (!is_subgroup(h, g)) throw input_error("h must be a subgroup of g");
  if (!is_subgroup(k, h)) throw input_error("k must be a subgroup of h");
  if (!is_normal_in(k, g)) throw input_error("k must be normal in g");

  const PermGroup below = core(g, h, cfg);
  const PermGroup above = normal_closure(g, h);
  const Section span(above, below);
  const std::vector<std::uint64_t> ghg = g.order().divided_by(below.order()).primes();

  const Partition start = extend_by_singletons(least_sigma_nilpotent(span), ghg);
  Partition sigma = start;

  if (sigma.size() > 1) {
    SylowCache sylows(g, cfg);
    const std::vector<std::uint64_t> gall = g.prime_set();
    for (std::size_t round = 0;; ++round) {
      internal_check(round <= ghg.size(), "block merging did not settle in time");
      const auto& blocks = sigma.blocks();
      const std::size_t m = blocks.size();

      std::vector<std::uint64_t> buried;
      for (std::uint64_t q : h.prime_set()) {
        if (!sigma.contains(q)) buried.push_back(q);
      }
      const SigmaGenerators sg = decompose_generators(h, sigma, buried);
      std::vector<PermGroup> pieces;
      std::vector<PermGroup> residuals;
      pieces.reserve(m);
      residuals.reserve(m);
      for (std::size_t i = 0; i < m; ++i) {
        pieces.push_back(join(PermGroup(g.degree(), sg.per_block[i]), below));
        residuals.push_back(sylows.o_upper(complement_in(gall, blocks[i])));
      }

      UnionFind uf(m);
      bool merged = false;
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
          if (!stable_under(pieces[a], residuals[b]) || !stable_under(pieces[b], residuals[a])) {
            merged |= uf.unite(a, b);
          }
        }
      }
      if (!merged) break;

      std::vector<std::vector<std::uint64_t>> nb(m);
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t r = uf.find(i);
        nb[r].insert(nb[r].end(), blocks[i].begin(), blocks[i].end());
      }
      std::erase_if(nb, [](const auto& b) { return b.empty(); });
      sigma = Partition(std::move(nb));
      if (sigma.size() == 1) break;
    }
  }

  const std::vector<std::uint64_t> gk = g.order().divided_by(k.order()).primes();
  const Partition out = extend_by_singletons(sigma, gk);

  internal_check(leq(start, restrict_to(out, ghg)),
                 "permutability answer dropped below its nilpotency floor");
  internal_check(
      is_sigma_p_permutable(g, h, k, extend_by_singletons(out, g.prime_set()), cfg).verdict,
      "permutability least partition failed its own check");
  return out;
}

bool verify_least(const Partition& result,
                  const std::function<bool(const Partition&)>& property_holds) {
  const std::vector<std::uint64_t> ground = result.ground();
  if (ground.size() > 4) {
    throw cap_error("least-partition certification handles at most four primes");
  }
  if (!property_holds(result)) return false;

  bool seen = false;
  Partition acc;
  for (const Partition& tau : all_partitions(ground)) {
    if (!property_holds(tau)) continue;
    acc = seen ? meet(acc, tau) : tau;
    seen = true;
  }
  return seen && acc == result;
}

}  // namespace sigmagrp
