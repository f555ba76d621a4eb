#include "sigmagrp/oracle.hpp"

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_map>
#include <utility>

#include "sigmagrp/errors.hpp"
#include "sigmagrp/factored.hpp"

namespace sigmagrp {

namespace {

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Multiplication table over canonical coset representatives. With a trivial
// small subgroup this is just the element table of the group itself.
struct TableGroup {
  std::vector<Permutation> elems;  // sorted; elems[0] is the identity coset
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;

  int size() const { return static_cast<int>(elems.size()); }
};

TableGroup build_model(const PermGroup& g, const PermGroup& k, std::uint64_t index_cap) {
  const Factored index = g.order().divided_by(k.order());
  if (!index.fits_u64() || index.to_u64() > index_cap) {
    throw cap_error("section too large for brute-force enumeration: " + index.to_decimal());
  }
  if (!g.order().fits_u64() || g.order().to_u64() > 1'000'000) {
    throw cap_error("ambient group too large to enumerate: " + g.order().to_decimal());
  }
  const auto gel = g.elements(g.order().to_u64());
  const auto kel = k.elements(k.order().to_u64());

  std::unordered_map<Permutation, int, PermHash> label;
  label.reserve(gel.size());
  std::vector<Permutation> reps;
  for (const auto& x : gel) {
    if (label.contains(x)) continue;
    std::vector<Permutation> coset;
    coset.reserve(kel.size());
    for (const auto& kk : kel) coset.push_back(compose(kk, x));
    const Permutation rep = *std::min_element(coset.begin(), coset.end());
    const int tag = static_cast<int>(reps.size());
    for (auto& c : coset) label.emplace(std::move(c), tag);
    reps.push_back(rep);
  }

  const int n = static_cast<int>(reps.size());
  std::vector<int> by_rep(n);
  std::iota(by_rep.begin(), by_rep.end(), 0);
  std::sort(by_rep.begin(), by_rep.end(), [&](int a, int b) { return reps[a] < reps[b]; });
  std::vector<int> newpos(n);
  for (int i = 0; i < n; ++i) newpos[by_rep[i]] = i;
  for (auto& entry : label) entry.second = newpos[entry.second];

  TableGroup tg;
  tg.elems.reserve(n);
  for (int i = 0; i < n; ++i) tg.elems.push_back(std::move(reps[by_rep[i]]));
  tg.mul.assign(n, std::vector<int>(n));
  tg.inv.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      tg.mul[i][j] = label.at(compose(tg.elems[i], tg.elems[j]));
    }
    tg.inv[i] = label.at(inverse(tg.elems[i]));
  }
  return tg;
}

TableGroup build_model(const PermGroup& g, std::uint64_t cap) {
  return build_model(g, PermGroup::trivial(g.degree()), cap);
}

using Sub = std::vector<int>;  // sorted element indices

bool sub_contains(const Sub& s, int e) { return std::binary_search(s.begin(), s.end(), e); }

Sub close(const TableGroup& tg, const Sub& seed) {
  std::vector<char> in(tg.size(), 0);
  std::vector<int> members;
  std::vector<int> queue;
  auto add = [&](int e) {
    if (!in[e]) {
      in[e] = 1;
      members.push_back(e);
      queue.push_back(e);
    }
  };
  add(0);
  for (int e : seed) add(e);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int a = queue[qi];
    for (std::size_t mi = 0; mi < members.size(); ++mi) {
      const int m = members[mi];
      add(tg.mul[a][m]);
      add(tg.mul[m][a]);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

int conj_index(const TableGroup& tg, int e, int x) {
  return tg.mul[tg.mul[tg.inv[x]][e]][x];
}

bool is_normal_in_whole(const TableGroup& tg, const Sub& s) {
  for (int e : s) {
    for (int x = 0; x < tg.size(); ++x) {
      if (!sub_contains(s, conj_index(tg, e, x))) return false;
    }
  }
  return true;
}

std::vector<Sub> all_subgroups(const TableGroup& tg) {
  std::set<Sub> seen;
  std::vector<Sub> list;
  auto take = [&](Sub s) {
    if (seen.insert(s).second) list.push_back(std::move(s));
  };
  for (int e = 0; e < tg.size(); ++e) take(close(tg, {e}));
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Sub seed;
      std::set_union(list[i].begin(), list[i].end(), list[j].begin(), list[j].end(),
                     std::back_inserter(seed));
      take(close(tg, seed));
    }
  }
  std::sort(list.begin(), list.end(), [](const Sub& a, const Sub& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return list;
}

bool primes_within(std::uint64_t value, const std::vector<std::uint64_t>& block) {
  for (std::uint64_t p : Factored::from_u64(value).primes()) {
    if (!std::binary_search(block.begin(), block.end(), p)) return false;
  }
  return true;
}

void require_ground_covers(const Partition& sigma, const Factored& order) {
  for (std::uint64_t p : order.primes()) {
    if (!sigma.contains(p)) {
      throw input_error("partition leaves a prime of the order uncovered: " + std::to_string(p));
    }
  }
}

bool one_block_holds(const Partition& sigma, const std::vector<std::uint64_t>& primes) {
  if (primes.empty()) return true;
  const int home = sigma.block_of(primes[0]);
  if (home < 0) return false;
  return std::all_of(primes.begin(), primes.end(),
                     [&](std::uint64_t p) { return sigma.block_of(p) == home; });
}

SubgroupLattice export_lattice(const TableGroup& tg, const std::vector<Sub>& subs) {
  const std::size_t m = subs.size();
  SubgroupLattice lat;
  lat.subgroups.reserve(m);
  for (const Sub& s : subs) {
    std::vector<Permutation> members;
    members.reserve(s.size());
    for (int e : s) members.push_back(tg.elems[e]);
    lat.subgroups.push_back(std::move(members));
  }
  lat.includes.assign(m, std::vector<bool>(m, false));
  lat.normal_in.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (subs[i].size() > subs[j].size()) continue;
      if (!std::includes(subs[j].begin(), subs[j].end(), subs[i].begin(), subs[i].end())) continue;
      lat.includes[i][j] = true;
      bool normal = true;
      for (int e : subs[i]) {
        for (int x : subs[j]) {
          if (!sub_contains(subs[i], conj_index(tg, e, x))) {
            normal = false;
            break;
          }
        }
        if (!normal) break;
      }
      lat.normal_in[i][j] = normal;
    }
  }
  return lat;
}

}  // namespace

SubgroupLattice subgroup_lattice(const PermGroup& g, std::uint64_t cap) {
  const TableGroup tg = build_model(g, cap);
  return export_lattice(tg, all_subgroups(tg));
}

SubnormalSearchData subnormal_search_data(const PermGroup& g, std::uint64_t cap) {
  const TableGroup tg = build_model(g, cap);
  const std::vector<Sub> subs = all_subgroups(tg);
  const std::size_t m = subs.size();

  SubnormalSearchData out;
  out.lattice = export_lattice(tg, subs);
  out.step_primes.assign(m, std::vector<std::vector<std::uint64_t>>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || !out.lattice.includes[a][b]) continue;
      Sub core = subs[a];
      for (int x : subs[b]) {
        Sub conj;
        conj.reserve(subs[a].size());
        for (int e : subs[a]) conj.push_back(conj_index(tg, e, x));
        std::sort(conj.begin(), conj.end());
        Sub cut;
        std::set_intersection(core.begin(), core.end(), conj.begin(), conj.end(),
                              std::back_inserter(cut));
        core = std::move(cut);
        if (core.size() == 1) break;
      }
      out.step_primes[a][b] =
          Factored::from_u64(subs[b].size() / core.size()).primes();
    }
  }
  return out;
}

std::vector<PermGroup> hall_subgroups(const PermGroup& g, const std::vector<std::uint64_t>& block,
                                      std::uint64_t cap) {
  const auto blk = sorted_unique(block);
  const Factored part = g.order().part(blk);
  if (part == g.order()) return {g};

  const TableGroup tg = build_model(g, cap);
  const std::uint64_t target = part.to_u64();

  // Every block-subgroup is a join of cyclic block-subgroups, and each
  // partial join stays inside a block-subgroup, so pairwise joins filtered by
  // block primes reach them all.
  std::set<Sub> seen;
  std::vector<Sub> list;
  auto take = [&](Sub s) {
    if (!primes_within(s.size(), blk)) return;
    if (seen.insert(s).second) list.push_back(std::move(s));
  };
  for (int e = 0; e < tg.size(); ++e) take(close(tg, {e}));
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Sub seed;
      std::set_union(list[i].begin(), list[i].end(), list[j].begin(), list[j].end(),
                     std::back_inserter(seed));
      take(close(tg, seed));
    }
  }

  std::vector<const Sub*> found;
  for (const Sub& s : seen) {
    if (s.size() == target) found.push_back(&s);
  }
  std::vector<PermGroup> out;
  out.reserve(found.size());
  for (const Sub* s : found) {
    std::vector<Permutation> members;
    members.reserve(s->size());
    for (int e : *s) members.push_back(tg.elems[e]);
    out.push_back(group_from_elements(g.degree(), members));
  }
  return out;
}

bool set_product_permutes(const PermGroup& a, const PermGroup& b, std::uint64_t cap) {
  if (a.degree() != b.degree()) throw input_error("set products need equal degrees");
  if (!a.order().fits_u64() || !b.order().fits_u64()) {
    throw cap_error("set product factors too large to enumerate");
  }
  const std::uint64_t na = a.order().to_u64();
  const std::uint64_t nb = b.order().to_u64();
  if (nb != 0 && na > cap / nb) {
    throw cap_error("set product too large to enumerate: " + std::to_string(na) + " * " +
                    std::to_string(nb));
  }
  const auto ae = a.elements(na);
  const auto be = b.elements(nb);
  std::vector<Permutation> ab;
  std::vector<Permutation> ba;
  ab.reserve(ae.size() * be.size());
  ba.reserve(ae.size() * be.size());
  for (const auto& x : ae) {
    for (const auto& y : be) {
      ab.push_back(compose(x, y));
      ba.push_back(compose(y, x));
    }
  }
  std::sort(ab.begin(), ab.end());
  ab.erase(std::unique(ab.begin(), ab.end()), ab.end());
  std::sort(ba.begin(), ba.end());
  ba.erase(std::unique(ba.begin(), ba.end()), ba.end());
  return ab == ba;
}

bool sigma_nilpotent_oracle(const Section& s, const Partition& sigma, std::uint64_t cap) {
  const Factored qorder = s.big().order().divided_by(s.small().order());
  require_ground_covers(sigma, qorder);
  if (sigma.size() <= 1) return true;

  const TableGroup tg = build_model(s.big(), s.small(), cap);
  const std::vector<Sub> subs = all_subgroups(tg);
  for (const auto& block : sigma.blocks()) {
    const std::uint64_t part = qorder.part(block).to_u64();
    bool found = false;
    for (const Sub& sub : subs) {
      if (sub.size() != part) continue;
      if (is_normal_in_whole(tg, sub)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool sigma_soluble_oracle(const Section& s, const Partition& sigma, std::uint64_t cap) {
  const Factored qorder = s.big().order().divided_by(s.small().order());
  require_ground_covers(sigma, qorder);
  if (sigma.size() <= 1) return true;

  const TableGroup tg = build_model(s.big(), s.small(), cap);
  const std::vector<Sub> subs = all_subgroups(tg);
  std::vector<const Sub*> normals;
  for (const Sub& sub : subs) {
    if (is_normal_in_whole(tg, sub)) normals.push_back(&sub);
  }

  Sub cur = {0};
  while (static_cast<int>(cur.size()) < tg.size()) {
    const Sub* next = nullptr;
    for (const Sub* cand : normals) {  // normals inherit the (size, lex) order
      if (cand->size() <= cur.size()) continue;
      if (std::includes(cand->begin(), cand->end(), cur.begin(), cur.end())) {
        next = cand;
        break;
      }
    }
    internal_check(next != nullptr, "no normal subgroup extends the chief chain");
    const std::uint64_t factor = next->size() / cur.size();
    if (!one_block_holds(sigma, Factored::from_u64(factor).primes())) return false;
    cur = *next;
  }
  return true;
}

bool sigma_subnormal_oracle(const SubnormalSearchData& data, const PermGroup& h,
                            const Partition& sigma) {
  const std::size_t m = data.lattice.subgroups.size();
  internal_check(m > 0, "empty subgroup lattice");

  if (!h.order().fits_u64()) throw input_error("subgroup too large for the lattice");
  auto members = h.elements(h.order().to_u64());
  std::sort(members.begin(), members.end());
  std::size_t start = m;
  for (std::size_t i = 0; i < m; ++i) {
    if (data.lattice.subgroups[i] == members) {
      start = i;
      break;
    }
  }
  if (start == m) throw input_error("subgroup not found in the ambient group's lattice");

  std::vector<char> good(m, 0);
  good[m - 1] = 1;  // the whole group ends the chain
  for (std::size_t a = m - 1; a-- > 0;) {
    for (std::size_t b = a + 1; b < m && !good[a]; ++b) {
      if (!data.lattice.includes[a][b] || !good[b]) continue;
      if (data.lattice.normal_in[a][b] || one_block_holds(sigma, data.step_primes[a][b])) {
        good[a] = 1;
      }
    }
  }
  return good[start] != 0;
}

bool sigma_subnormal_oracle(const PermGroup& g, const PermGroup& h, const Partition& sigma,
                            std::uint64_t cap) {
  return sigma_subnormal_oracle(subnormal_search_data(g, cap), h, sigma);
}

bool sigma_permutable_oracle(const PermGroup& g, const PermGroup& h, const Partition& sigma,
                             std::uint64_t cap) {
  if (!is_subgroup(h, g)) throw input_error("h must be a subgroup of g");
  if (!sigma_soluble_oracle(Section(g, PermGroup::trivial(g.degree())), sigma, cap)) {
    throw input_error("the group is not sigma-soluble, so the Hall product test does not apply");
  }

  const std::uint64_t big = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t pair_cap = cap <= 3'000'000'000ULL ? cap * cap : big;
  const auto gel = g.elements(cap);
  for (const auto& block : sigma.blocks()) {
    const Factored part = g.order().part(block);
    if (part == g.order() || part.is_one()) continue;  // products with g or 1 always permute
    const auto halls = hall_subgroups(g, block, cap);
    internal_check(!halls.empty(), "a sigma-soluble group is missing a Hall subgroup");
    const PermGroup& hall = halls.front();
    for (const auto& x : gel) {
      std::vector<Permutation> conj_gens;
      conj_gens.reserve(hall.generators().size());
      for (const auto& gen : hall.generators()) conj_gens.push_back(conjugate(gen, x));
      if (!set_product_permutes(h, PermGroup(g.degree(), conj_gens), pair_cap)) return false;
    }
  }
  return true;
}

Partition least_partition_oracle(const std::vector<std::uint64_t>& primes,
                                 const std::function<bool(const Partition&)>& predicate) {
  const auto ps = sorted_unique(primes);
  if (ps.size() > 4) {
    throw cap_error("least-partition search handles at most four primes");
  }
  internal_check(predicate(Partition::single_block(ps)),
                 "property fails at the one-block partition");

  bool seen = false;
  Partition acc;
  for (const Partition& tau : all_partitions(ps)) {
    if (!predicate(tau)) continue;
    acc = seen ? meet(acc, tau) : tau;
    seen = true;
  }
  internal_check(seen, "no partition satisfies the property");
  internal_check(predicate(acc), "property fails at the meet of its satisfying partitions");
  return acc;
}

}  // namespace sigmagrp
