#include "sigmagrp/toolbox.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <random>
#include <unordered_map>
#include <utility>

#include "sigmagrp/errors.hpp"

namespace sigmagrp {

namespace {

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

PermGroup join(const PermGroup& h, const PermGroup& k) {
  if (h.degree() != k.degree()) throw input_error("join needs equal degrees");
  std::vector<Permutation> gens = h.generators();
  gens.insert(gens.end(), k.generators().begin(), k.generators().end());
  return PermGroup(h.degree(), std::move(gens));
}

PermGroup normal_closure(const PermGroup& g, const PermGroup& t) {
  if (!is_subgroup(t, g)) throw input_error("normal closure needs generators inside g");
  PermGroup n = t;
  std::vector<Permutation> frontier = t.generators();
  while (!frontier.empty()) {
    std::vector<Permutation> fresh;
    for (const auto& x : frontier) {
      for (const auto& s : g.generators()) {
        Permutation c = conjugate(x, s);
        if (!n.contains(c)) fresh.push_back(std::move(c));
      }
    }
    if (!fresh.empty()) {
      std::vector<Permutation> gens = n.generators();
      gens.insert(gens.end(), fresh.begin(), fresh.end());
      n = PermGroup(g.degree(), std::move(gens));
    }
    frontier = std::move(fresh);
  }
  return n;
}

PermGroup commutator_subgroup(const PermGroup& h, const PermGroup& k) {
  if (h.degree() != k.degree()) throw input_error("commutator subgroup needs equal degrees");
  std::vector<Permutation> comms;
  for (const auto& a : h.generators()) {
    for (const auto& b : k.generators()) {
      Permutation c = commutator(a, b);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  }
  return normal_closure(join(h, k), PermGroup(h.degree(), std::move(comms)));
}

PermGroup intersect_with_normal(const PermGroup& h, const PermGroup& k, const PermGroup& g,
                                const Config& cfg) {
  if (!is_subgroup(h, g) || !is_subgroup(k, g)) {
    throw input_error("intersection needs subgroups of g");
  }
  if (!is_normal_in(k, g)) throw input_error("intersection needs k normal in g");
  if (h.is_trivial() || k.is_trivial()) return PermGroup::trivial(g.degree());
  if (is_subgroup(h, k)) return h;
  if (is_subgroup(k, h)) return k;
  const bool h_smaller = h.order().compare(k.order()) <= 0;
  const PermGroup& small = h_smaller ? h : k;
  const PermGroup& large = h_smaller ? k : h;
  if (!small.order().fits_u64() || small.order().to_u64() > cfg.max_enum) {
    throw cap_error("intersection beyond the enumeration cap");
  }
  std::vector<Permutation> kept;
  for (const auto& e : small.elements(cfg.max_enum)) {
    if (large.contains(e)) kept.push_back(e);
  }
  return group_from_elements(g.degree(), kept);
}

namespace {

// Least element of the coset h·y: walk h's chain, at each level steering the
// base point's image down as far as the level's orbit allows.
Permutation coset_canonical(const StabilizerChain& hch, Permutation y) {
  for (const auto& lvl : hch.levels()) {
    std::size_t best = 0;
    int best_img = y.apply(lvl.orbit[0]);
    for (std::size_t k = 1; k < lvl.orbit.size(); ++k) {
      const int img = y.apply(lvl.orbit[k]);
      if (img < best_img) {
        best_img = img;
        best = k;
      }
    }
    if (best != 0) y = compose(lvl.transversal[best], y);
  }
  return y;
}

struct CosetTable {
  std::vector<Permutation> reps;         // canonical representative per coset
  std::vector<std::vector<int>> images;  // images[gen][coset]
};

CosetTable coset_table(const PermGroup& g, const PermGroup& h, std::uint64_t cap,
                       const char* cap_msg) {
  const StabilizerChain& hch = h.chain();
  CosetTable t;
  std::unordered_map<Permutation, int, PermHash> index;
  t.reps.push_back(coset_canonical(hch, Permutation(g.degree())));
  index.emplace(t.reps.front(), 0);
  t.images.assign(g.generators().size(), {});
  for (std::size_t c = 0; c < t.reps.size(); ++c) {
    for (std::size_t si = 0; si < g.generators().size(); ++si) {
      Permutation z = coset_canonical(hch, compose(t.reps[c], g.generators()[si]));
      int target;
      if (auto it = index.find(z); it != index.end()) {
        target = it->second;
      } else {
        if (t.reps.size() >= cap) throw cap_error(cap_msg);
        target = static_cast<int>(t.reps.size());
        index.emplace(z, target);
        t.reps.push_back(std::move(z));
      }
      t.images[si].push_back(target);
    }
  }
  return t;
}

// A group element carried together with its action on the cosets.
struct Carried {
  Permutation point;
  Permutation act;
};

Carried ccompose(const Carried& x, const Carried& y) {
  return {compose(x.point, y.point), compose(x.act, y.act)};
}

Carried cinverse(const Carried& x) { return {inverse(x.point), inverse(x.act)}; }

int least_moved(const Permutation& p) {
  for (int i = 0; i < p.degree(); ++i) {
    if (p.apply(i) != i) return i;
  }
  return -1;
}

// Stabilizer chain of the coset action, built over carried elements so that
// every residue acting trivially on the cosets surfaces with its point part
// intact: those parts generate the kernel. Transversals are kept as Schreier
// vectors, so memory stays linear in the coset count.
class KernelBuilder {
public:
  KernelBuilder(int n, int m, const std::vector<Carried>& gens) : n_(n), m_(m) {
    for (const auto& cg : gens) {
      if (cg.act.is_identity()) {
        keep(cg.point);
        continue;
      }
      std::size_t l = 0;
      while (l < levels_.size() && cg.act.apply(levels_[l].base) == levels_[l].base) ++l;
      if (l == levels_.size()) {
        KLevel fresh;
        fresh.base = least_moved(cg.act);
        levels_.push_back(std::move(fresh));
      }
      levels_[l].gens.push_back(cg);
    }

    int i = static_cast<int>(levels_.size()) - 1;
    while (i >= 0) {
      recompute_orbit(static_cast<std::size_t>(i));
      auto hit = scan(static_cast<std::size_t>(i));
      if (!hit) {
        --i;
        continue;
      }
      auto& [residue, stall] = *hit;
      if (stall == levels_.size()) {
        KLevel fresh;
        fresh.base = least_moved(residue.act);
        levels_.push_back(std::move(fresh));
      }
      levels_[stall].gens.push_back(std::move(residue));
      i = static_cast<int>(stall);
    }
  }

  std::vector<Permutation> take_kernel_gens() { return std::move(kernel_gens_); }

  Factored image_order() const {
    Factored o = Factored::from_u64(1);
    for (const auto& lvl : levels_) {
      o = o.times(Factored::from_u64(static_cast<std::uint64_t>(lvl.orbit.size())));
    }
    return o;
  }

private:
  struct Via {
    int glvl = -1;
    int gidx = -1;
    int parent = -1;
  };

  struct KLevel {
    int base = 0;
    std::vector<Carried> gens;
    std::vector<int> orbit;
    std::vector<int> slot;
    std::vector<Via> via;
  };

  void keep(Permutation z) {
    if (z.is_identity()) return;
    if (kchain_ && kchain_->contains(z)) return;
    kernel_gens_.push_back(std::move(z));
    kchain_ = std::make_unique<StabilizerChain>(n_, kernel_gens_);
  }

  Carried transversal(const KLevel& lvl, int pos) const {
    std::vector<const Carried*> steps;
    for (int p = pos; lvl.via[static_cast<std::size_t>(p)].parent != -1;
         p = lvl.via[static_cast<std::size_t>(p)].parent) {
      const Via& v = lvl.via[static_cast<std::size_t>(p)];
      steps.push_back(&levels_[static_cast<std::size_t>(v.glvl)]
                           .gens[static_cast<std::size_t>(v.gidx)]);
    }
    Carried u{Permutation(n_), Permutation(m_)};
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) u = ccompose(u, **it);
    return u;
  }

  void recompute_orbit(std::size_t li) {
    KLevel& lvl = levels_[li];
    lvl.orbit.clear();
    lvl.via.clear();
    lvl.slot.assign(static_cast<std::size_t>(m_), -1);
    lvl.orbit.push_back(lvl.base);
    lvl.slot[static_cast<std::size_t>(lvl.base)] = 0;
    lvl.via.push_back({});
    for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
      for (std::size_t gl = li; gl < levels_.size(); ++gl) {
        for (std::size_t gi = 0; gi < levels_[gl].gens.size(); ++gi) {
          const int r = levels_[gl].gens[gi].act.apply(lvl.orbit[k]);
          if (lvl.slot[static_cast<std::size_t>(r)] != -1) continue;
          lvl.slot[static_cast<std::size_t>(r)] = static_cast<int>(lvl.orbit.size());
          lvl.orbit.push_back(r);
          lvl.via.push_back({static_cast<int>(gl), static_cast<int>(gi), static_cast<int>(k)});
        }
      }
    }
  }

  std::pair<Carried, std::size_t> sift_from(Carried c, std::size_t start) const {
    for (std::size_t l = start; l < levels_.size(); ++l) {
      if (c.act.is_identity()) return {std::move(c), levels_.size()};
      const KLevel& lvl = levels_[l];
      const int pt = c.act.apply(lvl.base);
      const int k = lvl.slot[static_cast<std::size_t>(pt)];
      if (k == -1) return {std::move(c), l};
      c = ccompose(c, cinverse(transversal(lvl, k)));
    }
    return {std::move(c), levels_.size()};
  }

  std::optional<std::pair<Carried, std::size_t>> scan(std::size_t li) {
    const KLevel& lvl = levels_[li];
    for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
      const Carried uq = transversal(lvl, static_cast<int>(k));
      for (std::size_t gl = li; gl < levels_.size(); ++gl) {
        for (std::size_t gi = 0; gi < levels_[gl].gens.size(); ++gi) {
          const Carried& x = levels_[gl].gens[gi];
          const int r = x.act.apply(lvl.orbit[k]);
          const int rk = lvl.slot[static_cast<std::size_t>(r)];
          Carried trial = ccompose(ccompose(uq, x), cinverse(transversal(lvl, rk)));
          if (trial.act.is_identity()) {
            keep(std::move(trial.point));
            continue;
          }
          auto [residue, stall] = sift_from(std::move(trial), li + 1);
          if (residue.act.is_identity()) {
            keep(std::move(residue.point));
            continue;
          }
          return std::make_pair(std::move(residue), stall);
        }
      }
    }
    return std::nullopt;
  }

  int n_;
  int m_;
  std::vector<KLevel> levels_;
  std::vector<Permutation> kernel_gens_;
  std::unique_ptr<StabilizerChain> kchain_;
};

}  // namespace

PermGroup core(const PermGroup& g, const PermGroup& h, const Config& cfg) {
  if (!is_subgroup(h, g)) throw input_error("core needs a subgroup of g");
  CosetTable t = coset_table(g, h, cfg.max_index, "coset count exceeds the index cap");
  const int m = static_cast<int>(t.reps.size());
  std::vector<Carried> cgens;
  cgens.reserve(g.generators().size());
  for (std::size_t si = 0; si < g.generators().size(); ++si) {
    cgens.push_back({g.generators()[si], Permutation::from_images(std::move(t.images[si]))});
  }
  KernelBuilder kb(g.degree(), m, cgens);
  PermGroup ker(g.degree(), kb.take_kernel_gens());
  const Factored expect = g.order().divided_by(kb.image_order());
  if (ker.order() != expect) {
    ker = normal_closure(g, ker);
    internal_check(ker.order() == expect, "coset action kernel has the wrong order");
  }
  return ker;
}

namespace {

PermGroup sylow_exact(const PermGroup& g, std::uint64_t p, const Factored& target,
                      std::uint64_t cap) {
  std::vector<Permutation> pelems;
  for (auto& e : g.elements(cap)) {
    if (e.is_identity()) continue;
    std::uint64_t o = element_order(e);
    while (o % p == 0) o /= p;
    if (o == 1) pelems.push_back(std::move(e));
  }
  PermGroup pg = PermGroup::trivial(g.degree());
  while (pg.order() != target) {
    bool grew = false;
    for (const auto& y : pelems) {
      if (pg.contains(y)) continue;
      bool normalizes = true;
      for (const auto& s : pg.generators()) {
        if (!pg.contains(conjugate(s, y))) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      std::vector<Permutation> gens = pg.generators();
      gens.push_back(y);
      pg = PermGroup(g.degree(), std::move(gens));
      grew = true;
      break;
    }
    internal_check(grew, "p-subgroup climb stalled below the full p-part");
  }
  return pg;
}

PermGroup sylow_random(const PermGroup& g, std::uint64_t p, const Factored& target,
                       const Config& cfg) {
  std::mt19937_64 rng(cfg.seed);
  PermGroup pg = PermGroup::trivial(g.degree());
  const std::vector<std::uint64_t> just_p{p};
  for (std::uint64_t tries = 0; pg.order() != target; ++tries) {
    if (tries >= cfg.sylow_retries) {
      throw cap_error("sylow search exhausted its retry budget");
    }
    const Permutation r = g.random_element(rng);
    const std::uint64_t o = element_order(r);
    std::uint64_t rest = o;
    while (rest % p == 0) rest /= p;
    if (rest == o) continue;
    Permutation y = power(r, static_cast<std::int64_t>(rest));
    if (pg.contains(y)) continue;
    std::vector<Permutation> gens = pg.generators();
    gens.push_back(std::move(y));
    PermGroup cand(g.degree(), std::move(gens));
    if (cand.order().primes() == just_p) pg = std::move(cand);
  }
  return pg;
}

}  // namespace

PermGroup sylow(const PermGroup& g, std::uint64_t p, const Config& cfg) {
  if (!is_prime_u64(p)) throw input_error("sylow needs a prime");
  const Factored target = g.order().part({p});
  if (target.is_one()) return PermGroup::trivial(g.degree());
  if (g.order().fits_u64() && g.order().to_u64() <= cfg.max_enum) {
    return sylow_exact(g, p, target, cfg.max_enum);
  }
  return sylow_random(g, p, target, cfg);
}

PermGroup o_upper_pi(const PermGroup& g, const std::vector<std::uint64_t>& pi,
                     const Config& cfg) {
  SylowCache cache(g, cfg);
  return cache.o_upper(pi);
}

namespace {

// Smallest normal subgroup of g containing cur and one further element x;
// as a function of x it depends only on the coset cur·x, and conjugate
// cosets give the same subgroup.
PermGroup closure_step(const PermGroup& g, const PermGroup& cur, const Permutation& x) {
  return join(normal_closure(g, PermGroup(g.degree(), {x})), cur);
}

PermGroup minimal_normal_over(const PermGroup& g, const PermGroup& cur, const Config& cfg) {
  const Factored index = g.order().divided_by(cur.order());
  const std::uint64_t smallest_p = index.primes().front();
  std::optional<PermGroup> best;
  auto consider = [&](const Permutation& x) {
    PermGroup m = closure_step(g, cur, x);
    if (!best || m.order().compare(best->order()) < 0) best = std::move(m);
    const Factored step = best->order().divided_by(cur.order());
    return step.fits_u64() && step.to_u64() == smallest_p;
  };

  if (index.fits_u64() && index.to_u64() <= cfg.max_enum) {
    const CosetTable t = coset_table(g, cur, cfg.max_enum, "coset count exceeds the scan cap");
    std::unordered_map<Permutation, int, PermHash> lookup;
    for (std::size_t c = 0; c < t.reps.size(); ++c) {
      lookup.emplace(t.reps[c], static_cast<int>(c));
    }
    std::vector<char> done(t.reps.size(), 0);
    done[0] = 1;
    for (std::size_t c = 1; c < t.reps.size(); ++c) {
      if (done[c]) continue;
      if (consider(t.reps[c])) return std::move(*best);
      std::vector<int> queue{static_cast<int>(c)};
      done[c] = 1;
      while (!queue.empty()) {
        const int d = queue.back();
        queue.pop_back();
        for (const auto& w : g.generators()) {
          Permutation cc =
              coset_canonical(cur.chain(), conjugate(t.reps[static_cast<std::size_t>(d)], w));
          const auto it = lookup.find(cc);
          internal_check(it != lookup.end(), "conjugate fell outside the coset table");
          if (!done[static_cast<std::size_t>(it->second)]) {
            done[static_cast<std::size_t>(it->second)] = 1;
            queue.push_back(it->second);
          }
        }
      }
    }
    internal_check(best.has_value(), "no coset outside the subgroup");
    return std::move(*best);
  }

  std::mt19937_64 rng(cfg.seed);
  for (std::uint64_t t = 0; t < cfg.chief_samples; ++t) {
    const Permutation x = g.random_element(rng);
    if (cur.contains(x)) continue;
    if (consider(x)) return std::move(*best);
  }
  if (!best) throw cap_error("sampling found no element outside the subgroup");
  for (std::uint64_t round = 0; round < cfg.chief_recheck_rounds; ++round) {
    bool improved = false;
    for (std::uint64_t j = 0; j < cfg.chief_recheck; ++j) {
      const Permutation y = best->random_element(rng);
      if (cur.contains(y)) continue;
      PermGroup m = closure_step(g, cur, y);
      if (m.order().compare(best->order()) < 0) {
        best = std::move(m);
        improved = true;
        break;
      }
    }
    if (!improved) return std::move(*best);
  }
  throw cap_error("minimal normal factor did not stabilize under sampling");
}

}  // namespace

ChiefSeries chief_series(const Section& s, const Config& cfg) {
  const PermGroup& g = s.big();
  ChiefSeries out;
  out.groups.push_back(s.small());
  const auto max_links = static_cast<std::size_t>(std::max(1, 2 * g.degree() - 3));
  while (out.groups.back().order() != g.order()) {
    PermGroup m = minimal_normal_over(g, out.groups.back(), cfg);
    out.factor_orders.push_back(m.order().divided_by(out.groups.back().order()));
    out.factor_prime_sets.push_back(out.factor_orders.back().primes());
    out.groups.push_back(std::move(m));
    internal_check(out.groups.size() - 1 <= max_links,
                   "normal series exceeded the chain length bound");
  }
  return out;
}

Factored section_order(const Section& s) {
  return s.big().order().divided_by(s.small().order());
}

std::vector<std::uint64_t> section_primes(const Section& s) { return section_order(s).primes(); }

SylowCache::SylowCache(const PermGroup& g, const Config& cfg) : g_(g), cfg_(cfg) {}

const PermGroup& SylowCache::get(std::uint64_t p) {
  auto it = memo_.find(p);
  if (it == memo_.end()) it = memo_.emplace(p, sylow(g_, p, cfg_)).first;
  return it->second;
}

PermGroup SylowCache::o_upper(const std::vector<std::uint64_t>& pi) {
  const std::vector<std::uint64_t> primes = g_.prime_set();
  const std::vector<std::uint64_t> keep = sorted_unique(pi);
  std::vector<std::uint64_t> targets;
  for (std::uint64_t q : primes) {
    if (!std::binary_search(keep.begin(), keep.end(), q)) targets.push_back(q);
  }
  if (targets.empty()) return PermGroup::trivial(g_.degree());
  if (targets.size() == primes.size()) return g_;
  std::vector<Permutation> gens;
  for (std::uint64_t q : targets) {
    const PermGroup& pq = get(q);
    gens.insert(gens.end(), pq.generators().begin(), pq.generators().end());
  }
  return normal_closure(g_, PermGroup(g_.degree(), std::move(gens)));
}

}  // namespace sigmagrp
