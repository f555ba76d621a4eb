#include "sigmagrp/perm_group.hpp"

#include <optional>
#include <unordered_set>

#include "sigmagrp/errors.hpp"

namespace sigmagrp {

namespace {

int least_moved_point(const Permutation& p) {
  for (int i = 0; i < p.degree(); ++i) {
    if (p.apply(i) != i) return i;
  }
  return -1;
}

}  // namespace

StabilizerChain::StabilizerChain(int degree, const std::vector<Permutation>& gens)
    : degree_(degree) {
  if (degree < 1) throw input_error("degree must be at least 1");

  // Place each generator at the first level whose base point it moves,
  // extending the base when it fixes every base point chosen so far.
  for (const auto& g : gens) {
    if (g.degree() != degree_) throw input_error("generator degree mismatch");
    if (g.is_identity()) continue;
    std::size_t l = 0;
    while (l < levels_.size() && g.apply(levels_[l].base_point) == levels_[l].base_point) ++l;
    if (l == levels_.size()) {
      ChainLevel fresh;
      fresh.base_point = least_moved_point(g);
      levels_.push_back(std::move(fresh));
    }
    levels_[l].gens.push_back(g);
  }

  // Verification sweep, deepest level first. Every Schreier generator of a
  // level has to sift to the identity through the levels below it; a
  // nontrivial residue is installed as a strong generator at the level where
  // sifting stalled and the sweep resumes there.
  // The Schreier generators and their sift residues are built on raw image
  // tables with the cached transversal inverses, so the verification loop
  // allocates only when it finds a residue worth installing.
  std::vector<int> s(static_cast<std::size_t>(degree_));
  std::vector<int> tmp(static_cast<std::size_t>(degree_));
  auto scan = [&](std::size_t li) -> std::optional<std::pair<Permutation, std::size_t>> {
    const ChainLevel& lvl = levels_[li];
    const auto eff = effective_gens(li);
    for (std::size_t qi = 0; qi < lvl.orbit.size(); ++qi) {
      const Permutation& tq = lvl.transversal[qi];
      for (const Permutation* x : eff) {
        const int r = x->apply(lvl.orbit[qi]);
        const auto rk = static_cast<std::size_t>(lvl.slot[static_cast<std::size_t>(r)]);
        const std::vector<int>& tinv = lvl.transversal_inv[rk];
        bool ident = true;
        for (int i = 0; i < degree_; ++i) {
          const int v = tinv[static_cast<std::size_t>(x->apply(tq.apply(i)))];
          s[static_cast<std::size_t>(i)] = v;
          ident = ident && v == i;
        }
        if (ident) continue;
        std::size_t stall = levels_.size();
        for (std::size_t l = li + 1; l < levels_.size(); ++l) {
          const ChainLevel& dl = levels_[l];
          const int pt = s[static_cast<std::size_t>(dl.base_point)];
          const int k = dl.slot[static_cast<std::size_t>(pt)];
          if (k == -1) {
            stall = l;
            break;
          }
          const std::vector<int>& w = dl.transversal_inv[static_cast<std::size_t>(k)];
          bool settled = true;
          for (int i = 0; i < degree_; ++i) {
            const int v = w[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])];
            tmp[static_cast<std::size_t>(i)] = v;
            settled = settled && v == i;
          }
          s.swap(tmp);
          if (settled) {
            ident = true;
            break;
          }
        }
        if (ident) continue;
        return std::make_pair(Permutation::from_images(s), stall);
      }
    }
    return std::nullopt;
  };

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
      ChainLevel fresh;
      fresh.base_point = least_moved_point(residue);
      levels_.push_back(std::move(fresh));
    }
    levels_[stall].gens.push_back(std::move(residue));
    i = static_cast<int>(stall);
  }
}

std::vector<const Permutation*> StabilizerChain::effective_gens(std::size_t level) const {
  std::vector<const Permutation*> eff;
  for (std::size_t l = level; l < levels_.size(); ++l) {
    for (const auto& g : levels_[l].gens) eff.push_back(&g);
  }
  return eff;
}

void StabilizerChain::recompute_orbit(std::size_t level) {
  ChainLevel& lvl = levels_[level];
  const auto eff = effective_gens(level);
  lvl.orbit.clear();
  lvl.transversal.clear();
  lvl.transversal_inv.clear();
  lvl.slot.assign(static_cast<std::size_t>(degree_), -1);
  lvl.orbit.push_back(lvl.base_point);
  lvl.slot[static_cast<std::size_t>(lvl.base_point)] = 0;
  lvl.transversal.emplace_back(degree_);
  std::vector<int> inv(static_cast<std::size_t>(degree_));
  for (int i = 0; i < degree_; ++i) inv[static_cast<std::size_t>(i)] = i;
  lvl.transversal_inv.push_back(inv);
  for (std::size_t qi = 0; qi < lvl.orbit.size(); ++qi) {
    for (const Permutation* x : eff) {
      const int r = x->apply(lvl.orbit[qi]);
      if (lvl.slot[static_cast<std::size_t>(r)] != -1) continue;
      lvl.slot[static_cast<std::size_t>(r)] = static_cast<int>(lvl.orbit.size());
      lvl.orbit.push_back(r);
      Permutation u = compose(lvl.transversal[qi], *x);
      for (int i = 0; i < degree_; ++i) inv[static_cast<std::size_t>(u.apply(i))] = i;
      lvl.transversal.push_back(std::move(u));
      lvl.transversal_inv.push_back(inv);
    }
  }
}

Factored StabilizerChain::order() const {
  Factored o = Factored::from_u64(1);
  for (const auto& lvl : levels_) {
    o = o.times(Factored::from_u64(static_cast<std::uint64_t>(lvl.orbit.size())));
  }
  return o;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift_from(Permutation p,
                                                               std::size_t start) const {
  for (std::size_t l = start; l < levels_.size(); ++l) {
    if (p.is_identity()) return {std::move(p), levels_.size()};
    const ChainLevel& lvl = levels_[l];
    const int pt = p.apply(lvl.base_point);
    const int k = lvl.slot[static_cast<std::size_t>(pt)];
    if (k == -1) return {std::move(p), l};
    p = compose(p, inverse(lvl.transversal[static_cast<std::size_t>(k)]));
  }
  return {std::move(p), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw input_error("membership test needs matching degree");
  return sift_from(p, 0).first.is_identity();
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& lvl : levels_) out.insert(out.end(), lvl.gens.begin(), lvl.gens.end());
  return out;
}

std::vector<Permutation> StabilizerChain::elements(std::uint64_t cap) const {
  const Factored o = order();
  if (!o.fits_u64() || o.to_u64() > cap) {
    throw cap_error("group too large to enumerate: |G| = " + o.to_decimal());
  }
  std::vector<Permutation> out;
  out.emplace_back(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels_[l].transversal.size());
    for (const auto& u : levels_[l].transversal) {
      for (const auto& h : out) next.push_back(compose(h, u));
    }
    out = std::move(next);
  }
  return out;
}

Permutation StabilizerChain::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const auto& t = levels_[l].transversal;
    std::uniform_int_distribution<std::size_t> pick(0, t.size() - 1);
    g = compose(g, t[pick(rng)]);
  }
  return g;
}

namespace {

struct FilteredGens {
  std::vector<Permutation> gens;
  std::shared_ptr<const StabilizerChain> chain;
};

// Keep only elements not generated by the ones already kept. Each kept
// element at least doubles the group, so the result stays short.
FilteredGens filter_generators(int degree, const std::vector<Permutation>& elems) {
  FilteredGens out;
  for (const auto& e : elems) {
    if (e.degree() != degree) throw input_error("element degree mismatch");
    if (e.is_identity()) continue;
    if (out.chain && out.chain->contains(e)) continue;
    out.gens.push_back(e);
    out.chain = std::make_shared<const StabilizerChain>(degree, out.gens);
  }
  return out;
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Permutation> gens) : degree_(degree) {
  if (degree < 1) throw input_error("degree must be at least 1");
  std::unordered_set<Permutation, PermHash> seen;
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (g.degree() != degree) throw input_error("generator degree mismatch");
    if (g.is_identity()) continue;
    if (seen.insert(g).second) gens_.push_back(std::move(g));
  }
  const auto limit = static_cast<std::size_t>(degree) * static_cast<std::size_t>(degree);
  if (gens_.size() > limit) {
    auto filtered = filter_generators(degree_, gens_);
    gens_ = std::move(filtered.gens);
    chain_ = std::move(filtered.chain);
  }
}

const StabilizerChain& PermGroup::chain() const {
  if (!chain_) chain_ = std::make_shared<const StabilizerChain>(degree_, gens_);
  return *chain_;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw input_error("membership test needs matching degree");
  return chain().contains(p);
}

bool is_subgroup(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree()) throw input_error("subgroup test needs matching degree");
  for (const auto& x : h.generators()) {
    if (!g.contains(x)) return false;
  }
  return true;
}

bool equal_groups(const PermGroup& a, const PermGroup& b) {
  return is_subgroup(a, b) && a.order() == b.order();
}

PermGroup group_from_elements(int degree, const std::vector<Permutation>& elems) {
  auto filtered = filter_generators(degree, elems);
  return PermGroup(degree, std::move(filtered.gens));
}

}  // namespace sigmagrp
