#include "sigmagrp/checks.hpp"

#include <algorithm>

#include "sigmagrp/decompose.hpp"
#include "sigmagrp/errors.hpp"
#include "sigmagrp/factored.hpp"
#include "sigmagrp/toolbox.hpp"

namespace sigmagrp {

namespace {

std::string primes_text(const std::vector<std::uint64_t>& ps) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ps[i]);
  }
  return out + "}";
}

CheckReport pass() { return {true, std::nullopt}; }

CheckReport fail(Witness w) { return {false, std::move(w)}; }

void require_tower(const PermGroup& g, const PermGroup& h, const PermGroup& k,
                   const Partition& sigma) {
  if (!is_subgroup(h, g)) throw input_error("h must be a subgroup of g");
  if (!is_subgroup(k, h)) throw input_error("k must be a subgroup of h");
  if (!is_normal_in(k, g)) throw input_error("k must be normal in g");
  for (std::uint64_t q : g.prime_set()) {
    if (!sigma.contains(q)) {
      throw input_error("partition must cover every prime of |g|; missing " + std::to_string(q));
    }
  }
}

}  // namespace

CheckReport is_sigma_nilpotent(const Section& s, const Partition& sigma) {
  const PermGroup& g = s.big();
  const PermGroup& k = s.small();
  const std::vector<std::uint64_t> sect = section_primes(s);
  if (sigma.ground() != sect) {
    throw input_error("partition must cover exactly the primes of the section order");
  }
  if (sect.empty()) return pass();

  std::vector<std::uint64_t> extra;
  for (std::uint64_t q : g.prime_set()) {
    if (!sigma.contains(q)) extra.push_back(q);
  }
  const SigmaGenerators sg = decompose_generators(g, sigma, extra);
  for (const auto& z : sg.extra) {
    internal_check(k.contains(z), "component over vanishing primes left the normal subgroup");
  }

  // Each block's span must stay a block-primes group modulo k.
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const PermGroup span(g.degree(), sg.per_block[i]);
    const PermGroup spank = join(span, k);
    const std::vector<std::uint64_t> ps = spank.order().divided_by(k.order()).primes();
    for (std::uint64_t q : ps) {
      if (!std::binary_search(sigma.blocks()[i].begin(), sigma.blocks()[i].end(), q)) {
        return fail({"block-primes-escape",
                     "the block " + primes_text(sigma.blocks()[i]) +
                         " spans a subgroup with primes " + primes_text(ps) +
                         " modulo the normal subgroup",
                     sigma.blocks()[i],
                     {},
                     ps});
      }
    }
  }

  // Components of different blocks must commute modulo k.
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = i + 1; j < sigma.size(); ++j) {
      for (const auto& a : sg.per_block[i]) {
        for (const auto& b : sg.per_block[j]) {
          if (!k.contains(commutator(a, b))) {
            return fail({"cross-commutator",
                         "components of blocks " + primes_text(sigma.blocks()[i]) + " and " +
                             primes_text(sigma.blocks()[j]) +
                             " do not commute modulo the normal subgroup",
                         sigma.blocks()[i],
                         sigma.blocks()[j],
                         {}});
          }
        }
      }
    }
  }
  return pass();
}

CheckReport is_sigma_soluble(const Section& s, const Partition& sigma, const Config& cfg) {
  if (sigma.ground() != section_primes(s)) {
    throw input_error("partition must cover exactly the primes of the section order");
  }
  const ChiefSeries cs = chief_series(s, cfg);
  for (std::size_t i = 0; i < cs.factor_prime_sets.size(); ++i) {
    const auto& ps = cs.factor_prime_sets[i];
    const int home = sigma.block_of(ps.front());
    const bool inside = std::all_of(ps.begin(), ps.end(),
                                    [&](std::uint64_t q) { return sigma.block_of(q) == home; });
    if (!inside) {
      return fail({"chief-factor-split",
                   "a chief factor of order " + cs.factor_orders[i].to_decimal() +
                       " has primes " + primes_text(ps) + " across more than one block",
                   {},
                   {},
                   ps});
    }
  }
  return pass();
}

CheckReport is_sigma_subnormal(const PermGroup& g, const PermGroup& h, const PermGroup& k,
                               const Partition& sigma, const Config& cfg) {
  require_tower(g, h, k, sigma);
  const auto max_links = static_cast<std::size_t>(std::max(1, 2 * g.degree() - 3));
  PermGroup m = g;
  std::size_t steps = 0;
  while (true) {
    if (h.order() == m.order()) return pass();
    internal_check(steps < max_links, "descending chain exceeded the length bound");
    ++steps;

    PermGroup n = normal_closure(m, h);
    if (n.order() != m.order()) {
      m = std::move(n);
      continue;
    }
    const std::vector<std::uint64_t> idx = m.order().divided_by(h.order()).primes();
    bool descended = false;
    for (const auto& block : sigma.blocks()) {
      const bool meets = std::any_of(block.begin(), block.end(), [&](std::uint64_t q) {
        return std::binary_search(idx.begin(), idx.end(), q);
      });
      if (!meets) continue;
      PermGroup j = join(h, o_upper_pi(m, block, cfg));
      if (j.order() != m.order()) {
        m = std::move(j);
        descended = true;
        break;
      }
    }
    if (!descended) {
      return fail({"chain-stuck",
                   "no further descent from an ambient of order " + m.order().to_decimal() +
                       "; the index above the subgroup has primes " + primes_text(idx),
                   {},
                   {},
                   idx});
    }
  }
}

CheckReport is_sigma_p_permutable(const PermGroup& g, const PermGroup& h, const PermGroup& k,
                                  const Partition& sigma, const Config& cfg) {
  require_tower(g, h, k, sigma);
  const PermGroup below = core(g, h, cfg);
  const PermGroup above = normal_closure(g, h);

  const Section span(above, below);
  const CheckReport inner = is_sigma_nilpotent(span, restrict_to(sigma, section_primes(span)));
  if (!inner.verdict) {
    Witness w = *inner.witness;
    return fail({"closure-not-nilpotent",
                 "the normal closure over the core is not sigma-nilpotent: " + w.detail,
                 std::move(w.block_a), std::move(w.block_b), std::move(w.primes)});
  }

  const std::vector<std::uint64_t> hsect = h.order().divided_by(below.order()).primes();
  const SigmaGenerators sg = decompose_generators(h, sigma, {});
  SylowCache sylows(g, cfg);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const auto& block = sigma.blocks()[i];
    const bool meets = std::any_of(block.begin(), block.end(), [&](std::uint64_t q) {
      return std::binary_search(hsect.begin(), hsect.end(), q);
    });
    if (!meets) continue;
    const PermGroup t = join(PermGroup(g.degree(), sg.per_block[i]), below);
    const PermGroup residual = sylows.o_upper(block);
    for (const auto& x : t.generators()) {
      for (const auto& w : residual.generators()) {
        if (!t.contains(conjugate(x, w))) {
          return fail({"conjugation-unstable",
                       "the block " + primes_text(block) +
                           " part over the core moves under the complementary residual",
                       block,
                       {},
                       {}});
        }
      }
    }
  }
  return pass();
}

CheckReport is_sigma_permutable_soluble(const PermGroup& g, const PermGroup& h,
                                        const PermGroup& k, const Partition& sigma,
                                        const Config& cfg) {
  require_tower(g, h, k, sigma);
  const Section s(g, k);
  const CheckReport soluble = is_sigma_soluble(s, restrict_to(sigma, section_primes(s)), cfg);
  if (!soluble.verdict) {
    throw input_error("the section is not sigma-soluble, so sigma-permutability is undefined");
  }
  return is_sigma_p_permutable(g, h, k, sigma, cfg);
}

}  // namespace sigmagrp
