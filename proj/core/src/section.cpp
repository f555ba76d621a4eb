#include "sigmagrp/section.hpp"

#include "sigmagrp/errors.hpp"

namespace sigmagrp {

bool is_normal_in(const PermGroup& h, const PermGroup& g) {
  if (!is_subgroup(h, g)) throw input_error("normality test needs a subgroup");
  for (const auto& x : h.generators()) {
    for (const auto& s : g.generators()) {
      if (!h.contains(conjugate(x, s))) return false;
    }
  }
  return true;
}

Section::Section(PermGroup big, PermGroup small)
    : big_(std::move(big)), small_(std::move(small)) {
  if (!is_normal_in(small_, big_)) {
    throw input_error("section needs a normal subgroup");
  }
}

}  // namespace sigmagrp
