#pragma once

#include "sigmagrp/perm_group.hpp"

namespace sigmagrp {

/// True iff every conjugate of an h-generator by a g-generator stays in h.
/// For finite groups that is exactly normality of h in g. Throws when h is
/// not a subgroup of g.
bool is_normal_in(const PermGroup& h, const PermGroup& g);

/// A group together with a normal subgroup, standing for the quotient
/// big/small. Both containment and normality are checked at construction.
class Section {
public:
  Section(PermGroup big, PermGroup small);

  const PermGroup& big() const { return big_; }
  const PermGroup& small() const { return small_; }

private:
  PermGroup big_;
  PermGroup small_;
};

}  // namespace sigmagrp
