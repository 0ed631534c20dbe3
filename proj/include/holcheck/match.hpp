#pragma once

#include <vector>

#include "holcheck/kernel.hpp"

namespace holcheck {

// First-order matching: extends `partial` so that
// subst_norm(pattern, result) == target. The pattern may contain schematic
// variables and type variables; the target must contain neither. A schematic
// variable matched under a binder may not be assigned a term mentioning that
// binder's variable. Throws MatchFailure / ConflictingAssignment.
Instantiation first_order_match(const TermPtr& pattern, const TermPtr& target,
                                Instantiation partial = {});

// Left-to-right fold of first_order_match over the two lists.
// Throws LengthMismatch when the lists differ in length; MatchFailure
// reports the failing index.
Instantiation first_order_match_list(const std::vector<TermPtr>& patterns,
                                     const std::vector<TermPtr>& targets,
                                     Instantiation partial = {});

}  // namespace holcheck
