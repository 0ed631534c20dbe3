#pragma once

#include <vector>

#include "holcheck/term.hpp"

namespace holcheck {

// A proved judgment A1, ..., An |- C. Hypotheses form a set: stored sorted
// under the total term order with duplicates removed, so vector equality is
// set equality and printing is deterministic.
class Sequent {
 public:
  Sequent() = default;
  Sequent(std::vector<TermPtr> hyps, TermPtr prop);

  const std::vector<TermPtr>& hyps() const { return hyps_; }
  const TermPtr& prop() const { return prop_; }
  bool has_hyp(const TermPtr& t) const;

 private:
  std::vector<TermPtr> hyps_;
  TermPtr prop_;
};

bool equal(const Sequent& a, const Sequent& b);

std::vector<TermPtr> union_hyps(const std::vector<TermPtr>& a, const std::vector<TermPtr>& b);
std::vector<TermPtr> remove_hyp(const std::vector<TermPtr>& hyps, const TermPtr& t);

}  // namespace holcheck
