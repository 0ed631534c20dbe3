#include "holcheck/sequent.hpp"

#include <algorithm>

namespace holcheck {

namespace {

void canonicalize(std::vector<TermPtr>& hyps) {
  std::sort(hyps.begin(), hyps.end(),
            [](const TermPtr& a, const TermPtr& b) { return compare(a, b) < 0; });
  hyps.erase(std::unique(hyps.begin(), hyps.end(),
                         [](const TermPtr& a, const TermPtr& b) { return equal(a, b); }),
             hyps.end());
}

}  // namespace

Sequent::Sequent(std::vector<TermPtr> hyps, TermPtr prop)
    : hyps_(std::move(hyps)), prop_(std::move(prop)) {
  canonicalize(hyps_);
}

bool Sequent::has_hyp(const TermPtr& t) const {
  return std::any_of(hyps_.begin(), hyps_.end(),
                     [&](const TermPtr& h) { return equal(h, t); });
}

bool equal(const Sequent& a, const Sequent& b) {
  if (!a.prop() || !b.prop()) return !a.prop() && !b.prop();
  if (!equal(a.prop(), b.prop())) return false;
  if (a.hyps().size() != b.hyps().size()) return false;
  for (std::size_t i = 0; i < a.hyps().size(); ++i)
    if (!equal(a.hyps()[i], b.hyps()[i])) return false;
  return true;
}

std::vector<TermPtr> union_hyps(const std::vector<TermPtr>& a, const std::vector<TermPtr>& b) {
  std::vector<TermPtr> out = a;
  out.insert(out.end(), b.begin(), b.end());
  canonicalize(out);
  return out;
}

std::vector<TermPtr> remove_hyp(const std::vector<TermPtr>& hyps, const TermPtr& t) {
  std::vector<TermPtr> out;
  out.reserve(hyps.size());
  for (const auto& h : hyps)
    if (!equal(h, t)) out.push_back(h);
  return out;
}

}  // namespace holcheck
