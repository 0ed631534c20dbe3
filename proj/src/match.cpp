#include "holcheck/match.hpp"

#include "holcheck/error.hpp"

namespace holcheck {

namespace {

std::string join_path(const std::string& path, const char* seg) {
  return path.empty() ? seg : path + "." + seg;
}

void match_rec(const TermPtr& pattern, const TermPtr& target, Instantiation& inst,
               const std::string& path) {
  if (pattern->is_svar()) {
    // The assignment is applied at the top level afterwards, so it may not
    // mention any binder crossed during matching.
    if (!is_closed(target))
      throw MatchFailure(path, "assignment for ?" + pattern->name() +
                                   " mentions a bound variable");
    match_type(subst_type(inst.types, pattern->ty()), type_of(target), inst.types);
    auto it = inst.terms.find(pattern->name());
    if (it != inst.terms.end()) {
      if (!equal(it->second, target)) throw ConflictingAssignment(pattern->name());
      return;
    }
    inst.terms.emplace(pattern->name(), target);
    return;
  }

  if (pattern->kind() != target->kind())
    throw MatchFailure(path, "structure mismatch");

  switch (pattern->kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      if (pattern->name() != target->name())
        throw MatchFailure(path, pattern->name() + " vs " + target->name());
      match_type(subst_type(inst.types, pattern->ty()), target->ty(), inst.types);
      return;
    case Term::Kind::Bound:
      if (pattern->index() != target->index())
        throw MatchFailure(path, "bound index mismatch");
      return;
    case Term::Kind::App:
      match_rec(pattern->fun(), target->fun(), inst, join_path(path, "fun"));
      match_rec(pattern->arg(), target->arg(), inst, join_path(path, "arg"));
      return;
    case Term::Kind::Abs:
      match_type(subst_type(inst.types, pattern->ty()), target->ty(), inst.types);
      match_rec(pattern->body(), target->body(), inst, join_path(path, "body"));
      return;
    case Term::Kind::SVar:
      return;  // handled above
  }
}

}  // namespace

Instantiation first_order_match(const TermPtr& pattern, const TermPtr& target,
                                Instantiation partial) {
  match_rec(pattern, target, partial, "");
  // Matching is syntactic; this guarantees the round-trip law even on
  // targets containing beta redexes.
  if (!equal(subst_norm(pattern, partial), target))
    throw MatchFailure("", "round trip does not reproduce the target");
  return partial;
}

Instantiation first_order_match_list(const std::vector<TermPtr>& patterns,
                                     const std::vector<TermPtr>& targets,
                                     Instantiation partial) {
  if (patterns.size() != targets.size())
    throw LengthMismatch(patterns.size(), targets.size());
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    try {
      partial = first_order_match(patterns[i], targets[i], std::move(partial));
    } catch (const MatchFailure& e) {
      throw MatchFailure("[" + std::to_string(i) + "]" + (e.path.empty() ? "" : "." + e.path),
                         e.what());
    }
  }
  return partial;
}

}  // namespace holcheck
