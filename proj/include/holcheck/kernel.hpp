#pragma once

#include <string>
#include <variant>
#include <vector>

#include "holcheck/sequent.hpp"
#include "holcheck/signature.hpp"
#include "holcheck/term.hpp"

namespace holcheck {

class TheoryView;  // theory.hpp

// Schematic-variable name -> replacement term.
using TermInstantiation = std::map<std::string, TermPtr>;

// A combined type + term instantiation, applied type-first.
struct Instantiation {
  TypeInstantiation types;
  TermInstantiation terms;

  bool empty() const { return types.empty() && terms.empty(); }
};

// Computes the type of t, verifying everything against the signature:
// constants must be declared with a matching general type, applications must
// be well-typed, Bound indices in range, type constructors applied at their
// declared arities. Throws TypeError with a path into the term.
TypePtr type_of(const TermPtr& t, const SigView& sig);

// Structural type computation for terms already known well-typed (no
// signature lookups). Throws TypeError on gross malformation only.
TypePtr type_of(const TermPtr& t);

TermPtr subst_type(const TypeInstantiation& tyinst, const TermPtr& t);
// Replaces schematic variables; replacements must be closed and must carry
// exactly the schematic variable's type (InstantiationTypeMismatch).
TermPtr subst_term(const TermInstantiation& inst, const TermPtr& t);
// Beta-normal form; simple types guarantee termination.
TermPtr beta_norm(const TermPtr& t);
// subst_type, then subst_term, then beta_norm.
TermPtr subst_norm(const TermPtr& t, const Instantiation& instsp);

// Arguments a rule application can carry.
using RuleArgs = std::variant<std::monostate, TermPtr, Instantiation, std::string, Sequent>;

// Shape of a rule's argument, used to parse and print serialized args.
enum class ArgShape { None, Term, Variable, Inst, TheoremName, SequentArg };

bool is_primitive_rule(const std::string& name);
const std::vector<std::string>& primitive_rules();
ArgShape prim_rule_arg_shape(const std::string& rule);
std::size_t prim_rule_arity(const std::string& rule);

// Applies one primitive derivation rule. `thy` is consulted only by the
// `theorem` rule. Throws RuleMismatch / UnknownTheorem.
Sequent apply_prim_rule(const std::string& rule, const RuleArgs& args,
                        const std::vector<Sequent>& prevs, const TheoryView& thy);

}  // namespace holcheck
