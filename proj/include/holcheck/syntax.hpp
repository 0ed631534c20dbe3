#pragma once

#include <map>
#include <string>
#include <string_view>

#include "holcheck/kernel.hpp"
#include "holcheck/sequent.hpp"
#include "holcheck/signature.hpp"

namespace holcheck {

// Typing context for the free variables of a term string (a theorem item's
// `vars`). Also consulted for the types of schematic variables.
using VarContext = std::map<std::string, TypePtr>;

// Grammar summary (full description in docs/grammar.md):
//   types   'a | name | T name | (T1, T2) name | T1 => T2   (=> right-assoc)
//   terms   --> (25, right) < | (30, right) < & (35, right)
//           < ~ (prefix, 40) and = (50, non-assoc)
//           < + (65, left) < * (70, left) < application < atoms
//           binders %x::T. b (lambda), !x::T. b, ?x::T. b; ?name alone is a
//           schematic variable; decimal numerals abbreviate binary numerals.
// Binder type annotations may be omitted when inferable; inference solves
// simple-type constraints and rejects ambiguous strings.

TypePtr parse_type(std::string_view s, const SigView& sig);
TermPtr parse_term(std::string_view s, const VarContext& ctx, const SigView& sig);
Sequent parse_sequent(std::string_view s, const VarContext& ctx, const SigView& sig);
Instantiation parse_instantiation(std::string_view s, const VarContext& ctx, const SigView& sig);

std::string print_type(const TypePtr& ty);
std::string print_term(const TermPtr& t);
std::string print_sequent(const Sequent& seq);
std::string print_instantiation(const Instantiation& inst);

// Serialized rule arguments, in the printed forms above. `Variable`
// arguments accept `name` (looked up in ctx) or `name::type`.
RuleArgs parse_rule_args(ArgShape shape, std::string_view s, const VarContext& ctx,
                         const SigView& sig);
std::string print_rule_args(ArgShape shape, const RuleArgs& args);

}  // namespace holcheck
