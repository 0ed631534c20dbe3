#include "holcheck/kernel.hpp"

#include <array>
#include <map>

#include "holcheck/error.hpp"
#include "holcheck/theory.hpp"

namespace holcheck {

namespace {

std::string join_path(const std::string& path, const char* seg) {
  return path.empty() ? seg : path + "." + seg;
}

void validate_type(const TypePtr& ty, const SigView& sig, const std::string& path) {
  if (ty->is_var()) return;
  auto arity = sig.type_arity(ty->name());
  if (!arity) throw TypeError(path, "unknown type constructor " + ty->name());
  if (*arity != ty->args().size())
    throw TypeError(path, "type constructor " + ty->name() + " expects " +
                              std::to_string(*arity) + " arguments, got " +
                              std::to_string(ty->args().size()));
  for (const auto& a : ty->args()) validate_type(a, sig, path);
}

TypePtr type_of_checked(const TermPtr& t, const SigView& sig, std::vector<TypePtr>& bound,
                        const std::string& path) {
  switch (t->kind()) {
    case Term::Kind::Var:
    case Term::Kind::SVar:
      validate_type(t->ty(), sig, path);
      return t->ty();
    case Term::Kind::Const: {
      TypePtr declared = sig.constant_type(t->name());
      if (!declared) throw TypeError(path, "unknown constant " + t->name());
      validate_type(t->ty(), sig, path);
      TypeInstantiation tyinst;
      try {
        match_type(declared, t->ty(), tyinst);
      } catch (const HolError&) {
        throw TypeError(path, "constant " + t->name() + " used at a type that is not an instance of its declaration");
      }
      return t->ty();
    }
    case Term::Kind::Bound:
      if (t->index() >= bound.size())
        throw TypeError(path, "bound index " + std::to_string(t->index()) + " out of range");
      return bound[bound.size() - 1 - t->index()];
    case Term::Kind::App: {
      TypePtr ft = type_of_checked(t->fun(), sig, bound, join_path(path, "fun"));
      TypePtr at = type_of_checked(t->arg(), sig, bound, join_path(path, "arg"));
      if (!ft->is_fun()) throw TypeError(path, "application of a non-function");
      if (!equal(ft->domain(), at))
        throw TypeError(path, "argument type does not match function domain");
      return ft->range();
    }
    case Term::Kind::Abs: {
      validate_type(t->ty(), sig, path);
      bound.push_back(t->ty());
      TypePtr bt = type_of_checked(t->body(), sig, bound, join_path(path, "body"));
      bound.pop_back();
      return fun_type(t->ty(), bt);
    }
  }
  throw TypeError(path, "malformed term");
}

TypePtr type_of_fast(const TermPtr& t, std::vector<TypePtr>& bound) {
  switch (t->kind()) {
    case Term::Kind::Var:
    case Term::Kind::SVar:
    case Term::Kind::Const:
      return t->ty();
    case Term::Kind::Bound:
      if (t->index() >= bound.size()) throw TypeError("", "bound index out of range");
      return bound[bound.size() - 1 - t->index()];
    case Term::Kind::App: {
      TypePtr ft = type_of_fast(t->fun(), bound);
      if (!ft->is_fun()) throw TypeError("", "application of a non-function");
      return ft->range();
    }
    case Term::Kind::Abs: {
      bound.push_back(t->ty());
      TypePtr bt = type_of_fast(t->body(), bound);
      bound.pop_back();
      return fun_type(t->ty(), bt);
    }
  }
  throw TypeError("", "malformed term");
}

}  // namespace

TypePtr type_of(const TermPtr& t, const SigView& sig) {
  std::vector<TypePtr> bound;
  return type_of_checked(t, sig, bound, "");
}

TypePtr type_of(const TermPtr& t) {
  std::vector<TypePtr> bound;
  return type_of_fast(t, bound);
}

TermPtr subst_type(const TypeInstantiation& tyinst, const TermPtr& t) {
  if (tyinst.empty()) return t;
  switch (t->kind()) {
    case Term::Kind::Var:
      return Term::var(t->name(), subst_type(tyinst, t->ty()));
    case Term::Kind::SVar:
      return Term::svar(t->name(), subst_type(tyinst, t->ty()));
    case Term::Kind::Const:
      return Term::constant(t->name(), subst_type(tyinst, t->ty()));
    case Term::Kind::Bound:
      return t;
    case Term::Kind::App:
      return Term::app(subst_type(tyinst, t->fun()), subst_type(tyinst, t->arg()));
    case Term::Kind::Abs:
      return Term::abs(t->name(), subst_type(tyinst, t->ty()), subst_type(tyinst, t->body()));
  }
  return t;
}

TermPtr subst_term(const TermInstantiation& inst, const TermPtr& t) {
  if (inst.empty()) return t;
  switch (t->kind()) {
    case Term::Kind::SVar: {
      auto it = inst.find(t->name());
      if (it == inst.end()) return t;
      if (!is_closed(it->second))
        throw HolError("subst_term: replacement for ?" + t->name() +
                       " has a loose bound variable");
      if (!equal(type_of(it->second), t->ty())) throw InstantiationTypeMismatch(t->name());
      return it->second;
    }
    case Term::Kind::Var:
    case Term::Kind::Const:
    case Term::Kind::Bound:
      return t;
    case Term::Kind::App:
      return Term::app(subst_term(inst, t->fun()), subst_term(inst, t->arg()));
    case Term::Kind::Abs:
      return Term::abs(t->name(), t->ty(), subst_term(inst, t->body()));
  }
  return t;
}

TermPtr beta_norm(const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::Var:
    case Term::Kind::SVar:
    case Term::Kind::Const:
    case Term::Kind::Bound:
      return t;
    case Term::Kind::Abs: {
      TermPtr b = beta_norm(t->body());
      return b.get() == t->body().get() ? t : Term::abs(t->name(), t->ty(), std::move(b));
    }
    case Term::Kind::App: {
      TermPtr f = beta_norm(t->fun());
      if (f->is_abs()) return beta_norm(instantiate_bound(f->body(), t->arg()));
      TermPtr a = beta_norm(t->arg());
      return f.get() == t->fun().get() && a.get() == t->arg().get()
                 ? t
                 : Term::app(std::move(f), std::move(a));
    }
  }
  return t;
}

TermPtr subst_norm(const TermPtr& t, const Instantiation& instsp) {
  return beta_norm(subst_term(instsp.terms, subst_type(instsp.types, t)));
}

namespace {

struct RuleInfo {
  ArgShape shape;
  std::size_t arity;
};

const std::map<std::string, RuleInfo>& rule_table() {
  static const std::map<std::string, RuleInfo> table = {
      {"assume", {ArgShape::Term, 0}},
      {"implies_intro", {ArgShape::Term, 1}},
      {"implies_elim", {ArgShape::None, 2}},
      {"forall_intro", {ArgShape::Variable, 1}},
      {"forall_elim", {ArgShape::Term, 1}},
      {"reflexive", {ArgShape::Term, 0}},
      {"symmetric", {ArgShape::None, 1}},
      {"transitive", {ArgShape::None, 2}},
      {"combination", {ArgShape::None, 2}},
      {"abstraction", {ArgShape::Variable, 1}},
      {"beta_conv", {ArgShape::Term, 0}},
      {"equal_elim", {ArgShape::None, 2}},
      {"subst_type", {ArgShape::Inst, 1}},
      {"substitution", {ArgShape::Inst, 1}},
      {"theorem", {ArgShape::TheoremName, 0}},
      {"sorry", {ArgShape::SequentArg, 0}},
  };
  return table;
}

const TermPtr& want_term(const std::string& rule, const RuleArgs& args) {
  const TermPtr* t = std::get_if<TermPtr>(&args);
  if (!t || !*t) throw RuleMismatch(rule, "expected a term argument");
  return *t;
}

const TermPtr& want_variable(const std::string& rule, const RuleArgs& args) {
  const TermPtr& t = want_term(rule, args);
  if (!t->is_var()) throw RuleMismatch(rule, "expected a variable argument");
  return t;
}

const Instantiation& want_inst(const std::string& rule, const RuleArgs& args) {
  const Instantiation* i = std::get_if<Instantiation>(&args);
  if (!i) throw RuleMismatch(rule, "expected an instantiation argument");
  return *i;
}

// Operand type of an equation, read off the equals constant.
TypePtr eq_operand_type(const TermPtr& eq) {
  return eq->fun()->fun()->ty()->domain();
}

TermPtr require_eq_prop(const std::string& rule, const Sequent& seq) {
  if (!logic::is_eq(seq.prop())) throw RuleMismatch(rule, "premise is not an equation");
  return seq.prop();
}

}  // namespace

bool is_primitive_rule(const std::string& name) { return rule_table().count(name) > 0; }

const std::vector<std::string>& primitive_rules() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, info] : rule_table()) out.push_back(name);
    return out;
  }();
  return names;
}

ArgShape prim_rule_arg_shape(const std::string& rule) {
  auto it = rule_table().find(rule);
  if (it == rule_table().end()) throw RuleMismatch(rule, "unknown rule");
  return it->second.shape;
}

std::size_t prim_rule_arity(const std::string& rule) {
  auto it = rule_table().find(rule);
  if (it == rule_table().end()) throw RuleMismatch(rule, "unknown rule");
  return it->second.arity;
}

Sequent apply_prim_rule(const std::string& rule, const RuleArgs& args,
                        const std::vector<Sequent>& prevs, const TheoryView& thy) {
  auto it = rule_table().find(rule);
  if (it == rule_table().end()) throw RuleMismatch(rule, "unknown rule");
  if (prevs.size() != it->second.arity)
    throw RuleMismatch(rule, "expected " + std::to_string(it->second.arity) +
                                 " premises, got " + std::to_string(prevs.size()));

  if (rule == "assume") {
    const TermPtr& a = want_term(rule, args);
    if (!equal(type_of(a), bool_type())) throw RuleMismatch(rule, "assumption is not boolean");
    return Sequent({a}, a);
  }

  if (rule == "implies_intro") {
    const TermPtr& a = want_term(rule, args);
    if (!equal(type_of(a), bool_type()))
      throw RuleMismatch(rule, "discharged term is not boolean");
    return Sequent(remove_hyp(prevs[0].hyps(), a), logic::mk_implies(a, prevs[0].prop()));
  }

  if (rule == "implies_elim") {
    if (!logic::is_implies(prevs[0].prop()))
      throw RuleMismatch(rule, "first premise is not an implication");
    if (!equal(logic::implies_assum(prevs[0].prop()), prevs[1].prop()))
      throw RuleMismatch(rule, "second premise does not match the antecedent");
    return Sequent(union_hyps(prevs[0].hyps(), prevs[1].hyps()),
                   logic::implies_concl(prevs[0].prop()));
  }

  if (rule == "forall_intro") {
    const TermPtr& x = want_variable(rule, args);
    for (const auto& h : prevs[0].hyps())
      if (occurs_var(x, h)) throw RuleMismatch(rule, "variable " + x->name() + " free in hypotheses");
    return Sequent(prevs[0].hyps(), logic::mk_forall(x, prevs[0].prop()));
  }

  if (rule == "forall_elim") {
    const TermPtr& t = want_term(rule, args);
    if (!logic::is_forall(prevs[0].prop()))
      throw RuleMismatch(rule, "premise is not a universal");
    const TermPtr& lam = prevs[0].prop()->arg();
    if (!equal(type_of(t), lam->ty()))
      throw RuleMismatch(rule, "instance term has the wrong type");
    return Sequent(prevs[0].hyps(), instantiate_bound(lam->body(), t));
  }

  if (rule == "reflexive") {
    const TermPtr& t = want_term(rule, args);
    return Sequent({}, logic::mk_eq(t, t, type_of(t)));
  }

  if (rule == "symmetric") {
    TermPtr eq = require_eq_prop(rule, prevs[0]);
    return Sequent(prevs[0].hyps(),
                   logic::mk_eq(logic::eq_rhs(eq), logic::eq_lhs(eq), eq_operand_type(eq)));
  }

  if (rule == "transitive") {
    TermPtr e1 = require_eq_prop(rule, prevs[0]);
    TermPtr e2 = require_eq_prop(rule, prevs[1]);
    if (!equal(logic::eq_rhs(e1), logic::eq_lhs(e2)))
      throw RuleMismatch(rule, "middle terms differ");
    return Sequent(union_hyps(prevs[0].hyps(), prevs[1].hyps()),
                   logic::mk_eq(logic::eq_lhs(e1), logic::eq_rhs(e2), eq_operand_type(e1)));
  }

  if (rule == "combination") {
    TermPtr ef = require_eq_prop(rule, prevs[0]);
    TermPtr ea = require_eq_prop(rule, prevs[1]);
    TypePtr fty = eq_operand_type(ef);
    if (!fty->is_fun()) throw RuleMismatch(rule, "first premise does not equate functions");
    if (!equal(fty->domain(), eq_operand_type(ea)))
      throw RuleMismatch(rule, "argument equation type does not match function domain");
    return Sequent(union_hyps(prevs[0].hyps(), prevs[1].hyps()),
                   logic::mk_eq(Term::app(logic::eq_lhs(ef), logic::eq_lhs(ea)),
                                Term::app(logic::eq_rhs(ef), logic::eq_rhs(ea)), fty->range()));
  }

  if (rule == "abstraction") {
    const TermPtr& x = want_variable(rule, args);
    TermPtr eq = require_eq_prop(rule, prevs[0]);
    for (const auto& h : prevs[0].hyps())
      if (occurs_var(x, h)) throw RuleMismatch(rule, "variable " + x->name() + " free in hypotheses");
    TermPtr lhs = Term::abs(x->name(), x->ty(), abstract_over(x, logic::eq_lhs(eq)));
    TermPtr rhs = Term::abs(x->name(), x->ty(), abstract_over(x, logic::eq_rhs(eq)));
    return Sequent(prevs[0].hyps(),
                   logic::mk_eq(lhs, rhs, fun_type(x->ty(), eq_operand_type(eq))));
  }

  if (rule == "beta_conv") {
    const TermPtr& t = want_term(rule, args);
    if (!t->is_app() || !t->fun()->is_abs())
      throw RuleMismatch(rule, "argument is not a beta redex");
    if (!equal(type_of(t->arg()), t->fun()->ty()))
      throw RuleMismatch(rule, "redex argument has the wrong type");
    TermPtr reduced = instantiate_bound(t->fun()->body(), t->arg());
    return Sequent({}, logic::mk_eq(t, reduced, type_of(reduced)));
  }

  if (rule == "equal_elim") {
    TermPtr eq = require_eq_prop(rule, prevs[0]);
    if (!equal(eq_operand_type(eq), bool_type()))
      throw RuleMismatch(rule, "first premise is not a boolean equation");
    if (!equal(logic::eq_lhs(eq), prevs[1].prop()))
      throw RuleMismatch(rule, "second premise does not match the left-hand side");
    return Sequent(union_hyps(prevs[0].hyps(), prevs[1].hyps()), logic::eq_rhs(eq));
  }

  if (rule == "subst_type") {
    const Instantiation& inst = want_inst(rule, args);
    if (!inst.terms.empty()) throw RuleMismatch(rule, "expected a type instantiation only");
    std::vector<TermPtr> hyps;
    for (const auto& h : prevs[0].hyps()) hyps.push_back(subst_type(inst.types, h));
    return Sequent(std::move(hyps), subst_type(inst.types, prevs[0].prop()));
  }

  if (rule == "substitution") {
    const Instantiation& inst = want_inst(rule, args);
    if (!inst.types.empty()) throw RuleMismatch(rule, "expected a term instantiation only");
    std::vector<TermPtr> hyps;
    for (const auto& h : prevs[0].hyps()) hyps.push_back(beta_norm(subst_term(inst.terms, h)));
    return Sequent(std::move(hyps), beta_norm(subst_term(inst.terms, prevs[0].prop())));
  }

  if (rule == "theorem") {
    const std::string* name = std::get_if<std::string>(&args);
    if (!name) throw RuleMismatch(rule, "expected a theorem name");
    return thy.get_theorem(*name, /*schematic=*/true);
  }

  if (rule == "sorry") {
    const Sequent* seq = std::get_if<Sequent>(&args);
    if (!seq || !seq->prop()) throw RuleMismatch(rule, "expected a sequent argument");
    return *seq;
  }

  throw RuleMismatch(rule, "unknown rule");
}

}  // namespace holcheck
