#include "support.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "holcheck/error.hpp"
#include "holcheck/syntax.hpp"

namespace holcheck::test {

std::string source_dir() { return HOLCHECK_SOURCE_DIR; }
std::string cli_path() { return HOLCHECK_BIN; }

const Theory& logic_base() {
  static const Theory thy =
      load_theory(source_dir() + "/theories/logic_base.json", {source_dir() + "/theories"});
  return thy;
}

const Theory& nat_theory() {
  static const Theory thy =
      load_theory(source_dir() + "/theories/nat.json", {source_dir() + "/theories"});
  return thy;
}

RunResult run_cli(const std::string& args) {
  std::string cmd = "cd '" + source_dir() + "' && '" + cli_path() + "' " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string output;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, n);
  int status = pclose(pipe);
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return RunResult{code, std::move(output)};
}

// ------------------------------------------------------------ generators --

namespace {

TypePtr nn_type() { return fun_type(nat_type(), nat_type()); }
TypePtr nnn_type() { return fun_type(nat_type(), nn_type()); }

const VarContext& gen_ctx() {
  static const VarContext ctx = {
      {"p", bool_type()}, {"q", bool_type()}, {"r", bool_type()},
      {"x", nat_type()},  {"y", nat_type()},  {"z", nat_type()},
      {"fn", nn_type()},  {"gn", nnn_type()},
  };
  return ctx;
}

}  // namespace

const VarContext& TermGen::ctx() const { return gen_ctx(); }

std::size_t TermGen::pick(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

TermPtr TermGen::gen(const TypePtr& ty, int depth) {
  binders_.clear();
  return gen_rec(ty, depth);
}

TermPtr TermGen::gen_rec(const TypePtr& ty, int depth) {
  // Leaves: context variables, bound variables, numerals.
  std::vector<TermPtr> leaves;
  for (const auto& [name, vty] : gen_ctx())
    if (equal(vty, ty)) leaves.push_back(Term::var(name, vty));
  for (std::size_t i = 0; i < binders_.size(); ++i)
    if (equal(binders_[binders_.size() - 1 - i], ty)) leaves.push_back(Term::bound(i));
  if (equal(ty, nat_type())) leaves.push_back(mk_numeral(pick(30)));

  if (depth <= 0) {
    if (!leaves.empty()) return leaves[pick(leaves.size())];
    // No leaf of this type: build the smallest function term.
    if (ty->is_fun()) {
      binders_.push_back(ty->domain());
      TermPtr body = gen_rec(ty->range(), 0);
      binders_.pop_back();
      return Term::abs("b" + std::to_string(binders_.size()), ty->domain(), body);
    }
    return mk_numeral(0);
  }

  enum class Choice { Leaf, App, Lambda, Connective, Quantifier, Arith, Equality };
  std::vector<Choice> choices;
  if (!leaves.empty()) choices.insert(choices.end(), 2, Choice::Leaf);
  choices.insert(choices.end(), 2, Choice::App);
  if (ty->is_fun()) choices.insert(choices.end(), 3, Choice::Lambda);
  if (equal(ty, bool_type())) {
    choices.insert(choices.end(), 3, Choice::Connective);
    choices.insert(choices.end(), 1, Choice::Quantifier);
    choices.insert(choices.end(), 2, Choice::Equality);
  }
  if (equal(ty, nat_type())) choices.insert(choices.end(), 3, Choice::Arith);

  switch (choices[pick(choices.size())]) {
    case Choice::Leaf:
      return leaves[pick(leaves.size())];
    case Choice::App: {
      TypePtr arg_ty = pick(2) == 0 ? nat_type() : bool_type();
      TermPtr f = gen_rec(fun_type(arg_ty, ty), depth - 1);
      TermPtr a = gen_rec(arg_ty, depth - 1);
      return Term::app(f, a);
    }
    case Choice::Lambda: {
      binders_.push_back(ty->domain());
      TermPtr body = gen_rec(ty->range(), depth - 1);
      binders_.pop_back();
      return Term::abs("b" + std::to_string(binders_.size()), ty->domain(), body);
    }
    case Choice::Connective: {
      switch (pick(4)) {
        case 0:
          return logic::mk_implies(gen_rec(bool_type(), depth - 1),
                                   gen_rec(bool_type(), depth - 1));
        case 1: {
          TermPtr c = Term::constant(logic::kConj,
                                     fun_type(bool_type(), fun_type(bool_type(), bool_type())));
          return Term::app(Term::app(c, gen_rec(bool_type(), depth - 1)),
                           gen_rec(bool_type(), depth - 1));
        }
        case 2: {
          TermPtr c = Term::constant(logic::kDisj,
                                     fun_type(bool_type(), fun_type(bool_type(), bool_type())));
          return Term::app(Term::app(c, gen_rec(bool_type(), depth - 1)),
                           gen_rec(bool_type(), depth - 1));
        }
        default: {
          TermPtr c = Term::constant(logic::kNeg, fun_type(bool_type(), bool_type()));
          return Term::app(c, gen_rec(bool_type(), depth - 1));
        }
      }
    }
    case Choice::Quantifier: {
      TypePtr bty = pick(2) == 0 ? nat_type() : bool_type();
      binders_.push_back(bty);
      TermPtr body = gen_rec(bool_type(), depth - 1);
      binders_.pop_back();
      const char* q = pick(2) == 0 ? logic::kForall : logic::kExists;
      TermPtr c = Term::constant(q, fun_type(fun_type(bty, bool_type()), bool_type()));
      return Term::app(c, Term::abs("v" + std::to_string(binders_.size()), bty, body));
    }
    case Choice::Arith: {
      const char* op = pick(2) == 0 ? nat::kPlus : nat::kTimes;
      TermPtr c = Term::constant(op, nnn_type());
      return Term::app(Term::app(c, gen_rec(nat_type(), depth - 1)),
                       gen_rec(nat_type(), depth - 1));
    }
    case Choice::Equality: {
      TypePtr ety = pick(2) == 0 ? nat_type() : bool_type();
      return logic::mk_eq(gen_rec(ety, depth - 1), gen_rec(ety, depth - 1), ety);
    }
  }
  return leaves.empty() ? mk_numeral(0) : leaves[pick(leaves.size())];
}

TermPtr gen_poly_term(std::mt19937_64& rng, int depth) {
  auto pick = [&rng](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  if (depth <= 0) {
    if (pick(2) == 0) return mk_numeral(pick(7));
    static const char* vars[] = {"x", "y", "z"};
    return Term::var(vars[pick(3)], nat_type());
  }
  switch (pick(4)) {
    case 0:
      return mk_numeral(pick(7));
    case 1: {
      static const char* vars[] = {"x", "y", "z"};
      return Term::var(vars[pick(3)], nat_type());
    }
    case 2: {
      TermPtr c = Term::constant(nat::kPlus, nnn_type());
      return Term::app(Term::app(c, gen_poly_term(rng, depth - 1)),
                       gen_poly_term(rng, depth - 1));
    }
    default: {
      TermPtr c = Term::constant(nat::kTimes, nnn_type());
      return Term::app(Term::app(c, gen_poly_term(rng, depth - 1)),
                       gen_poly_term(rng, depth - 1));
    }
  }
}

ProofNodePtr gen_proof_dag(std::mt19937_64& rng, const TheoryView& thy) {
  auto pick = [&rng](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  TermGen tg(rng());

  std::vector<TermPtr> props;
  for (int i = 0; i < 4; ++i) props.push_back(tg.gen_bool(static_cast<int>(pick(2))));

  std::vector<ProofNodePtr> pool;
  pool.push_back(node("assume", props[0], {}, thy));
  std::size_t steps = 3 + pick(8);
  for (std::size_t s = 0; s < steps; ++s) {
    switch (pick(5)) {
      case 0:
        pool.push_back(node("assume", props[pick(props.size())], {}, thy));
        break;
      case 1: {
        // Discharge a hypothesis (or vacuously discharge a fresh one).
        const ProofNodePtr& n = pool[pick(pool.size())];
        TermPtr a = n->th().hyps().empty() ? props[pick(props.size())]
                                           : n->th().hyps()[pick(n->th().hyps().size())];
        pool.push_back(node("implies_intro", a, {n}, thy));
        break;
      }
      case 2: {
        // Shared diamond: intro then eliminate with a matching assumption.
        const ProofNodePtr& n = pool[pick(pool.size())];
        TermPtr a = props[pick(props.size())];
        ProofNodePtr intro = node("implies_intro", a, {n}, thy);
        ProofNodePtr asm_a = node("assume", a, {}, thy);
        pool.push_back(node("implies_elim", std::monostate{}, {intro, asm_a}, thy));
        break;
      }
      case 3: {
        TermPtr t = tg.gen_nat(static_cast<int>(pick(2)));
        pool.push_back(node("reflexive", t, {}, thy));
        break;
      }
      default: {
        const ProofNodePtr& n = pool[pick(pool.size())];
        if (logic::is_eq(n->th().prop())) {
          pool.push_back(node("symmetric", std::monostate{}, {n}, thy));
        } else {
          pool.push_back(node("implies_intro", props[pick(props.size())], {n}, thy));
        }
        break;
      }
    }
  }
  return pool.back();
}

// Tiny fixed signature for exhaustive matching tests.
namespace {

TermPtr m_p() { return Term::constant("p", bool_type()); }
TermPtr m_f() { return Term::constant("f", fun_type(bool_type(), bool_type())); }
TermPtr m_h() {
  return Term::constant("h", fun_type(fun_type(bool_type(), bool_type()), bool_type()));
}
TermPtr m_implies(const TermPtr& a, const TermPtr& b) { return logic::mk_implies(a, b); }

bool beta_normal(const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::App:
      return !t->fun()->is_abs() && beta_normal(t->fun()) && beta_normal(t->arg());
    case Term::Kind::Abs:
      return beta_normal(t->body());
    default:
      return true;
  }
}

struct EnumKey {
  std::size_t nodes;
  bool fun_typed;
  std::size_t depth;
  bool with_svars;
  bool operator<(const EnumKey& o) const {
    return std::tie(nodes, fun_typed, depth, with_svars) <
           std::tie(o.nodes, o.fun_typed, o.depth, o.with_svars);
  }
};

// Enumerates terms with exactly `nodes` constructor nodes at binder depth
// `depth`. fun_typed selects bool => bool terms instead of bool terms.
const std::vector<TermPtr>& enum_exact(std::size_t nodes, bool fun_typed, std::size_t depth,
                                       bool with_svars) {
  static std::map<EnumKey, std::vector<TermPtr>> memo;
  EnumKey key{nodes, fun_typed, depth, with_svars};
  auto hit = memo.find(key);
  if (hit != memo.end()) return hit->second;

  std::vector<TermPtr> out;
  if (fun_typed) {
    if (nodes == 1) {
      out.push_back(m_f());
      if (with_svars) out.push_back(Term::svar("F", fun_type(bool_type(), bool_type())));
    }
    // %b::bool. body
    if (nodes >= 2) {
      for (const auto& body : enum_exact(nodes - 1, false, depth + 1, with_svars))
        out.push_back(Term::abs("b", bool_type(), body));
    }
  } else {
    if (nodes == 1) {
      out.push_back(m_p());
      if (with_svars) out.push_back(Term::svar("A", bool_type()));
      for (std::size_t i = 0; i < depth; ++i) out.push_back(Term::bound(i));
    }
    // f t / ?F t / (%b. body) t
    if (nodes >= 2) {
      for (std::size_t fn = 1; fn + 1 <= nodes; ++fn) {
        for (const auto& f : enum_exact(fn, true, depth, with_svars))
          for (const auto& a : enum_exact(nodes - 1 - fn, false, depth, with_svars))
            out.push_back(Term::app(f, a));
      }
    }
    // h F: the only place abstractions survive in beta-normal form
    if (nodes >= 3) {
      for (const auto& f : enum_exact(nodes - 2, true, depth, with_svars))
        out.push_back(Term::app(m_h(), f));
    }
    // a --> b: 3 nodes of spine (two Apps + the constant)
    if (nodes >= 5) {
      for (std::size_t ln = 1; ln + 4 <= nodes; ++ln) {
        for (const auto& a : enum_exact(ln, false, depth, with_svars))
          for (const auto& b : enum_exact(nodes - 3 - ln, false, depth, with_svars))
            out.push_back(m_implies(a, b));
      }
    }
  }
  return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

std::vector<TermPtr> enumerate_match_terms(std::size_t max_nodes, bool with_svars) {
  std::vector<TermPtr> out;
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    for (const auto& t : enum_exact(n, false, 0, with_svars))
      if (beta_normal(t)) out.push_back(t);
  }
  return out;
}

// --------------------------------------------------------------- oracles --

TypePtr oracle_type_of(const TermPtr& t, const Signature& sig) {
  struct Rec {
    const Signature& sig;
    std::vector<TypePtr> binders;
    TypePtr run(const TermPtr& u) {
      switch (u->kind()) {
        case Term::Kind::Var:
        case Term::Kind::SVar:
          return u->ty();
        case Term::Kind::Const: {
          TypePtr declared = sig.constant_type(u->name());
          if (!declared) throw TypeError("", "oracle: unknown constant " + u->name());
          TypeInstantiation inst;
          match_type(declared, u->ty(), inst);
          return u->ty();
        }
        case Term::Kind::Bound:
          if (u->index() >= binders.size()) throw TypeError("", "oracle: loose bound");
          return binders[binders.size() - 1 - u->index()];
        case Term::Kind::App: {
          TypePtr ft = run(u->fun());
          TypePtr at = run(u->arg());
          if (!ft->is_fun() || !equal(ft->domain(), at))
            throw TypeError("", "oracle: bad application");
          return ft->range();
        }
        case Term::Kind::Abs: {
          binders.push_back(u->ty());
          TypePtr bt = run(u->body());
          binders.pop_back();
          return fun_type(u->ty(), bt);
        }
      }
      throw TypeError("", "oracle: malformed");
    }
  };
  Rec rec{sig, {}};
  return rec.run(t);
}

namespace {

TermPtr o_lift(const TermPtr& t, std::size_t inc, std::size_t cutoff) {
  switch (t->kind()) {
    case Term::Kind::Bound:
      return t->index() >= cutoff ? Term::bound(t->index() + inc) : t;
    case Term::Kind::App:
      return Term::app(o_lift(t->fun(), inc, cutoff), o_lift(t->arg(), inc, cutoff));
    case Term::Kind::Abs:
      return Term::abs(t->name(), t->ty(), o_lift(t->body(), inc, cutoff + 1));
    default:
      return t;
  }
}

TermPtr o_subst_bound(const TermPtr& body, const TermPtr& arg, std::size_t depth) {
  switch (body->kind()) {
    case Term::Kind::Bound:
      if (body->index() == depth) return o_lift(arg, depth, 0);
      if (body->index() > depth) return Term::bound(body->index() - 1);
      return body;
    case Term::Kind::App:
      return Term::app(o_subst_bound(body->fun(), arg, depth),
                       o_subst_bound(body->arg(), arg, depth));
    case Term::Kind::Abs:
      return Term::abs(body->name(), body->ty(), o_subst_bound(body->body(), arg, depth + 1));
    default:
      return body;
  }
}

// One leftmost-outermost beta step, if any.
std::optional<TermPtr> o_step(const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::App: {
      if (t->fun()->is_abs()) return o_subst_bound(t->fun()->body(), t->arg(), 0);
      if (auto f = o_step(t->fun())) return Term::app(*f, t->arg());
      if (auto a = o_step(t->arg())) return Term::app(t->fun(), *a);
      return std::nullopt;
    }
    case Term::Kind::Abs: {
      if (auto b = o_step(t->body())) return Term::abs(t->name(), t->ty(), *b);
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

TermPtr oracle_beta_norm(const TermPtr& t) {
  TermPtr cur = t;
  for (int i = 0; i < 100000; ++i) {
    auto next = o_step(cur);
    if (!next) return cur;
    cur = *next;
  }
  throw std::runtime_error("oracle_beta_norm: did not terminate");
}

// Named-term representation for the substitution oracle.
namespace {

struct Named {
  enum class K { Var, SVar, Const, App, Lam } k;
  std::string name;
  TypePtr ty;
  std::shared_ptr<Named> f, a;
};
using NamedPtr = std::shared_ptr<Named>;

NamedPtr mk_named(Named n) { return std::make_shared<Named>(std::move(n)); }

NamedPtr to_named(const TermPtr& t, std::vector<std::string>& stack, int& fresh) {
  switch (t->kind()) {
    case Term::Kind::Var:
      return mk_named({Named::K::Var, t->name(), t->ty(), nullptr, nullptr});
    case Term::Kind::SVar:
      return mk_named({Named::K::SVar, t->name(), t->ty(), nullptr, nullptr});
    case Term::Kind::Const:
      return mk_named({Named::K::Const, t->name(), t->ty(), nullptr, nullptr});
    case Term::Kind::Bound:
      return mk_named(
          {Named::K::Var, stack[stack.size() - 1 - t->index()], nullptr, nullptr, nullptr});
    case Term::Kind::App:
      return mk_named({Named::K::App, "", nullptr, to_named(t->fun(), stack, fresh),
                       to_named(t->arg(), stack, fresh)});
    case Term::Kind::Abs: {
      std::string name = "#b" + std::to_string(fresh++);  // cannot clash with real names
      stack.push_back(name);
      NamedPtr body = to_named(t->body(), stack, fresh);
      stack.pop_back();
      return mk_named({Named::K::Lam, name, t->ty(), body, nullptr});
    }
  }
  return nullptr;
}

void named_free_vars(const NamedPtr& t, std::set<std::string>& out) {
  switch (t->k) {
    case Named::K::Var:
      out.insert(t->name);
      return;
    case Named::K::SVar:
    case Named::K::Const:
      return;
    case Named::K::App:
      named_free_vars(t->f, out);
      named_free_vars(t->a, out);
      return;
    case Named::K::Lam: {
      std::set<std::string> inner;
      named_free_vars(t->f, inner);
      inner.erase(t->name);
      out.insert(inner.begin(), inner.end());
      return;
    }
  }
}

NamedPtr named_rename(const NamedPtr& t, const std::string& from, const std::string& to) {
  switch (t->k) {
    case Named::K::Var:
      if (t->name == from) return mk_named({Named::K::Var, to, t->ty, nullptr, nullptr});
      return t;
    case Named::K::SVar:
    case Named::K::Const:
      return t;
    case Named::K::App:
      return mk_named({Named::K::App, "", nullptr, named_rename(t->f, from, to),
                       named_rename(t->a, from, to)});
    case Named::K::Lam:
      if (t->name == from) return t;  // shadowed
      return mk_named({Named::K::Lam, t->name, t->ty, named_rename(t->f, from, to), nullptr});
  }
  return t;
}

NamedPtr named_subst(const NamedPtr& t, const std::map<std::string, NamedPtr>& inst, int& fresh) {
  switch (t->k) {
    case Named::K::Var:
    case Named::K::Const:
      return t;
    case Named::K::SVar: {
      auto it = inst.find(t->name);
      return it == inst.end() ? t : it->second;
    }
    case Named::K::App:
      return mk_named({Named::K::App, "", nullptr, named_subst(t->f, inst, fresh),
                       named_subst(t->a, inst, fresh)});
    case Named::K::Lam: {
      // Rename the binder when any replacement's free variables contain it.
      std::set<std::string> replacement_frees;
      for (const auto& [name, rep] : inst) named_free_vars(rep, replacement_frees);
      NamedPtr body = t->f;
      std::string bname = t->name;
      if (replacement_frees.count(bname)) {
        std::string renamed = "#r" + std::to_string(fresh++);
        body = named_rename(body, bname, renamed);
        bname = renamed;
      }
      return mk_named({Named::K::Lam, bname, t->ty, named_subst(body, inst, fresh), nullptr});
    }
  }
  return t;
}

TermPtr from_named(const NamedPtr& t, std::vector<std::string>& stack) {
  switch (t->k) {
    case Named::K::Var: {
      for (std::size_t i = 0; i < stack.size(); ++i)
        if (stack[stack.size() - 1 - i] == t->name) return Term::bound(i);
      return Term::var(t->name, t->ty);
    }
    case Named::K::SVar:
      return Term::svar(t->name, t->ty);
    case Named::K::Const:
      return Term::constant(t->name, t->ty);
    case Named::K::App: {
      TermPtr f = from_named(t->f, stack);
      TermPtr a = from_named(t->a, stack);
      return Term::app(f, a);
    }
    case Named::K::Lam: {
      stack.push_back(t->name);
      TermPtr body = from_named(t->f, stack);
      stack.pop_back();
      return Term::abs("v", t->ty, body);
    }
  }
  return nullptr;
}

}  // namespace

TermPtr oracle_subst_named(const TermInstantiation& inst, const TermPtr& t) {
  int fresh = 0;
  std::vector<std::string> stack;
  NamedPtr named = to_named(t, stack, fresh);
  std::map<std::string, NamedPtr> ninst;
  for (const auto& [name, rep] : inst) ninst.emplace(name, to_named(rep, stack, fresh));
  NamedPtr result = named_subst(named, ninst, fresh);
  stack.clear();
  return from_named(result, stack);
}

namespace {

// Type of a closed term, oracle-side (no signature checks).
TypePtr oracle_type_of_shallow(const TermPtr& t) {
  struct Rec {
    std::vector<TypePtr> binders;
    TypePtr run(const TermPtr& u) {
      switch (u->kind()) {
        case Term::Kind::Var:
        case Term::Kind::SVar:
        case Term::Kind::Const:
          return u->ty();
        case Term::Kind::Bound:
          return binders[binders.size() - 1 - u->index()];
        case Term::Kind::App: {
          TypePtr ft = run(u->fun());
          return ft->range();
        }
        case Term::Kind::Abs: {
          binders.push_back(u->ty());
          TypePtr bt = run(u->body());
          binders.pop_back();
          return fun_type(u->ty(), bt);
        }
      }
      return nullptr;
    }
  };
  Rec rec;
  return rec.run(t);
}

void closed_subterms(const TermPtr& t, std::vector<TermPtr>& out) {
  bool seen = false;
  for (const auto& u : out)
    if (equal(u, t)) {
      seen = true;
      break;
    }
  if (!seen && is_closed(t)) out.push_back(t);
  switch (t->kind()) {
    case Term::Kind::App:
      closed_subterms(t->fun(), out);
      closed_subterms(t->arg(), out);
      return;
    case Term::Kind::Abs:
      closed_subterms(t->body(), out);
      return;
    default:
      return;
  }
}

// Oracle-side substitution of schematic variables (plain structural
// replacement; replacements are closed).
TermPtr o_subst_svars(const TermPtr& t, const TermInstantiation& inst, bool& type_ok) {
  switch (t->kind()) {
    case Term::Kind::SVar: {
      auto it = inst.find(t->name());
      if (it == inst.end()) return t;
      if (!equal(oracle_type_of_shallow(it->second), t->ty())) type_ok = false;
      return it->second;
    }
    case Term::Kind::App:
      return Term::app(o_subst_svars(t->fun(), inst, type_ok),
                       o_subst_svars(t->arg(), inst, type_ok));
    case Term::Kind::Abs:
      return Term::abs(t->name(), t->ty(), o_subst_svars(t->body(), inst, type_ok));
    default:
      return t;
  }
}

}  // namespace

std::optional<TermInstantiation> oracle_match(const TermPtr& pattern, const TermPtr& target) {
  std::vector<TermPtr> svars;
  collect_svars(pattern, svars);
  std::vector<TermPtr> candidates;
  closed_subterms(target, candidates);

  std::vector<std::size_t> idx(svars.size(), 0);
  while (true) {
    TermInstantiation inst;
    bool type_ok = true;
    for (std::size_t i = 0; i < svars.size(); ++i) {
      const TermPtr& cand = candidates[idx[i]];
      if (!equal(oracle_type_of_shallow(cand), svars[i]->ty())) type_ok = false;
      inst.emplace(svars[i]->name(), cand);
    }
    if (type_ok) {
      // First-order acceptance: the substituted pattern must reproduce the
      // target structurally.
      bool subst_type_ok = true;
      TermPtr substituted = o_subst_svars(pattern, inst, subst_type_ok);
      if (subst_type_ok && equal(substituted, target)) return inst;
    }
    if (svars.empty()) return std::nullopt;
    // Next assignment tuple.
    std::size_t k = 0;
    while (k < idx.size()) {
      if (++idx[k] < candidates.size()) break;
      idx[k] = 0;
      ++k;
    }
    if (k == idx.size()) return std::nullopt;
  }
}

std::optional<OraclePoly> oracle_poly(const TermPtr& t) {
  if (auto v = numeral_value(t)) {
    OraclePoly p;
    if (*v != 0) p[{}] = *v;
    return p;
  }
  if (t->is_var() && equal(t->ty(), nat_type())) {
    OraclePoly p;
    p[{t->name()}] = 1;
    return p;
  }
  if (logic::is_binop(t, nat::kPlus)) {
    auto a = oracle_poly(logic::binop_lhs(t));
    auto b = oracle_poly(logic::binop_rhs(t));
    if (!a || !b) return std::nullopt;
    for (const auto& [m, c] : *b) (*a)[m] += c;
    for (auto it = a->begin(); it != a->end();)
      it = it->second == 0 ? a->erase(it) : std::next(it);
    return a;
  }
  if (logic::is_binop(t, nat::kTimes)) {
    auto a = oracle_poly(logic::binop_lhs(t));
    auto b = oracle_poly(logic::binop_rhs(t));
    if (!a || !b) return std::nullopt;
    OraclePoly out;
    for (const auto& [m1, c1] : *a)
      for (const auto& [m2, c2] : *b) {
        OracleMonomial m = m1;
        m.insert(m.end(), m2.begin(), m2.end());
        std::sort(m.begin(), m.end());
        out[m] += c1 * c2;
      }
    for (auto it = out.begin(); it != out.end();)
      it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  }
  return std::nullopt;
}

}  // namespace holcheck::test
