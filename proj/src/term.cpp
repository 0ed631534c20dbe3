#include "holcheck/term.hpp"

#include <algorithm>

#include "holcheck/error.hpp"

namespace holcheck {

TermPtr Term::var(std::string name, TypePtr ty) {
  return TermPtr(new Term(Kind::Var, std::move(name), std::move(ty), nullptr, nullptr, 0));
}

TermPtr Term::svar(std::string name, TypePtr ty) {
  return TermPtr(new Term(Kind::SVar, std::move(name), std::move(ty), nullptr, nullptr, 0));
}

TermPtr Term::constant(std::string name, TypePtr ty) {
  return TermPtr(new Term(Kind::Const, std::move(name), std::move(ty), nullptr, nullptr, 0));
}

TermPtr Term::app(TermPtr fun, TermPtr arg) {
  return TermPtr(new Term(Kind::App, {}, nullptr, std::move(fun), std::move(arg), 0));
}

TermPtr Term::abs(std::string name_hint, TypePtr bound_ty, TermPtr body) {
  return TermPtr(
      new Term(Kind::Abs, std::move(name_hint), std::move(bound_ty), std::move(body), nullptr, 0));
}

TermPtr Term::bound(std::size_t index) {
  return TermPtr(new Term(Kind::Bound, {}, nullptr, nullptr, nullptr, index));
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Term::Kind::Var:
    case Term::Kind::SVar:
    case Term::Kind::Const:
      return a->name() == b->name() && equal(a->ty(), b->ty());
    case Term::Kind::App:
      return equal(a->fun(), b->fun()) && equal(a->arg(), b->arg());
    case Term::Kind::Abs:
      // Name hint ignored: equality is alpha-equivalence.
      return equal(a->ty(), b->ty()) && equal(a->body(), b->body());
    case Term::Kind::Bound:
      return a->index() == b->index();
  }
  return false;
}

int compare(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind() != b->kind()) return a->kind() < b->kind() ? -1 : 1;
  switch (a->kind()) {
    case Term::Kind::Var:
    case Term::Kind::SVar:
    case Term::Kind::Const: {
      if (int c = a->name().compare(b->name())) return c < 0 ? -1 : 1;
      return compare(a->ty(), b->ty());
    }
    case Term::Kind::App: {
      if (int c = compare(a->fun(), b->fun())) return c;
      return compare(a->arg(), b->arg());
    }
    case Term::Kind::Abs: {
      if (int c = compare(a->ty(), b->ty())) return c;
      return compare(a->body(), b->body());
    }
    case Term::Kind::Bound:
      return a->index() < b->index() ? -1 : (a->index() > b->index() ? 1 : 0);
  }
  return 0;
}

TermPtr lift(const TermPtr& t, std::size_t inc, std::size_t cutoff) {
  if (inc == 0) return t;
  switch (t->kind()) {
    case Term::Kind::Var:
    case Term::Kind::SVar:
    case Term::Kind::Const:
      return t;
    case Term::Kind::Bound:
      return t->index() >= cutoff ? Term::bound(t->index() + inc) : t;
    case Term::Kind::App: {
      TermPtr f = lift(t->fun(), inc, cutoff);
      TermPtr a = lift(t->arg(), inc, cutoff);
      return f.get() == t->fun().get() && a.get() == t->arg().get() ? t
                                                                    : Term::app(std::move(f), std::move(a));
    }
    case Term::Kind::Abs: {
      TermPtr b = lift(t->body(), inc, cutoff + 1);
      return b.get() == t->body().get() ? t : Term::abs(t->name(), t->ty(), std::move(b));
    }
  }
  return t;
}

namespace {

TermPtr instantiate_rec(const TermPtr& body, const TermPtr& arg, std::size_t depth) {
  switch (body->kind()) {
    case Term::Kind::Var:
    case Term::Kind::SVar:
    case Term::Kind::Const:
      return body;
    case Term::Kind::Bound:
      if (body->index() == depth) return lift(arg, depth, 0);
      if (body->index() > depth) return Term::bound(body->index() - 1);
      return body;
    case Term::Kind::App: {
      TermPtr f = instantiate_rec(body->fun(), arg, depth);
      TermPtr a = instantiate_rec(body->arg(), arg, depth);
      return f.get() == body->fun().get() && a.get() == body->arg().get()
                 ? body
                 : Term::app(std::move(f), std::move(a));
    }
    case Term::Kind::Abs: {
      TermPtr b = instantiate_rec(body->body(), arg, depth + 1);
      return b.get() == body->body().get() ? body : Term::abs(body->name(), body->ty(), std::move(b));
    }
  }
  return body;
}

TermPtr abstract_rec(const TermPtr& v, const TermPtr& t, std::size_t depth) {
  switch (t->kind()) {
    case Term::Kind::Var:
      if (t->name() == v->name() && equal(t->ty(), v->ty())) return Term::bound(depth);
      return t;
    case Term::Kind::SVar:
    case Term::Kind::Const:
    case Term::Kind::Bound:
      return t;
    case Term::Kind::App: {
      TermPtr f = abstract_rec(v, t->fun(), depth);
      TermPtr a = abstract_rec(v, t->arg(), depth);
      return f.get() == t->fun().get() && a.get() == t->arg().get() ? t
                                                                    : Term::app(std::move(f), std::move(a));
    }
    case Term::Kind::Abs: {
      TermPtr b = abstract_rec(v, t->body(), depth + 1);
      return b.get() == t->body().get() ? t : Term::abs(t->name(), t->ty(), std::move(b));
    }
  }
  return t;
}

bool closed_rec(const TermPtr& t, std::size_t depth) {
  switch (t->kind()) {
    case Term::Kind::Var:
    case Term::Kind::SVar:
    case Term::Kind::Const:
      return true;
    case Term::Kind::Bound:
      return t->index() < depth;
    case Term::Kind::App:
      return closed_rec(t->fun(), depth) && closed_rec(t->arg(), depth);
    case Term::Kind::Abs:
      return closed_rec(t->body(), depth + 1);
  }
  return true;
}

}  // namespace

TermPtr instantiate_bound(const TermPtr& body, const TermPtr& arg) {
  return instantiate_rec(body, arg, 0);
}

TermPtr abstract_over(const TermPtr& v, const TermPtr& t) {
  if (!v->is_var()) throw HolError("abstract_over: not a variable");
  return abstract_rec(v, t, 0);
}

bool is_closed(const TermPtr& t) { return closed_rec(t, 0); }

bool occurs_var(const TermPtr& v, const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::Var:
      return t->name() == v->name() && equal(t->ty(), v->ty());
    case Term::Kind::SVar:
    case Term::Kind::Const:
    case Term::Kind::Bound:
      return false;
    case Term::Kind::App:
      return occurs_var(v, t->fun()) || occurs_var(v, t->arg());
    case Term::Kind::Abs:
      return occurs_var(v, t->body());
  }
  return false;
}

namespace {

void collect_kind(const TermPtr& t, Term::Kind kind, std::vector<TermPtr>& out) {
  switch (t->kind()) {
    case Term::Kind::Var:
    case Term::Kind::SVar:
      if (t->kind() == kind) {
        for (const auto& u : out)
          if (u->name() == t->name() && equal(u->ty(), t->ty())) return;
        out.push_back(t);
      }
      return;
    case Term::Kind::Const:
    case Term::Kind::Bound:
      return;
    case Term::Kind::App:
      collect_kind(t->fun(), kind, out);
      collect_kind(t->arg(), kind, out);
      return;
    case Term::Kind::Abs:
      collect_kind(t->body(), kind, out);
      return;
  }
}

}  // namespace

void collect_vars(const TermPtr& t, std::vector<TermPtr>& out) {
  collect_kind(t, Term::Kind::Var, out);
}

void collect_svars(const TermPtr& t, std::vector<TermPtr>& out) {
  collect_kind(t, Term::Kind::SVar, out);
}

void collect_type_vars(const TermPtr& t, std::vector<std::string>& out) {
  switch (t->kind()) {
    case Term::Kind::Var:
    case Term::Kind::SVar:
    case Term::Kind::Const:
      collect_type_vars(t->ty(), out);
      return;
    case Term::Kind::Bound:
      return;
    case Term::Kind::App:
      collect_type_vars(t->fun(), out);
      collect_type_vars(t->arg(), out);
      return;
    case Term::Kind::Abs:
      collect_type_vars(t->ty(), out);
      collect_type_vars(t->body(), out);
      return;
  }
}

namespace logic {

TermPtr equals_const(const TypePtr& operand_ty) {
  return Term::constant(kEquals, fun_type(operand_ty, fun_type(operand_ty, bool_type())));
}

TermPtr implies_const() {
  static const TermPtr c =
      Term::constant(kImplies, fun_type(bool_type(), fun_type(bool_type(), bool_type())));
  return c;
}

TermPtr forall_const(const TypePtr& operand_ty) {
  return Term::constant(kForall, fun_type(fun_type(operand_ty, bool_type()), bool_type()));
}

TermPtr mk_eq(const TermPtr& lhs, const TermPtr& rhs, const TypePtr& operand_ty) {
  return Term::app(Term::app(equals_const(operand_ty), lhs), rhs);
}

bool is_eq(const TermPtr& t) { return is_binop(t, kEquals); }

const TermPtr& eq_lhs(const TermPtr& t) { return binop_lhs(t); }
const TermPtr& eq_rhs(const TermPtr& t) { return binop_rhs(t); }

TermPtr mk_implies(const TermPtr& a, const TermPtr& b) {
  return Term::app(Term::app(implies_const(), a), b);
}

bool is_implies(const TermPtr& t) { return is_binop(t, kImplies); }

const TermPtr& implies_assum(const TermPtr& t) { return binop_lhs(t); }
const TermPtr& implies_concl(const TermPtr& t) { return binop_rhs(t); }

std::pair<std::vector<TermPtr>, TermPtr> strip_implies(const TermPtr& t) {
  std::vector<TermPtr> assums;
  TermPtr rest = t;
  while (is_implies(rest)) {
    assums.push_back(implies_assum(rest));
    rest = implies_concl(rest);
  }
  return {std::move(assums), std::move(rest)};
}

TermPtr mk_forall(const TermPtr& v, const TermPtr& body) {
  return Term::app(forall_const(v->ty()), Term::abs(v->name(), v->ty(), abstract_over(v, body)));
}

bool is_forall(const TermPtr& t) {
  return t->is_app() && t->fun()->is_const() && t->fun()->name() == kForall &&
         t->arg()->is_abs();
}

bool is_binop(const TermPtr& t, const std::string& op) {
  return t->is_app() && t->fun()->is_app() && t->fun()->fun()->is_const() &&
         t->fun()->fun()->name() == op;
}

const TermPtr& binop_lhs(const TermPtr& t) { return t->fun()->arg(); }
const TermPtr& binop_rhs(const TermPtr& t) { return t->arg(); }

}  // namespace logic

}  // namespace holcheck
