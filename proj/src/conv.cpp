#include "holcheck/conv.hpp"

#include <atomic>
#include <set>

#include "holcheck/error.hpp"
#include "holcheck/match.hpp"
#include "holcheck/theory.hpp"

namespace holcheck {

namespace {

std::atomic<std::size_t> g_default_budget{100000};

ProofNodePtr refl(const TheoryView& thy, const TermPtr& t) {
  return node("reflexive", t, {}, thy);
}

ProofNodePtr trans(const TheoryView& thy, ProofNodePtr a, ProofNodePtr b) {
  return node("transitive", std::monostate{}, {std::move(a), std::move(b)}, thy);
}

ProofNodePtr combine(const TheoryView& thy, ProofNodePtr f, ProofNodePtr a) {
  return node("combination", std::monostate{}, {std::move(f), std::move(a)}, thy);
}

void term_names(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind()) {
    case Term::Kind::Var:
    case Term::Kind::SVar:
    case Term::Kind::Const:
      out.insert(t->name());
      return;
    case Term::Kind::Bound:
      return;
    case Term::Kind::App:
      term_names(t->fun(), out);
      term_names(t->arg(), out);
      return;
    case Term::Kind::Abs:
      term_names(t->body(), out);
      return;
  }
}

ConvResult abs_conv_apply(const Conversion& cv, const TheoryView& thy, const TermPtr& t) {
  if (!t->is_abs())
    return ConvError{ConvError::Kind::ShapeMismatch, "abs_conv: not an abstraction"};
  std::set<std::string> avoid;
  term_names(t->body(), avoid);
  std::string name = t->name().empty() ? "x" : t->name();
  while (avoid.count(name)) name += "'";
  TermPtr v = Term::var(name, t->ty());
  ConvResult r = cv(thy, instantiate_bound(t->body(), v));
  if (!r.ok()) return r;
  return ConvResult(node("abstraction", v, {r.proof()}, thy));
}

// One top-down sweep position: repeat cv here until it fails, then descend.
ConvResult top_rec(const Conversion& cv, const TheoryView& thy, const TermPtr& t,
                   std::size_t& remaining) {
  ProofNodePtr acc;
  TermPtr cur = t;
  while (true) {
    ConvResult r = cv(thy, cur);
    if (!r.ok()) {
      if (r.error().kind == ConvError::Kind::BudgetExceeded) return r;
      break;
    }
    if (remaining == 0)
      return ConvError{ConvError::Kind::BudgetExceeded, "rewrite budget exceeded"};
    --remaining;
    acc = acc ? trans(thy, acc, r.proof()) : r.proof();
    TermPtr next = r.rhs();
    if (equal(next, cur)) break;  // no progress
    cur = next;
  }

  ProofNodePtr below;
  if (cur->is_app()) {
    ConvResult f = top_rec(cv, thy, cur->fun(), remaining);
    if (!f.ok()) return f;
    ConvResult a = top_rec(cv, thy, cur->arg(), remaining);
    if (!a.ok()) return a;
    below = combine(thy, f.proof(), a.proof());
  } else if (cur->is_abs()) {
    Conversion sub = [&cv, &remaining](const TheoryView& th, const TermPtr& u) {
      return top_rec(cv, th, u, remaining);
    };
    ConvResult b = abs_conv_apply(sub, thy, cur);
    if (!b.ok()) return b;
    below = b.proof();
  } else {
    below = refl(thy, cur);
  }
  return ConvResult(acc ? trans(thy, acc, below) : below);
}

}  // namespace

const TermPtr& ConvResult::rhs() const { return logic::eq_rhs(node_->th().prop()); }

std::size_t default_conv_budget() { return g_default_budget.load(); }
void set_default_conv_budget(std::size_t budget) { g_default_budget.store(budget); }

Conversion all_conv() {
  return [](const TheoryView& thy, const TermPtr& t) -> ConvResult {
    return ConvResult(refl(thy, t));
  };
}

Conversion then_conv(Conversion cv1, Conversion cv2) {
  return [cv1 = std::move(cv1), cv2 = std::move(cv2)](const TheoryView& thy,
                                                      const TermPtr& t) -> ConvResult {
    ConvResult r1 = cv1(thy, t);
    if (!r1.ok()) return r1;
    ConvResult r2 = cv2(thy, r1.rhs());
    if (!r2.ok()) return r2;
    return ConvResult(trans(thy, r1.proof(), r2.proof()));
  };
}

Conversion rewr_conv(std::string theorem_name) {
  return [name = std::move(theorem_name)](const TheoryView& thy,
                                          const TermPtr& t) -> ConvResult {
    Sequent th = thy.get_theorem(name, /*schematic=*/true);  // UnknownTheorem propagates
    if (!logic::is_eq(th.prop()))
      return ConvError{ConvError::Kind::NotAnEquation, name + " is not an equation"};
    Instantiation inst;
    try {
      inst = first_order_match(logic::eq_lhs(th.prop()), t);
    } catch (const HolError& e) {
      return ConvError{ConvError::Kind::MatchFailure, e.what()};
    }
    ProofNodePtr pt = node("theorem", name, {}, thy);
    if (!inst.types.empty())
      pt = node("subst_type", Instantiation{inst.types, {}}, {std::move(pt)}, thy);
    // Unconditional: substitution also beta-normalizes the instance.
    pt = node("substitution", Instantiation{{}, inst.terms}, {std::move(pt)}, thy);
    return ConvResult(std::move(pt));
  };
}

Conversion arg_conv(Conversion cv) {
  return [cv = std::move(cv)](const TheoryView& thy, const TermPtr& t) -> ConvResult {
    if (!t->is_app())
      return ConvError{ConvError::Kind::ShapeMismatch, "arg_conv: not an application"};
    ConvResult r = cv(thy, t->arg());
    if (!r.ok()) return r;
    return ConvResult(combine(thy, refl(thy, t->fun()), r.proof()));
  };
}

Conversion fun_conv(Conversion cv) {
  return [cv = std::move(cv)](const TheoryView& thy, const TermPtr& t) -> ConvResult {
    if (!t->is_app())
      return ConvError{ConvError::Kind::ShapeMismatch, "fun_conv: not an application"};
    ConvResult r = cv(thy, t->fun());
    if (!r.ok()) return r;
    return ConvResult(combine(thy, r.proof(), refl(thy, t->arg())));
  };
}

Conversion abs_conv(Conversion cv) {
  return [cv = std::move(cv)](const TheoryView& thy, const TermPtr& t) -> ConvResult {
    return abs_conv_apply(cv, thy, t);
  };
}

Conversion binop_conv(Conversion cv) {
  return [cv = std::move(cv)](const TheoryView& thy, const TermPtr& t) -> ConvResult {
    if (!t->is_app() || !t->fun()->is_app())
      return ConvError{ConvError::Kind::ShapeMismatch, "binop_conv: not a binary application"};
    ConvResult lhs = cv(thy, t->fun()->arg());
    if (!lhs.ok()) return lhs;
    ConvResult rhs = cv(thy, t->arg());
    if (!rhs.ok()) return rhs;
    ProofNodePtr inner = combine(thy, refl(thy, t->fun()->fun()), lhs.proof());
    return ConvResult(combine(thy, std::move(inner), rhs.proof()));
  };
}

Conversion top_conv(Conversion cv, std::size_t budget) {
  return [cv = std::move(cv), budget](const TheoryView& thy, const TermPtr& t) -> ConvResult {
    std::size_t remaining = budget == 0 ? default_conv_budget() : budget;
    return top_rec(cv, thy, t, remaining);
  };
}

}  // namespace holcheck
