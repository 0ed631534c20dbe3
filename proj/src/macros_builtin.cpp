#include <algorithm>
#include <map>
#include <vector>

#include "holcheck/conv.hpp"
#include "holcheck/error.hpp"
#include "holcheck/macro.hpp"
#include "holcheck/match.hpp"
#include "holcheck/numeral.hpp"
#include "holcheck/theory.hpp"

namespace holcheck {

namespace {

const TermPtr& want_term_arg(const char* macro, const RuleArgs& args) {
  const TermPtr* t = std::get_if<TermPtr>(&args);
  if (!t || !*t) throw MacroError(macro, "expected a term argument");
  return *t;
}

void want_no_prevs(const char* macro, std::size_t n) {
  if (n != 0) throw MacroError(macro, "expected no premises");
}

// Applies the named rewrite; unknown lemmas surface as MissingLemma and a
// failed match is a hard error (these conversions are fully directed).
ProofNodePtr rw(const char* macro, const TheoryView& thy, const std::string& name,
                const TermPtr& t) {
  try {
    ConvResult r = rewr_conv(name)(thy, t);
    if (!r.ok())
      throw MacroError(macro, "rewrite " + name + " failed on " + print_term(t) + ": " +
                                  r.error().message);
    return r.proof();
  } catch (const UnknownTheorem& e) {
    throw MissingLemma(macro, e.name);
  }
}

ProofNodePtr unwrap(const char* macro, ConvResult r) {
  if (!r.ok()) throw MacroError(macro, r.error().message);
  return r.proof();
}

Conversion lhs_conv(Conversion cv) { return fun_conv(arg_conv(std::move(cv))); }

// ------------------------------------------------------- apply_theorem --

// Instantiates a stored theorem against the premises' propositions:
// matching its leading assumptions, returning the instantiated remainder
// under the union of premise hypotheses.
Sequent apply_theorem_eval(const TheoryView& thy, const RuleArgs& args,
                           const std::vector<Sequent>& prevs) {
  const std::string* name = std::get_if<std::string>(&args);
  if (!name) throw MacroError("apply_theorem", "expected a theorem name argument");
  Sequent th = thy.get_theorem(*name, /*schematic=*/true);
  auto [assums, concl] = logic::strip_implies(th.prop());
  if (prevs.size() > assums.size())
    throw MacroError("apply_theorem",
                     *name + " has only " + std::to_string(assums.size()) + " assumptions");
  std::vector<TermPtr> patterns(assums.begin(),
                                assums.begin() + static_cast<std::ptrdiff_t>(prevs.size()));
  std::vector<TermPtr> targets;
  targets.reserve(prevs.size());
  for (const auto& p : prevs) targets.push_back(p.prop());
  Instantiation inst = first_order_match_list(patterns, targets);

  TermPtr chain = concl;
  for (std::size_t i = assums.size(); i-- > prevs.size();)
    chain = logic::mk_implies(assums[i], chain);
  TermPtr conclusion = subst_norm(chain, inst);

  std::vector<TermPtr> hyps;
  for (const auto& p : prevs) hyps = union_hyps(hyps, p.hyps());
  return Sequent(std::move(hyps), std::move(conclusion));
}

ProofNodePtr apply_theorem_expand(const TheoryView& thy, const RuleArgs& args,
                                  const std::vector<ProofNodePtr>& pts) {
  const std::string* name = std::get_if<std::string>(&args);
  if (!name) throw MacroError("apply_theorem", "expected a theorem name argument");
  Sequent th = thy.get_theorem(*name, /*schematic=*/true);
  auto [assums, concl] = logic::strip_implies(th.prop());
  if (pts.size() > assums.size())
    throw MacroError("apply_theorem",
                     *name + " has only " + std::to_string(assums.size()) + " assumptions");
  std::vector<TermPtr> patterns(assums.begin(),
                                assums.begin() + static_cast<std::ptrdiff_t>(pts.size()));
  std::vector<TermPtr> targets;
  targets.reserve(pts.size());
  for (const auto& p : pts) targets.push_back(p->th().prop());
  Instantiation inst = first_order_match_list(patterns, targets);

  ProofNodePtr pt = node("theorem", *name, {}, thy);
  if (!inst.types.empty())
    pt = node("subst_type", Instantiation{inst.types, {}}, {std::move(pt)}, thy);
  pt = node("substitution", Instantiation{{}, inst.terms}, {std::move(pt)}, thy);
  for (const auto& prev : pts)
    pt = node("implies_elim", std::monostate{}, {std::move(pt), prev}, thy);
  return pt;
}

// ------------------------------------------------------ nat_arith_eval --

NatValue arith_value(const TermPtr& t) {
  if (auto v = numeral_value(t)) return *v;
  if (logic::is_binop(t, nat::kPlus)) {
    auto r = nat_checked_add(arith_value(logic::binop_lhs(t)), arith_value(logic::binop_rhs(t)));
    if (!r) throw MacroError("nat_arith_eval", "sum exceeds 128 bits");
    return *r;
  }
  if (logic::is_binop(t, nat::kTimes)) {
    auto r = nat_checked_mul(arith_value(logic::binop_lhs(t)), arith_value(logic::binop_rhs(t)));
    if (!r) throw MacroError("nat_arith_eval", "product exceeds 128 bits");
    return *r;
  }
  throw NotClosedArithmetic(print_term(t));
}

Sequent nat_arith_eval(const TheoryView& thy, const RuleArgs& args,
                       const std::vector<Sequent>& prevs) {
  (void)thy;
  want_no_prevs("nat_arith_eval", prevs.size());
  const TermPtr& t = want_term_arg("nat_arith_eval", args);
  NatValue v = arith_value(t);
  return Sequent({}, logic::mk_eq(t, mk_numeral(v), nat_type()));
}

constexpr const char* kArith = "nat_arith_eval";

ConvResult num_add_conv(const TheoryView& thy, const TermPtr& t);
ConvResult num_mul_conv(const TheoryView& thy, const TermPtr& t);

Conversion num_add() { return num_add_conv; }
Conversion num_mul() { return num_mul_conv; }

bool is_bit_app(const TermPtr& t, const char* bit) {
  return t->is_app() && t->fun()->is_const() && t->fun()->name() == bit;
}

// |- A + B = C over canonical numerals, by recursion on the binary digits.
ConvResult num_add_conv(const TheoryView& thy, const TermPtr& t) {
  if (!logic::is_binop(t, nat::kPlus))
    return ConvError{ConvError::Kind::ShapeMismatch, "not a sum"};
  const TermPtr& a = logic::binop_lhs(t);
  const TermPtr& b = logic::binop_rhs(t);
  auto va = numeral_value(a), vb = numeral_value(b);
  if (!va || !vb) return ConvError{ConvError::Kind::ShapeMismatch, "operands are not numerals"};

  if (*va == 0) return ConvResult(rw(kArith, thy, "add_zero_left", t));
  if (*vb == 0) return ConvResult(rw(kArith, thy, "add_zero_right", t));
  if (*va == 1 && *vb == 1) return ConvResult(rw(kArith, thy, "add_one_one", t));
  if (*va == 1) {
    if (is_bit_app(b, nat::kBit0)) return ConvResult(rw(kArith, thy, "add_one_bit0", t));
    // 1 + bit1 n = bit0 (n + 1)
    return then_conv(rewr_conv("add_one_bit1"), arg_conv(num_add()))(thy, t);
  }
  if (*vb == 1) {
    if (is_bit_app(a, nat::kBit0)) return ConvResult(rw(kArith, thy, "add_bit0_one", t));
    return then_conv(rewr_conv("add_bit1_one"), arg_conv(num_add()))(thy, t);
  }
  bool a1 = is_bit_app(a, nat::kBit1);
  bool b1 = is_bit_app(b, nat::kBit1);
  if (!a1 && !b1) return then_conv(rewr_conv("add_bit0_bit0"), arg_conv(num_add()))(thy, t);
  if (!a1 && b1) return then_conv(rewr_conv("add_bit0_bit1"), arg_conv(num_add()))(thy, t);
  if (a1 && !b1) return then_conv(rewr_conv("add_bit1_bit0"), arg_conv(num_add()))(thy, t);
  // bit1 m + bit1 n = bit0 (m + n + 1): inner sum first, then the carry.
  return then_conv(rewr_conv("add_bit1_bit1"),
                   arg_conv(then_conv(lhs_conv(num_add()), num_add())))(thy, t);
}

// |- A * B = C over canonical numerals.
ConvResult num_mul_conv(const TheoryView& thy, const TermPtr& t) {
  if (!logic::is_binop(t, nat::kTimes))
    return ConvError{ConvError::Kind::ShapeMismatch, "not a product"};
  const TermPtr& a = logic::binop_lhs(t);
  const TermPtr& b = logic::binop_rhs(t);
  auto va = numeral_value(a), vb = numeral_value(b);
  if (!va || !vb) return ConvError{ConvError::Kind::ShapeMismatch, "operands are not numerals"};

  if (*va == 0) return ConvResult(rw(kArith, thy, "mul_zero_left", t));
  if (*vb == 0) return ConvResult(rw(kArith, thy, "mul_zero_right", t));
  if (*va == 1) return ConvResult(rw(kArith, thy, "mul_one_left", t));
  if (*vb == 1) return ConvResult(rw(kArith, thy, "mul_one_right", t));
  if (is_bit_app(a, nat::kBit0))
    return then_conv(rewr_conv("mul_bit0"), arg_conv(num_mul()))(thy, t);
  // bit1 m * n = bit0 (m * n) + n
  return then_conv(rewr_conv("mul_bit1"),
                   then_conv(lhs_conv(arg_conv(num_mul())), num_add()))(thy, t);
}

// |- t = n for any closed +,* term over numerals.
ConvResult arith_conv(const TheoryView& thy, const TermPtr& t) {
  if (is_numeral(t)) return all_conv()(thy, t);
  Conversion self = arith_conv;
  if (logic::is_binop(t, nat::kPlus))
    return then_conv(binop_conv(self), num_add())(thy, t);
  if (logic::is_binop(t, nat::kTimes))
    return then_conv(binop_conv(self), num_mul())(thy, t);
  return ConvError{ConvError::Kind::ShapeMismatch,
                   "not a closed arithmetic term: " + print_term(t)};
}

ProofNodePtr nat_arith_expand(const TheoryView& thy, const RuleArgs& args,
                              const std::vector<ProofNodePtr>& pts) {
  want_no_prevs("nat_arith_eval", pts.size());
  const TermPtr& t = want_term_arg("nat_arith_eval", args);
  try {
    return unwrap(kArith, arith_conv(thy, t));
  } catch (const UnknownTheorem& e) {
    throw MissingLemma(kArith, e.name);
  }
}

// ------------------------------------------------------- nat_norm_poly --

constexpr const char* kPoly = "nat_norm_poly";

// Monomial: variable names with multiplicity, sorted. Ordered by total
// degree, then lexicographically (graded lex).
using Monomial = std::vector<std::string>;
using PolyMap = std::map<Monomial, NatValue>;

bool mono_less(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

PolyMap poly_add(const PolyMap& a, const PolyMap& b) {
  PolyMap out = a;
  for (const auto& [m, c] : b) {
    auto r = nat_checked_add(out[m], c);
    if (!r) throw MacroError(kPoly, "coefficient exceeds 128 bits");
    out[m] = *r;
  }
  return out;
}

PolyMap poly_mul(const PolyMap& a, const PolyMap& b) {
  PolyMap out;
  for (const auto& [m1, c1] : a) {
    for (const auto& [m2, c2] : b) {
      Monomial m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      std::sort(m.begin(), m.end());
      auto prod = nat_checked_mul(c1, c2);
      if (!prod) throw MacroError(kPoly, "coefficient exceeds 128 bits");
      auto sum = nat_checked_add(out[m], *prod);
      if (!sum) throw MacroError(kPoly, "coefficient exceeds 128 bits");
      out[m] = *sum;
    }
  }
  return out;
}

PolyMap poly_of(const TermPtr& t) {
  if (auto v = numeral_value(t)) {
    PolyMap out;
    if (*v != 0) out[{}] = *v;
    return out;
  }
  if (t->is_var() && equal(t->ty(), nat_type())) return {{Monomial{t->name()}, 1}};
  if (logic::is_binop(t, nat::kPlus))
    return poly_add(poly_of(logic::binop_lhs(t)), poly_of(logic::binop_rhs(t)));
  if (logic::is_binop(t, nat::kTimes))
    return poly_mul(poly_of(logic::binop_lhs(t)), poly_of(logic::binop_rhs(t)));
  throw MacroError(kPoly, "not a polynomial term: " + print_term(t));
}

void drop_zeros(PolyMap& p) {
  for (auto it = p.begin(); it != p.end();)
    it = it->second == 0 ? p.erase(it) : std::next(it);
}

// Canonical term of a polynomial: monomials in ascending graded-lex order,
// sums and variable products right-nested, coefficients always explicit
// (a lone variable x normalizes to 1 * x).
TermPtr var_product(const Monomial& m) {
  TermPtr out = Term::var(m.back(), nat_type());
  for (std::size_t i = m.size() - 1; i-- > 0;) {
    TermPtr v = Term::var(m[i], nat_type());
    out = Term::app(Term::app(Term::constant(nat::kTimes, fun_type(nat_type(), fun_type(nat_type(), nat_type()))), v), out);
  }
  return out;
}

TermPtr nat_binop(const char* op, const TermPtr& a, const TermPtr& b) {
  TermPtr c = Term::constant(op, fun_type(nat_type(), fun_type(nat_type(), nat_type())));
  return Term::app(Term::app(std::move(c), a), b);
}

TermPtr mono_term(const Monomial& m, NatValue c) {
  if (m.empty()) return mk_numeral(c);
  return nat_binop(nat::kTimes, mk_numeral(c), var_product(m));
}

TermPtr poly_term(const PolyMap& p) {
  if (p.empty()) return mk_numeral(0);
  std::vector<std::pair<Monomial, NatValue>> ms(p.begin(), p.end());
  std::sort(ms.begin(), ms.end(),
            [](const auto& a, const auto& b) { return mono_less(a.first, b.first); });
  TermPtr out = mono_term(ms.back().first, ms.back().second);
  for (std::size_t i = ms.size() - 1; i-- > 0;)
    out = nat_binop(nat::kPlus, mono_term(ms[i].first, ms[i].second), out);
  return out;
}

// Decomposition of canonical forms.
bool is_zero_term(const TermPtr& t) {
  auto v = numeral_value(t);
  return v && *v == 0;
}

Monomial mono_vars(const TermPtr& t) {
  // t is a canonical monomial: numeral | numeral * (v1 * (v2 * ...)).
  Monomial out;
  if (is_numeral(t)) return out;
  TermPtr v = logic::binop_rhs(t);
  while (logic::is_binop(v, nat::kTimes)) {
    out.push_back(logic::binop_lhs(v)->name());
    v = logic::binop_rhs(v);
  }
  out.push_back(v->name());
  return out;
}

// The nat_arith_eval macro as a conversion; its nodes embed in expansions.
ConvResult arith_macro_conv(const TheoryView& thy, const TermPtr& t) {
  return ConvResult(node(kArith, t, {}, thy));
}

ConvResult add_insert_conv(const TheoryView& thy, const TermPtr& t);
ConvResult add_merge_conv(const TheoryView& thy, const TermPtr& t);
ConvResult mul_poly_conv(const TheoryView& thy, const TermPtr& t);

Conversion add_insert() { return add_insert_conv; }
Conversion add_merge() { return add_merge_conv; }
Conversion mul_poly() { return mul_poly_conv; }

// |- m + n = k for monomials with the same variables.
ConvResult mono_combine_conv(const TheoryView& thy, const TermPtr& t) {
  const TermPtr& m = logic::binop_lhs(t);
  if (is_numeral(m)) return arith_macro_conv(thy, t);
  // c1 * V + c2 * V = (c1 + c2) * V, then evaluate the coefficient.
  return then_conv(rewr_conv("distrib_collect"), lhs_conv(arith_macro_conv))(thy, t);
}

// Inserts monomial m into canonical polynomial Q, given t = m + Q.
ConvResult add_insert_conv(const TheoryView& thy, const TermPtr& t) {
  const TermPtr& m = logic::binop_lhs(t);
  const TermPtr& q = logic::binop_rhs(t);
  if (is_zero_term(q)) return ConvResult(rw(kPoly, thy, "add_zero_right", t));
  Monomial mv = mono_vars(m);
  if (logic::is_binop(q, nat::kPlus)) {
    Monomial nv = mono_vars(logic::binop_lhs(q));
    if (mv == nv)
      return then_conv(rewr_conv("add_assoc_rev"), lhs_conv(mono_combine_conv))(thy, t);
    if (mono_less(mv, nv)) return all_conv()(thy, t);
    return then_conv(rewr_conv("add_left_comm"), arg_conv(add_insert()))(thy, t);
  }
  Monomial nv = mono_vars(q);
  if (mv == nv) return mono_combine_conv(thy, t);
  if (mono_less(mv, nv)) return all_conv()(thy, t);
  return ConvResult(rw(kPoly, thy, "add_comm", t));
}

// Merges two canonical polynomials, given t = P + Q.
ConvResult add_merge_conv(const TheoryView& thy, const TermPtr& t) {
  const TermPtr& p = logic::binop_lhs(t);
  const TermPtr& q = logic::binop_rhs(t);
  if (is_zero_term(p)) return ConvResult(rw(kPoly, thy, "add_zero_left", t));
  if (is_zero_term(q)) return ConvResult(rw(kPoly, thy, "add_zero_right", t));
  if (logic::is_binop(p, nat::kPlus))
    return then_conv(rewr_conv("add_assoc"),
                     then_conv(arg_conv(add_merge()), add_insert()))(thy, t);
  return add_insert_conv(thy, t);
}

ConvResult vars_merge_conv(const TheoryView& thy, const TermPtr& t);
Conversion vars_merge() { return vars_merge_conv; }

// Merges two sorted variable products, given t = V1 * V2.
ConvResult vars_merge_conv(const TheoryView& thy, const TermPtr& t) {
  const TermPtr& v1 = logic::binop_lhs(t);
  const TermPtr& v2 = logic::binop_rhs(t);
  if (logic::is_binop(v1, nat::kTimes))
    return then_conv(rewr_conv("mul_assoc"),
                     then_conv(arg_conv(vars_merge()), vars_merge()))(thy, t);
  // v1 is a single variable; insert it.
  if (logic::is_binop(v2, nat::kTimes)) {
    if (v1->name() <= logic::binop_lhs(v2)->name()) return all_conv()(thy, t);
    return then_conv(rewr_conv("mul_left_comm"), arg_conv(vars_merge()))(thy, t);
  }
  if (v1->name() <= v2->name()) return all_conv()(thy, t);
  return ConvResult(rw(kPoly, thy, "mul_comm", t));
}

// |- m1 * m2 = k for canonical monomials.
ConvResult mono_mul_conv(const TheoryView& thy, const TermPtr& t) {
  const TermPtr& m1 = logic::binop_lhs(t);
  const TermPtr& m2 = logic::binop_rhs(t);
  bool c1 = is_numeral(m1);
  bool c2 = is_numeral(m2);
  if (c1 && c2) return arith_macro_conv(thy, t);
  if (c1)  // c * (d * V) = (c * d) * V
    return then_conv(rewr_conv("mul_assoc_rev"), lhs_conv(arith_macro_conv))(thy, t);
  if (c2)  // (d * V) * c: commute, then the previous case
    return then_conv(rewr_conv("mul_comm"), Conversion(mono_mul_conv))(thy, t);
  // (c1 * V1) * (c2 * V2) -> (c1 * c2) * (V1 * V2), then merge the products.
  return then_conv(
      rewr_conv("mul_assoc"),
      then_conv(arg_conv(rewr_conv("mul_left_comm")),
                then_conv(rewr_conv("mul_assoc_rev"),
                          then_conv(lhs_conv(arith_macro_conv),
                                    arg_conv(vars_merge())))))(thy, t);
}

// Multiplies two canonical polynomials, given t = P * Q.
ConvResult mul_poly_conv(const TheoryView& thy, const TermPtr& t) {
  const TermPtr& p = logic::binop_lhs(t);
  const TermPtr& q = logic::binop_rhs(t);
  if (is_zero_term(p)) return ConvResult(rw(kPoly, thy, "mul_zero_left", t));
  if (is_zero_term(q)) return ConvResult(rw(kPoly, thy, "mul_zero_right", t));
  if (logic::is_binop(p, nat::kPlus))
    return then_conv(rewr_conv("distrib_right"),
                     then_conv(lhs_conv(mul_poly()),
                               then_conv(arg_conv(mul_poly()), add_merge())))(thy, t);
  if (logic::is_binop(q, nat::kPlus))
    return then_conv(rewr_conv("distrib_left"),
                     then_conv(lhs_conv(mono_mul_conv),
                               then_conv(arg_conv(mul_poly()), add_merge())))(thy, t);
  return mono_mul_conv(thy, t);
}

// |- t = canonical(t) for polynomial terms.
ConvResult poly_norm_conv(const TheoryView& thy, const TermPtr& t) {
  if (is_numeral(t)) return all_conv()(thy, t);
  if (t->is_var() && equal(t->ty(), nat_type()))
    return ConvResult(rw(kPoly, thy, "mul_one_intro", t));
  Conversion self = poly_norm_conv;
  if (logic::is_binop(t, nat::kPlus))
    return then_conv(binop_conv(self), add_merge())(thy, t);
  if (logic::is_binop(t, nat::kTimes))
    return then_conv(binop_conv(self), mul_poly())(thy, t);
  throw MacroError(kPoly, "not a polynomial term: " + print_term(t));
}

TermPtr poly_goal(const char* macro, const RuleArgs& args) {
  const TermPtr& goal = want_term_arg(macro, args);
  if (!logic::is_eq(goal) || !equal(goal->fun()->fun()->ty()->domain(), nat_type()))
    throw MacroError(macro, "expected a goal of the form lhs = rhs over nat");
  return goal;
}

Sequent nat_norm_poly_eval(const TheoryView& thy, const RuleArgs& args,
                           const std::vector<Sequent>& prevs) {
  (void)thy;
  want_no_prevs(kPoly, prevs.size());
  TermPtr goal = poly_goal(kPoly, args);
  PolyMap lhs = poly_of(logic::eq_lhs(goal));
  PolyMap rhs = poly_of(logic::eq_rhs(goal));
  drop_zeros(lhs);
  drop_zeros(rhs);
  if (lhs != rhs)
    throw NormalizationMismatch(print_term(poly_term(lhs)), print_term(poly_term(rhs)));
  return Sequent({}, goal);
}

ProofNodePtr nat_norm_poly_expand(const TheoryView& thy, const RuleArgs& args,
                                  const std::vector<ProofNodePtr>& pts) {
  want_no_prevs(kPoly, pts.size());
  TermPtr goal = poly_goal(kPoly, args);
  try {
    ProofNodePtr pl = unwrap(kPoly, poly_norm_conv(thy, logic::eq_lhs(goal)));
    ProofNodePtr pr = unwrap(kPoly, poly_norm_conv(thy, logic::eq_rhs(goal)));
    if (!equal(logic::eq_rhs(pl->th().prop()), logic::eq_rhs(pr->th().prop())))
      throw NormalizationMismatch(print_term(logic::eq_rhs(pl->th().prop())),
                                  print_term(logic::eq_rhs(pr->th().prop())));
    ProofNodePtr sym = node("symmetric", std::monostate{}, {std::move(pr)}, thy);
    return node("transitive", std::monostate{}, {std::move(pl), std::move(sym)}, thy);
  } catch (const UnknownTheorem& e) {
    throw MissingLemma(kPoly, e.name);
  }
}

}  // namespace

void register_builtin_macros(MacroRegistry& reg) {
  reg.add(MacroDefinition{"apply_theorem", 1, ArgShape::TheoremName, apply_theorem_eval,
                          apply_theorem_expand});
  reg.add(MacroDefinition{"nat_arith_eval", 1, ArgShape::Term, nat_arith_eval,
                          nat_arith_expand});
  reg.add(MacroDefinition{"nat_norm_poly", 2, ArgShape::Term, nat_norm_poly_eval,
                          nat_norm_poly_expand});
}

}  // namespace holcheck
