#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "holcheck/type.hpp"

namespace holcheck {

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Lambda terms with named free variables, named schematic variables (?A),
// and de Bruijn indices for bound variables. Immutable and freely shared.
// Structural equality ignores the Abs name hint, so equality is exactly
// alpha-equivalence.
class Term {
 public:
  enum class Kind { Var, SVar, Const, App, Abs, Bound };

  static TermPtr var(std::string name, TypePtr ty);
  static TermPtr svar(std::string name, TypePtr ty);
  static TermPtr constant(std::string name, TypePtr ty);
  static TermPtr app(TermPtr fun, TermPtr arg);
  static TermPtr abs(std::string name_hint, TypePtr bound_ty, TermPtr body);
  static TermPtr bound(std::size_t index);

  Kind kind() const { return kind_; }
  // Var/SVar/Const name; for Abs, the bound-variable name hint.
  const std::string& name() const { return name_; }
  // Var/SVar/Const type; for Abs, the bound-variable type.
  const TypePtr& ty() const { return ty_; }
  const TermPtr& fun() const { return fun_; }   // App
  const TermPtr& arg() const { return arg_; }   // App
  const TermPtr& body() const { return fun_; }  // Abs
  std::size_t index() const { return index_; }  // Bound

  bool is_var() const { return kind_ == Kind::Var; }
  bool is_svar() const { return kind_ == Kind::SVar; }
  bool is_const() const { return kind_ == Kind::Const; }
  bool is_app() const { return kind_ == Kind::App; }
  bool is_abs() const { return kind_ == Kind::Abs; }
  bool is_bound() const { return kind_ == Kind::Bound; }

 private:
  Term(Kind kind, std::string name, TypePtr ty, TermPtr fun, TermPtr arg, std::size_t index)
      : kind_(kind), name_(std::move(name)), ty_(std::move(ty)), fun_(std::move(fun)),
        arg_(std::move(arg)), index_(index) {}

  Kind kind_;
  std::string name_;
  TypePtr ty_;
  TermPtr fun_;  // App fun / Abs body
  TermPtr arg_;  // App arg
  std::size_t index_;
};

bool equal(const TermPtr& a, const TermPtr& b);
// Total order: kind tag, then fields recursively; Abs hints are ignored.
int compare(const TermPtr& a, const TermPtr& b);

// De Bruijn plumbing.
// Adds `inc` to every loose Bound index >= cutoff.
TermPtr lift(const TermPtr& t, std::size_t inc, std::size_t cutoff = 0);
// body[Bound 0 := arg]; the single beta contraction under the binder.
TermPtr instantiate_bound(const TermPtr& body, const TermPtr& arg);
// Replaces free occurrences of variable `v` (a Var) by Bound 0 at the top.
TermPtr abstract_over(const TermPtr& v, const TermPtr& t);

// No loose Bound indices.
bool is_closed(const TermPtr& t);
// Does the named Var `v` occur free in t?
bool occurs_var(const TermPtr& v, const TermPtr& t);
// Free named variables, first occurrence order (no duplicates).
void collect_vars(const TermPtr& t, std::vector<TermPtr>& out);
void collect_svars(const TermPtr& t, std::vector<TermPtr>& out);
void collect_type_vars(const TermPtr& t, std::vector<std::string>& out);

// Names of the built-in logical constants. The kernel constructs terms with
// these names; theories must declare them with the standard types before the
// corresponding rules or surface syntax can be used.
namespace logic {

inline constexpr const char* kEquals = "equals";
inline constexpr const char* kImplies = "implies";
inline constexpr const char* kForall = "forall";
inline constexpr const char* kExists = "exists";
inline constexpr const char* kConj = "conj";
inline constexpr const char* kDisj = "disj";
inline constexpr const char* kNeg = "neg";

TermPtr equals_const(const TypePtr& operand_ty);
TermPtr implies_const();
TermPtr forall_const(const TypePtr& operand_ty);

TermPtr mk_eq(const TermPtr& lhs, const TermPtr& rhs, const TypePtr& operand_ty);
bool is_eq(const TermPtr& t);
const TermPtr& eq_lhs(const TermPtr& t);
const TermPtr& eq_rhs(const TermPtr& t);

TermPtr mk_implies(const TermPtr& a, const TermPtr& b);
bool is_implies(const TermPtr& t);
const TermPtr& implies_assum(const TermPtr& t);
const TermPtr& implies_concl(const TermPtr& t);
// Splits A1 --> A2 --> ... --> C into ([A1..An], C).
std::pair<std::vector<TermPtr>, TermPtr> strip_implies(const TermPtr& t);

// forall over `v` (a Var), abstracting its occurrences in body.
TermPtr mk_forall(const TermPtr& v, const TermPtr& body);
bool is_forall(const TermPtr& t);

// Is t a binary operator application (c a b) for constant name `op`?
bool is_binop(const TermPtr& t, const std::string& op);
const TermPtr& binop_lhs(const TermPtr& t);
const TermPtr& binop_rhs(const TermPtr& t);

}  // namespace logic

}  // namespace holcheck
