#include "holcheck/syntax.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <sstream>
#include <vector>

#include "holcheck/error.hpp"
#include "holcheck/numeral.hpp"

namespace holcheck {

namespace {

// ---------------------------------------------------------------- lexer --

enum class Tok {
  Ident, TyVar, Numeral,
  LParen, RParen, LBrace, RBrace, Comma, Dot,
  ColonColon, ColonEq, Turnstile,
  Arrow, Bar, Amp, Tilde, Eq, Plus, Star,
  Percent, Bang, Question, FatArrow,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool ident_cont(char c) {
  return ident_start(c) || (c >= '0' && c <= '9') || c == '\'';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string text, std::size_t pos) {
    out.push_back({k, std::move(text), pos});
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') { ++i; continue; }
    std::size_t start = i;
    if (ident_start(c)) {
      ++i;
      while (i < s.size() && ident_cont(s[i])) ++i;
      push(Tok::Ident, std::string(s.substr(start, i - start)), start);
      continue;
    }
    if (c >= '0' && c <= '9') {
      ++i;
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
      push(Tok::Numeral, std::string(s.substr(start, i - start)), start);
      continue;
    }
    switch (c) {
      case '\'':
        ++i;
        if (i >= s.size() || !ident_start(s[i]))
          throw ParseError(start, "type variable name after '");
        while (i < s.size() && ident_cont(s[i])) ++i;
        push(Tok::TyVar, std::string(s.substr(start + 1, i - start - 1)), start);
        continue;
      case '(': push(Tok::LParen, "(", start); ++i; continue;
      case ')': push(Tok::RParen, ")", start); ++i; continue;
      case '{': push(Tok::LBrace, "{", start); ++i; continue;
      case '}': push(Tok::RBrace, "}", start); ++i; continue;
      case ',': push(Tok::Comma, ",", start); ++i; continue;
      case '.': push(Tok::Dot, ".", start); ++i; continue;
      case '%': push(Tok::Percent, "%", start); ++i; continue;
      case '!': push(Tok::Bang, "!", start); ++i; continue;
      case '?': push(Tok::Question, "?", start); ++i; continue;
      case '~': push(Tok::Tilde, "~", start); ++i; continue;
      case '&': push(Tok::Amp, "&", start); ++i; continue;
      case '*': push(Tok::Star, "*", start); ++i; continue;
      case '+': push(Tok::Plus, "+", start); ++i; continue;
      case ':':
        if (i + 1 < s.size() && s[i + 1] == ':') { push(Tok::ColonColon, "::", start); i += 2; continue; }
        if (i + 1 < s.size() && s[i + 1] == '=') { push(Tok::ColonEq, ":=", start); i += 2; continue; }
        throw ParseError(start, "expected '::' or ':='");
      case '|':
        if (i + 1 < s.size() && s[i + 1] == '-') { push(Tok::Turnstile, "|-", start); i += 2; continue; }
        push(Tok::Bar, "|", start); ++i; continue;
      case '-':
        if (i + 2 < s.size() && s[i + 1] == '-' && s[i + 2] == '>') { push(Tok::Arrow, "-->", start); i += 3; continue; }
        throw ParseError(start, "expected '-->'");
      case '=':
        if (i + 1 < s.size() && s[i + 1] == '>') { push(Tok::FatArrow, "=>", start); i += 2; continue; }
        push(Tok::Eq, "=", start); ++i; continue;
      default:
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// ------------------------------------------------------------------ AST --

struct Ast;
using AstPtr = std::unique_ptr<Ast>;

struct Ast {
  enum class K { Ident, ConstOp, SVar, Num, App, Lam };
  K k;
  std::size_t pos = 0;
  std::string name;   // Ident / ConstOp / SVar / Lam bound name
  NatValue num = 0;   // Num
  TypePtr ann;        // Lam annotation, may be null
  AstPtr f, a;        // App function/argument; Lam body in f
};

AstPtr mk_ast(Ast::K k, std::size_t pos) {
  auto p = std::make_unique<Ast>();
  p->k = k;
  p->pos = pos;
  return p;
}

AstPtr mk_app(AstPtr f, AstPtr a) {
  auto p = mk_ast(Ast::K::App, f->pos);
  p->f = std::move(f);
  p->a = std::move(a);
  return p;
}

AstPtr mk_const_op(const std::string& name, std::size_t pos) {
  auto p = mk_ast(Ast::K::ConstOp, pos);
  p->name = name;
  return p;
}

struct OpInfo {
  Tok tok;
  const char* constant;
  int prec;
  char assoc;  // 'L', 'R', 'N'
};

const OpInfo kBinops[] = {
    {Tok::Arrow, logic::kImplies, 25, 'R'},
    {Tok::Bar, logic::kDisj, 30, 'R'},
    {Tok::Amp, logic::kConj, 35, 'R'},
    {Tok::Eq, logic::kEquals, 50, 'N'},
    {Tok::Plus, nat::kPlus, 65, 'L'},
    {Tok::Star, nat::kTimes, 70, 'L'},
};

const OpInfo* binop_for(Tok t) {
  for (const auto& op : kBinops)
    if (op.tok == t) return &op;
  return nullptr;
}

constexpr int kNegPrec = 40;
constexpr int kAppPrec = 95;
constexpr int kAtomPrec = 100;
constexpr int kBinderPrec = 1;

// --------------------------------------------------------------- parser --

class Parser {
 public:
  Parser(std::string_view s, const SigView& sig) : toks_(lex(s)), sig_(sig) {}

  const Token& peek() const { return toks_[idx_]; }
  Token next() { return toks_[idx_++]; }
  Token expect(Tok k, const char* what) {
    if (peek().kind != k) throw ParseError(peek().pos, std::string("expected ") + what);
    return next();
  }
  bool at_end() const { return peek().kind == Tok::End; }
  void expect_end() {
    if (!at_end()) throw ParseError(peek().pos, "unexpected trailing input");
  }

  // -- types --

  TypePtr parse_type_expr() {
    TypePtr lhs = parse_type_postfix();
    if (peek().kind == Tok::FatArrow) {
      next();
      return fun_type(std::move(lhs), parse_type_expr());
    }
    return lhs;
  }

  TypePtr parse_type_postfix() {
    std::vector<TypePtr> group = parse_type_primary();
    while (peek().kind == Tok::Ident) {
      Token t = next();
      auto arity = sig_.type_arity(t.text);
      if (!arity) throw ParseError(t.pos, "unknown type constructor " + t.text);
      if (*arity != group.size())
        throw ParseError(t.pos, "type constructor " + t.text + " expects " +
                                    std::to_string(*arity) + " arguments");
      group = {HolType::app(t.text, std::move(group))};
    }
    if (group.size() != 1)
      throw ParseError(peek().pos, "expected a type constructor after the tuple");
    return group[0];
  }

  std::vector<TypePtr> parse_type_primary() {
    const Token& t = peek();
    if (t.kind == Tok::TyVar) {
      next();
      return {HolType::var(t.text)};
    }
    if (t.kind == Tok::Ident) {
      Token name = next();
      auto arity = sig_.type_arity(name.text);
      if (!arity) throw ParseError(name.pos, "unknown type constructor " + name.text);
      if (*arity != 0)
        throw ParseError(name.pos, "type constructor " + name.text + " expects " +
                                       std::to_string(*arity) + " arguments");
      return {HolType::app(name.text)};
    }
    if (t.kind == Tok::LParen) {
      next();
      std::vector<TypePtr> group;
      group.push_back(parse_type_expr());
      while (peek().kind == Tok::Comma) {
        next();
        group.push_back(parse_type_expr());
      }
      expect(Tok::RParen, "')'");
      return group;
    }
    throw ParseError(t.pos, "expected a type");
  }

  // -- terms --

  AstPtr parse_expr(int min_prec) {
    AstPtr lhs = parse_prefix();
    while (true) {
      const OpInfo* op = binop_for(peek().kind);
      if (!op || op->prec < min_prec) break;
      Token tok = next();
      int sub = op->assoc == 'R' ? op->prec : op->prec + 1;
      AstPtr rhs = parse_expr(sub);
      lhs = mk_app(mk_app(mk_const_op(op->constant, tok.pos), std::move(lhs)), std::move(rhs));
      if (op->assoc == 'N') {
        const OpInfo* again = binop_for(peek().kind);
        if (again && again->tok == op->tok)
          throw ParseError(peek().pos, std::string(tok.text) + " is non-associative");
      }
    }
    return lhs;
  }

  AstPtr parse_prefix() {
    if (peek().kind == Tok::Tilde) {
      Token t = next();
      AstPtr operand = parse_expr(kNegPrec);
      return mk_app(mk_const_op(logic::kNeg, t.pos), std::move(operand));
    }
    return parse_application();
  }

  bool starts_atom(Tok k) const {
    switch (k) {
      case Tok::Ident: case Tok::Numeral: case Tok::LParen:
      case Tok::Percent: case Tok::Bang: case Tok::Question:
        return true;
      default:
        return false;
    }
  }

  AstPtr parse_application() {
    AstPtr head = parse_atom();
    while (starts_atom(peek().kind)) head = mk_app(std::move(head), parse_atom());
    return head;
  }

  AstPtr parse_binder_tail(std::string name, std::size_t pos) {
    auto lam = mk_ast(Ast::K::Lam, pos);
    lam->name = std::move(name);
    if (peek().kind == Tok::ColonColon) {
      next();
      lam->ann = parse_type_expr();
    }
    expect(Tok::Dot, "'.'");
    lam->f = parse_expr(0);
    return lam;
  }

  AstPtr parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        Token tok = next();
        auto p = mk_ast(Ast::K::Ident, tok.pos);
        p->name = tok.text;
        return p;
      }
      case Tok::Numeral: {
        Token tok = next();
        auto v = nat_from_decimal(tok.text);
        if (!v) throw ParseError(tok.pos, "numeral too large");
        auto p = mk_ast(Ast::K::Num, tok.pos);
        p->num = *v;
        return p;
      }
      case Tok::LParen: {
        next();
        AstPtr e = parse_expr(0);
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Percent: {
        Token tok = next();
        Token name = expect(Tok::Ident, "a bound variable name");
        return parse_binder_tail(name.text, tok.pos);
      }
      case Tok::Bang: {
        Token tok = next();
        Token name = expect(Tok::Ident, "a bound variable name");
        AstPtr lam = parse_binder_tail(name.text, tok.pos);
        return mk_app(mk_const_op(logic::kForall, tok.pos), std::move(lam));
      }
      case Tok::Question: {
        Token tok = next();
        Token name = expect(Tok::Ident, "a name after '?'");
        if (peek().kind == Tok::ColonColon || peek().kind == Tok::Dot) {
          AstPtr lam = parse_binder_tail(name.text, tok.pos);
          return mk_app(mk_const_op(logic::kExists, tok.pos), std::move(lam));
        }
        auto p = mk_ast(Ast::K::SVar, tok.pos);
        p->name = name.text;
        return p;
      }
      default:
        throw ParseError(t.pos, "expected a term");
    }
  }

 private:
  std::vector<Token> toks_;
  std::size_t idx_ = 0;
  SigView sig_;
};

// ---------------------------------------------------------- elaboration --

// Type inference over simple types. Unification unknowns are type variables
// with reserved names "?N" (surface type variables cannot produce these).

struct ETerm;
using EPtr = std::shared_ptr<ETerm>;

struct ETerm {
  Term::Kind kind;
  std::string name;
  TypePtr ty;  // may contain unknowns until finalize
  EPtr fun, arg;
  std::size_t index = 0;
  TermPtr done;  // prebuilt subtree (numerals)
};

class Elaborator {
 public:
  Elaborator(const VarContext& ctx, const SigView& sig) : ctx_(ctx), sig_(sig) {}

  TermPtr run(const Ast& ast, const TypePtr& expected) {
    auto [e, ty] = elab(ast);
    if (expected) unify(ty, expected, ast.pos);
    return finalize(e, ast.pos);
  }

 private:
  static bool is_unknown(const TypePtr& ty) {
    return ty->is_var() && !ty->name().empty() && ty->name()[0] == '?';
  }

  TypePtr fresh() { return HolType::var("?" + std::to_string(counter_++)); }

  TypePtr resolve(TypePtr ty) const {
    while (is_unknown(ty)) {
      auto it = bind_.find(ty->name());
      if (it == bind_.end()) break;
      ty = it->second;
    }
    return ty;
  }

  bool occurs(const std::string& u, const TypePtr& ty) const {
    TypePtr r = resolve(ty);
    if (r->is_var()) return r->name() == u;
    for (const auto& a : r->args())
      if (occurs(u, a)) return true;
    return false;
  }

  void unify(const TypePtr& a0, const TypePtr& b0, std::size_t pos) {
    TypePtr a = resolve(a0), b = resolve(b0);
    if (is_unknown(a)) {
      if (b->is_var() && b->name() == a->name()) return;
      if (occurs(a->name(), b))
        throw TypeInferenceError("cyclic type constraint at position " + std::to_string(pos));
      bind_.emplace(a->name(), b);
      return;
    }
    if (is_unknown(b)) { unify(b, a, pos); return; }
    if (a->is_var() || b->is_var()) {
      if (a->is_var() && b->is_var() && a->name() == b->name()) return;
      throw TypeInferenceError("conflicting types " + print_type(a) + " vs " + print_type(b) +
                               " at position " + std::to_string(pos));
    }
    if (a->name() != b->name() || a->args().size() != b->args().size())
      throw TypeInferenceError("conflicting types " + print_type(a) + " vs " + print_type(b) +
                               " at position " + std::to_string(pos));
    for (std::size_t i = 0; i < a->args().size(); ++i) unify(a->args()[i], b->args()[i], pos);
  }

  // Instantiates a declared constant type with fresh unknowns per occurrence.
  TypePtr refresh(const TypePtr& declared) {
    std::vector<std::string> vars;
    collect_type_vars(declared, vars);
    if (vars.empty()) return declared;
    TypeInstantiation map;
    for (const auto& v : vars) map.emplace(v, fresh());
    return subst_type(map, declared);
  }

  std::pair<EPtr, TypePtr> elab(const Ast& ast) {
    auto e = std::make_shared<ETerm>();
    switch (ast.k) {
      case Ast::K::Ident: {
        for (std::size_t i = binders_.size(); i-- > 0;) {
          if (binders_[i].first == ast.name) {
            e->kind = Term::Kind::Bound;
            e->index = binders_.size() - 1 - i;
            e->ty = binders_[i].second;
            return {e, e->ty};
          }
        }
        auto it = ctx_.find(ast.name);
        if (it != ctx_.end()) {
          e->kind = Term::Kind::Var;
          e->name = ast.name;
          e->ty = it->second;
          return {e, e->ty};
        }
        if (TypePtr declared = sig_.constant_type(ast.name)) {
          e->kind = Term::Kind::Const;
          e->name = ast.name;
          e->ty = refresh(declared);
          return {e, e->ty};
        }
        throw ParseError(ast.pos, "unknown identifier " + ast.name);
      }
      case Ast::K::ConstOp: {
        TypePtr declared = sig_.constant_type(ast.name);
        if (!declared) throw ParseError(ast.pos, "constant " + ast.name + " is not declared");
        e->kind = Term::Kind::Const;
        e->name = ast.name;
        e->ty = refresh(declared);
        return {e, e->ty};
      }
      case Ast::K::SVar: {
        e->kind = Term::Kind::SVar;
        e->name = ast.name;
        e->ty = fresh();
        auto it = ctx_.find(ast.name);
        if (it != ctx_.end()) unify(e->ty, it->second, ast.pos);
        return {e, e->ty};
      }
      case Ast::K::Num: {
        for (const char* c : {nat::kZero, nat::kOne, nat::kBit0, nat::kBit1})
          if (!sig_.constant_type(c))
            throw ParseError(ast.pos, std::string("numerals unavailable: constant ") + c +
                                          " is not declared");
        e->kind = Term::Kind::Const;  // placeholder; `done` carries the tree
        e->done = mk_numeral(ast.num);
        e->ty = nat_type();
        return {e, e->ty};
      }
      case Ast::K::App: {
        auto [ef, tf] = elab(*ast.f);
        auto [ea, ta] = elab(*ast.a);
        TypePtr result = fresh();
        unify(tf, fun_type(ta, result), ast.pos);
        e->kind = Term::Kind::App;
        e->fun = ef;
        e->arg = ea;
        return {e, result};
      }
      case Ast::K::Lam: {
        TypePtr bty = ast.ann ? ast.ann : fresh();
        binders_.emplace_back(ast.name, bty);
        auto [eb, tb] = elab(*ast.f);
        binders_.pop_back();
        e->kind = Term::Kind::Abs;
        e->name = ast.name;
        e->ty = bty;
        e->fun = eb;
        return {e, fun_type(bty, tb)};
      }
    }
    throw ParseError(ast.pos, "malformed expression");
  }

  TypePtr resolve_deep(const TypePtr& ty, std::size_t pos) const {
    TypePtr r = resolve(ty);
    if (is_unknown(r))
      throw TypeInferenceError("ambiguous type at position " + std::to_string(pos) +
                               "; add a type annotation");
    if (r->is_var()) return r;
    std::vector<TypePtr> args;
    args.reserve(r->args().size());
    for (const auto& a : r->args()) args.push_back(resolve_deep(a, pos));
    return HolType::app(r->name(), std::move(args));
  }

  TermPtr finalize(const EPtr& e, std::size_t pos) const {
    if (e->done) return e->done;
    switch (e->kind) {
      case Term::Kind::Var: return Term::var(e->name, resolve_deep(e->ty, pos));
      case Term::Kind::SVar: return Term::svar(e->name, resolve_deep(e->ty, pos));
      case Term::Kind::Const: return Term::constant(e->name, resolve_deep(e->ty, pos));
      case Term::Kind::Bound: return Term::bound(e->index);
      case Term::Kind::App: return Term::app(finalize(e->fun, pos), finalize(e->arg, pos));
      case Term::Kind::Abs:
        return Term::abs(e->name, resolve_deep(e->ty, pos), finalize(e->fun, pos));
    }
    throw TypeInferenceError("malformed expression");
  }

  const VarContext& ctx_;
  SigView sig_;
  std::map<std::string, TypePtr> bind_;
  std::vector<std::pair<std::string, TypePtr>> binders_;
  int counter_ = 0;
};

TermPtr elaborate(const Ast& ast, const VarContext& ctx, const SigView& sig,
                  const TypePtr& expected) {
  return Elaborator(ctx, sig).run(ast, expected);
}

}  // namespace

// ------------------------------------------------------- public parsing --

TypePtr parse_type(std::string_view s, const SigView& sig) {
  Parser p(s, sig);
  TypePtr ty = p.parse_type_expr();
  p.expect_end();
  return ty;
}

TermPtr parse_term(std::string_view s, const VarContext& ctx, const SigView& sig) {
  Parser p(s, sig);
  AstPtr ast = p.parse_expr(0);
  p.expect_end();
  TermPtr t = elaborate(*ast, ctx, sig, nullptr);
  type_of(t, sig);  // validates constants against their declarations
  return t;
}

Sequent parse_sequent(std::string_view s, const VarContext& ctx, const SigView& sig) {
  Parser p(s, sig);
  std::vector<AstPtr> hyp_asts;
  if (p.peek().kind != Tok::Turnstile) {
    hyp_asts.push_back(p.parse_expr(0));
    while (p.peek().kind == Tok::Comma) {
      p.next();
      hyp_asts.push_back(p.parse_expr(0));
    }
  }
  p.expect(Tok::Turnstile, "'|-'");
  AstPtr prop_ast = p.parse_expr(0);
  p.expect_end();
  std::vector<TermPtr> hyps;
  for (const auto& h : hyp_asts) {
    TermPtr t = elaborate(*h, ctx, sig, bool_type());
    type_of(t, sig);
    hyps.push_back(std::move(t));
  }
  TermPtr prop = elaborate(*prop_ast, ctx, sig, bool_type());
  type_of(prop, sig);
  return Sequent(std::move(hyps), std::move(prop));
}

Instantiation parse_instantiation(std::string_view s, const VarContext& ctx, const SigView& sig) {
  Parser p(s, sig);
  Instantiation inst;
  p.expect(Tok::LBrace, "'{'");
  bool first = true;
  while (p.peek().kind != Tok::RBrace) {
    if (!first) p.expect(Tok::Comma, "','");
    first = false;
    if (p.peek().kind == Tok::TyVar) {
      Token name = p.next();
      p.expect(Tok::ColonEq, "':='");
      TypePtr ty = p.parse_type_expr();
      if (!inst.types.emplace(name.text, ty).second)
        throw ParseError(name.pos, "duplicate entry for '" + name.text);
    } else {
      Token name = p.expect(Tok::Ident, "a variable name");
      p.expect(Tok::ColonEq, "':='");
      AstPtr ast = p.parse_expr(0);
      TermPtr t = elaborate(*ast, ctx, sig, nullptr);
      type_of(t, sig);
      if (!inst.terms.emplace(name.text, t).second)
        throw ParseError(name.pos, "duplicate entry for " + name.text);
    }
  }
  p.expect(Tok::RBrace, "'}'");
  p.expect_end();
  return inst;
}

// ------------------------------------------------------------ printing --

namespace {

bool printed_with_parens(const TypePtr& ty) { return ty->is_fun(); }

void print_type_rec(std::string& out, const TypePtr& ty) {
  if (ty->is_var()) {
    out += "'";
    out += ty->name();
    return;
  }
  if (ty->is_fun()) {
    if (printed_with_parens(ty->domain())) {
      out += "(";
      print_type_rec(out, ty->domain());
      out += ")";
    } else {
      print_type_rec(out, ty->domain());
    }
    out += " => ";
    print_type_rec(out, ty->range());
    return;
  }
  if (ty->args().empty()) {
    out += ty->name();
    return;
  }
  if (ty->args().size() == 1) {
    if (printed_with_parens(ty->args()[0])) {
      out += "(";
      print_type_rec(out, ty->args()[0]);
      out += ")";
    } else {
      print_type_rec(out, ty->args()[0]);
    }
    out += " ";
    out += ty->name();
    return;
  }
  out += "(";
  for (std::size_t i = 0; i < ty->args().size(); ++i) {
    if (i) out += ", ";
    print_type_rec(out, ty->args()[i]);
  }
  out += ") ";
  out += ty->name();
}

struct PrintOp {
  const char* constant;
  const char* sym;
  int prec;
  char assoc;
};

const PrintOp kPrintOps[] = {
    {logic::kImplies, "-->", 25, 'R'},
    {logic::kDisj, "|", 30, 'R'},
    {logic::kConj, "&", 35, 'R'},
    {logic::kEquals, "=", 50, 'N'},
    {nat::kPlus, "+", 65, 'L'},
    {nat::kTimes, "*", 70, 'L'},
};

const PrintOp* print_op_for(const TermPtr& t) {
  for (const auto& op : kPrintOps)
    if (logic::is_binop(t, op.constant)) return &op;
  return nullptr;
}

void names_in(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind()) {
    case Term::Kind::Var:
    case Term::Kind::SVar:
    case Term::Kind::Const:
      out.insert(t->name());
      return;
    case Term::Kind::Bound:
      return;
    case Term::Kind::App:
      names_in(t->fun(), out);
      names_in(t->arg(), out);
      return;
    case Term::Kind::Abs:
      names_in(t->body(), out);
      return;
  }
}

std::string binder_name(const TermPtr& abs, const std::vector<std::string>& bound) {
  std::set<std::string> avoid;
  names_in(abs->body(), avoid);
  avoid.insert(bound.begin(), bound.end());
  std::string name = abs->name().empty() ? "x" : abs->name();
  while (avoid.count(name)) name += "'";
  return name;
}

bool is_quantifier(const TermPtr& t, const char* name) {
  return t->is_app() && t->fun()->is_const() && t->fun()->name() == name && t->arg()->is_abs();
}

void print_rec(std::string& out, const TermPtr& t, int min_prec,
               std::vector<std::string>& bound) {
  if (auto v = numeral_value(t)) {
    out += nat_to_decimal(*v);
    return;
  }

  auto parens = [&](int node_prec) { return node_prec < min_prec; };

  for (const char* q : {logic::kForall, logic::kExists}) {
    if (is_quantifier(t, q)) {
      const TermPtr& lam = t->arg();
      std::string name = binder_name(lam, bound);
      bool wrap = parens(kBinderPrec);
      if (wrap) out += "(";
      out += (q == logic::kForall ? "!" : "?");
      out += name;
      out += "::";
      print_type_rec(out, lam->ty());
      out += ". ";
      bound.push_back(name);
      print_rec(out, lam->body(), 0, bound);
      bound.pop_back();
      if (wrap) out += ")";
      return;
    }
  }

  if (t->is_app() && t->fun()->is_const() && t->fun()->name() == logic::kNeg) {
    bool wrap = parens(kNegPrec);
    if (wrap) out += "(";
    out += "~";
    print_rec(out, t->arg(), kNegPrec, bound);
    if (wrap) out += ")";
    return;
  }

  if (const PrintOp* op = print_op_for(t)) {
    bool wrap = parens(op->prec);
    if (wrap) out += "(";
    int lp = op->assoc == 'L' ? op->prec : op->prec + 1;
    int rp = op->assoc == 'R' ? op->prec : op->prec + 1;
    print_rec(out, logic::binop_lhs(t), lp, bound);
    out += " ";
    out += op->sym;
    out += " ";
    print_rec(out, logic::binop_rhs(t), rp, bound);
    if (wrap) out += ")";
    return;
  }

  switch (t->kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      out += t->name();
      return;
    case Term::Kind::SVar:
      out += "?";
      out += t->name();
      return;
    case Term::Kind::Bound: {
      if (t->index() < bound.size()) {
        out += bound[bound.size() - 1 - t->index()];
      } else {
        out += "#";  // loose index; not parseable, diagnostic only
        out += std::to_string(t->index());
      }
      return;
    }
    case Term::Kind::App: {
      bool wrap = parens(kAppPrec);
      if (wrap) out += "(";
      print_rec(out, t->fun(), kAppPrec, bound);
      out += " ";
      print_rec(out, t->arg(), kAppPrec + 1, bound);
      if (wrap) out += ")";
      return;
    }
    case Term::Kind::Abs: {
      std::string name = binder_name(t, bound);
      bool wrap = parens(kBinderPrec);
      if (wrap) out += "(";
      out += "%";
      out += name;
      out += "::";
      print_type_rec(out, t->ty());
      out += ". ";
      bound.push_back(name);
      print_rec(out, t->body(), 0, bound);
      bound.pop_back();
      if (wrap) out += ")";
      return;
    }
  }
}

}  // namespace

std::string print_type(const TypePtr& ty) {
  std::string out;
  print_type_rec(out, ty);
  return out;
}

std::string print_term(const TermPtr& t) {
  std::string out;
  std::vector<std::string> bound;
  print_rec(out, t, 0, bound);
  return out;
}

std::string print_sequent(const Sequent& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.hyps().size(); ++i) {
    if (i) out += ", ";
    out += print_term(seq.hyps()[i]);
  }
  if (!seq.hyps().empty()) out += " ";
  out += "|- ";
  out += print_term(seq.prop());
  return out;
}

std::string print_instantiation(const Instantiation& inst) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, ty] : inst.types) {
    if (!first) out += ", ";
    first = false;
    out += "'" + name + " := " + print_type(ty);
  }
  for (const auto& [name, t] : inst.terms) {
    if (!first) out += ", ";
    first = false;
    out += name + " := " + print_term(t);
  }
  return out + "}";
}

RuleArgs parse_rule_args(ArgShape shape, std::string_view s, const VarContext& ctx,
                         const SigView& sig) {
  switch (shape) {
    case ArgShape::None: {
      Parser p(s, sig);
      p.expect_end();
      return std::monostate{};
    }
    case ArgShape::Term:
      return parse_term(s, ctx, sig);
    case ArgShape::Variable: {
      Parser p(s, sig);
      Token name = p.expect(Tok::Ident, "a variable name");
      TypePtr ty;
      if (p.peek().kind == Tok::ColonColon) {
        p.next();
        ty = p.parse_type_expr();
      } else {
        auto it = ctx.find(name.text);
        if (it == ctx.end())
          throw ParseError(name.pos, "variable " + name.text + " not in context; annotate as name::type");
        ty = it->second;
      }
      p.expect_end();
      return TermPtr(Term::var(name.text, ty));
    }
    case ArgShape::Inst:
      return parse_instantiation(s, ctx, sig);
    case ArgShape::TheoremName: {
      Parser p(s, sig);
      Token name = p.expect(Tok::Ident, "a theorem name");
      p.expect_end();
      return name.text;
    }
    case ArgShape::SequentArg:
      return parse_sequent(s, ctx, sig);
  }
  throw HolError("unknown argument shape");
}

std::string print_rule_args(ArgShape shape, const RuleArgs& args) {
  switch (shape) {
    case ArgShape::None:
      return "";
    case ArgShape::Term:
      return print_term(std::get<TermPtr>(args));
    case ArgShape::Variable: {
      const TermPtr& v = std::get<TermPtr>(args);
      return v->name() + "::" + print_type(v->ty());
    }
    case ArgShape::Inst:
      return print_instantiation(std::get<Instantiation>(args));
    case ArgShape::TheoremName:
      return std::get<std::string>(args);
    case ArgShape::SequentArg:
      return print_sequent(std::get<Sequent>(args));
  }
  throw HolError("unknown argument shape");
}

}  // namespace holcheck
