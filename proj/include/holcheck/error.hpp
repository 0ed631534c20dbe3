#pragma once

#include <stdexcept>
#include <string>

namespace holcheck {

// Base class of all checker errors. Every failure surfaced by the library is
// a subclass of this, so callers can catch one type at the boundary.
struct HolError : std::runtime_error {
  explicit HolError(const std::string& msg) : std::runtime_error(msg) {}
};

// Ill-typed term; `path` locates the offending subterm ("fun.arg.body"-style).
struct TypeError : HolError {
  std::string path;
  TypeError(std::string path_, const std::string& msg)
      : HolError(path_.empty() ? msg : msg + " (at " + path_ + ")"), path(std::move(path_)) {}
};

struct ParseError : HolError {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& expected)
      : HolError("parse error at position " + std::to_string(pos) + ": " + expected),
        position(pos) {}
};

struct TypeInferenceError : HolError {
  explicit TypeInferenceError(const std::string& msg) : HolError("type inference: " + msg) {}
};

// A primitive rule was applied with the wrong arity, argument shape, or a
// violated side condition.
struct RuleMismatch : HolError {
  std::string rule;
  RuleMismatch(std::string rule_, const std::string& reason)
      : HolError("rule " + rule_ + ": " + reason), rule(std::move(rule_)) {}
};

struct UnknownTheorem : HolError {
  std::string name;
  explicit UnknownTheorem(std::string name_)
      : HolError("unknown theorem: " + name_), name(std::move(name_)) {}
};

struct MatchFailure : HolError {
  std::string path;
  explicit MatchFailure(std::string path_, const std::string& reason = "no match")
      : HolError("match failure at " + (path_.empty() ? "root" : path_) + ": " + reason),
        path(std::move(path_)) {}
};

struct ConflictingAssignment : HolError {
  std::string name;
  explicit ConflictingAssignment(std::string name_)
      : HolError("conflicting assignment for " + name_), name(std::move(name_)) {}
};

struct InstantiationTypeMismatch : HolError {
  std::string name;
  explicit InstantiationTypeMismatch(std::string name_)
      : HolError("instantiation type mismatch for " + name_), name(std::move(name_)) {}
};

struct LengthMismatch : HolError {
  LengthMismatch(std::size_t lhs, std::size_t rhs)
      : HolError("length mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

// A linear-proof item failed to check; `id` is the dotted item identifier.
struct CheckFailure : HolError {
  std::string id;
  CheckFailure(std::string id_, const std::string& reason)
      : HolError("check failure at item " + id_ + ": " + reason), id(std::move(id_)) {}
};

struct NoExpansion : HolError {
  std::string macro_name;
  explicit NoExpansion(std::string macro_name_)
      : HolError("macro has no expansion: " + macro_name_), macro_name(std::move(macro_name_)) {}
};

struct MacroError : HolError {
  std::string macro_name;
  MacroError(std::string macro_name_, const std::string& reason)
      : HolError("macro " + macro_name_ + ": " + reason), macro_name(std::move(macro_name_)) {}
};

struct NotClosedArithmetic : MacroError {
  explicit NotClosedArithmetic(const std::string& detail)
      : MacroError("nat_arith_eval", "not a closed arithmetic term: " + detail) {}
};

struct NormalizationMismatch : MacroError {
  std::string canonical_lhs, canonical_rhs;
  NormalizationMismatch(std::string lhs, std::string rhs)
      : MacroError("nat_norm_poly", "sides normalize differently: " + lhs + " vs " + rhs),
        canonical_lhs(std::move(lhs)), canonical_rhs(std::move(rhs)) {}
};

struct MissingLemma : MacroError {
  std::string lemma;
  MissingLemma(const std::string& macro, std::string lemma_)
      : MacroError(macro, "missing lemma " + lemma_), lemma(std::move(lemma_)) {}
};

// Theory file violates the schema; `path` is a JSON-pointer-ish location.
struct SchemaError : HolError {
  std::string path;
  SchemaError(std::string path_, const std::string& reason)
      : HolError("schema error at " + path_ + ": " + reason), path(std::move(path_)) {}
};

struct UnsupportedItem : SchemaError {
  UnsupportedItem(const std::string& path, const std::string& ty)
      : SchemaError(path, "item kind '" + ty + "' is not supported; axiomatize instead") {}
};

struct ImportCycle : HolError {
  explicit ImportCycle(const std::string& chain) : HolError("import cycle: " + chain) {}
};

struct ImportNotFound : HolError {
  std::string name;
  explicit ImportNotFound(std::string name_)
      : HolError("import not found: " + name_), name(std::move(name_)) {}
};

struct RegistryFrozen : HolError {
  RegistryFrozen() : HolError("macro registry is frozen") {}
};

}  // namespace holcheck
