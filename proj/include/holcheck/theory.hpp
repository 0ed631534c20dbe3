#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holcheck/proof.hpp"
#include "holcheck/sequent.hpp"
#include "holcheck/signature.hpp"
#include "holcheck/syntax.hpp"

namespace holcheck {

struct TheoryItem {
  enum class Kind { TypeDecl, ConstDecl, Axiom, Definition, Theorem };

  Kind kind;
  std::string name;
  std::size_t arity = 0;  // TypeDecl
  TypePtr ty;             // ConstDecl / Definition declared type
  VarContext vars;        // Axiom / Theorem free-variable context
  TermPtr prop;           // Axiom / Definition equation / Theorem statement
  LinearProof proof;      // Theorem
  std::vector<std::string> attributes;
  bool has_attributes = false;
  std::optional<std::int64_t> num_gaps;
  // Unknown extra keys, preserved verbatim through load/save (serialized
  // JSON object; empty when none).
  std::string extra_json;
};

// A named theory: declarations, axioms, definitions, and proved theorems,
// with the signature and theorem table derived left to right over the
// import closure. Immutable once loaded.
class Theory {
 public:
  struct TheoremEntry {
    TermPtr prop;     // named-variable form
    VarContext vars;  // variables converted to schematic form on request
    std::size_t index;
  };

  const std::string& name() const { return name_; }
  const std::vector<std::string>& imports() const { return imports_; }
  const std::vector<TheoryItem>& items() const { return items_; }
  const Signature& signature() const { return sig_; }

  bool has_theorem(const std::string& name, std::size_t limit = Signature::kNoLimit) const;
  // The stored sequent (no hypotheses); with `schematic`, free variables
  // listed in the item's vars become schematic variables.
  Sequent get_theorem(const std::string& name, bool schematic,
                      std::size_t limit = Signature::kNoLimit) const;
  const std::map<std::string, TheoremEntry>& theorems() const { return theorems_; }

 private:
  friend class TheoryBuilder;
  friend Theory expand_theorem(const Theory&, const std::string&);

  std::string name_;
  std::vector<std::string> imports_;
  std::vector<TheoryItem> items_;
  Signature sig_;
  std::map<std::string, TheoremEntry> theorems_;
};

// A theory restricted to the declarations and theorems visible while
// checking item `limit` (imports plus strictly earlier items).
class TheoryView {
 public:
  TheoryView(const Theory& thy)  // NOLINT(runtime/explicit)
      : thy_(&thy), limit_(Signature::kNoLimit) {}
  TheoryView(const Theory& thy, std::size_t item_limit) : thy_(&thy), limit_(item_limit) {}

  const Theory& theory() const { return *thy_; }
  std::size_t limit() const { return limit_; }
  SigView sig() const { return SigView(thy_->signature(), limit_); }
  Sequent get_theorem(const std::string& name, bool schematic) const {
    return thy_->get_theorem(name, schematic, limit_);
  }

 private:
  const Theory* thy_;
  std::size_t limit_;
};

// Loads a theory file, resolving imports recursively through `search_paths`
// (each import loaded at most once; cycles rejected). All prop/type strings
// are parsed eagerly against the growing signature.
Theory load_theory(const std::string& path, const std::vector<std::string>& search_paths);

// Canonical emission: fixed key order, 2-space indentation, UTF-8, trailing
// newline. load(save(thy)) == thy, and save . load is byte-idempotent.
void save_theory(const Theory& thy, const std::string& path);
std::string theory_to_json(const Theory& thy);

struct CheckOptions {
  TrustPolicy trust;
  bool fail_fast = false;
};

struct TheoremOutcome {
  std::string name;
  bool ok = false;
  std::string error;  // empty when ok
  CheckReport report;
};

struct TheoryCheckReport {
  std::vector<TheoremOutcome> theorems;
  std::size_t total_steps = 0;
  std::size_t total_trusted = 0;
  std::size_t total_expanded = 0;
  std::vector<std::string> theorems_with_gaps;

  bool all_ok() const;
  bool ok(bool no_gaps) const;
};

// Checks every Theorem item's proof against its stated prop, each under the
// theory prefix visible at that item. Collects all failures unless
// fail_fast is set.
TheoryCheckReport check_theory(const Theory& thy, const CheckOptions& options = {});

// A copy of the theory with the named theorem's proof replaced by its fully
// macro-expanded linear proof (primitive rules only). Throws UnknownTheorem
// when the theory has no such Theorem item, NoExpansion when a macro in the
// proof lacks an expansion.
Theory expand_theorem(const Theory& thy, const std::string& theorem_name);

}  // namespace holcheck
