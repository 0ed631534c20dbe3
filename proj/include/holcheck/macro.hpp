#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "holcheck/proof.hpp"

namespace holcheck {

// A named proof rule abbreviating several primitive steps. `eval` computes
// the claimed sequent directly; `expand` (optional) produces a proof term
// for the same sequent so the claim can be checked without trusting eval.
// Lower levels are more trustworthy.
struct MacroDefinition {
  std::string name;
  std::uint32_t level = 0;
  ArgShape arg_shape = ArgShape::None;
  std::function<Sequent(const TheoryView&, const RuleArgs&, const std::vector<Sequent>&)> eval;
  std::function<ProofNodePtr(const TheoryView&, const RuleArgs&, const std::vector<ProofNodePtr>&)>
      expand;  // null when the macro has no expansion
};

// Global table of macros. Built-ins are registered on first access; further
// registration is allowed until the registry is frozen, which happens before
// any checking begins. Lookups after freeze are pure.
class MacroRegistry {
 public:
  static MacroRegistry& instance();

  void add(MacroDefinition def);  // throws RegistryFrozen / SchemaError on duplicate
  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  const MacroDefinition* find(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  MacroRegistry();

  std::map<std::string, MacroDefinition> defs_;
  bool frozen_ = false;
};

// Defined in macros_builtin.cpp; called once by MacroRegistry's constructor.
void register_builtin_macros(MacroRegistry& reg);

}  // namespace holcheck
