#include "holcheck/macro.hpp"

#include "holcheck/error.hpp"

namespace holcheck {

MacroRegistry::MacroRegistry() { register_builtin_macros(*this); }

MacroRegistry& MacroRegistry::instance() {
  static MacroRegistry reg;
  return reg;
}

void MacroRegistry::add(MacroDefinition def) {
  if (frozen_) throw RegistryFrozen();
  if (is_primitive_rule(def.name))
    throw SchemaError(def.name, "macro name collides with a primitive rule");
  if (!defs_.emplace(def.name, std::move(def)).second)
    throw SchemaError(def.name, "macro registered twice");
}

const MacroDefinition* MacroRegistry::find(const std::string& name) const {
  auto it = defs_.find(name);
  return it == defs_.end() ? nullptr : &it->second;
}

std::vector<std::string> MacroRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, def] : defs_) out.push_back(name);
  return out;
}

}  // namespace holcheck
