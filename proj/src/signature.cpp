#include "holcheck/signature.hpp"

#include "holcheck/error.hpp"

namespace holcheck {

Signature::Signature() {
  types_.emplace("bool", std::make_pair(std::size_t{0}, kImported));
  types_.emplace(kFunConstructor, std::make_pair(std::size_t{2}, kImported));
}

void Signature::declare_type(const std::string& name, std::size_t arity, std::size_t index) {
  auto it = types_.find(name);
  if (it != types_.end()) {
    if (it->second.first != arity)
      throw SchemaError(name, "type constructor redeclared with different arity");
    it->second.second = std::min(it->second.second, index);
    return;
  }
  types_.emplace(name, std::make_pair(arity, index));
}

void Signature::declare_constant(const std::string& name, const TypePtr& ty, std::size_t index) {
  auto it = constants_.find(name);
  if (it != constants_.end()) {
    if (!equal(it->second.first, ty))
      throw SchemaError(name, "constant redeclared with different type");
    it->second.second = std::min(it->second.second, index);
    return;
  }
  constants_.emplace(name, std::make_pair(ty, index));
}

std::optional<std::size_t> Signature::type_arity(const std::string& name,
                                                 std::size_t limit) const {
  auto it = types_.find(name);
  if (it == types_.end() || it->second.second > limit) return std::nullopt;
  return it->second.first;
}

TypePtr Signature::constant_type(const std::string& name, std::size_t limit) const {
  auto it = constants_.find(name);
  if (it == constants_.end() || it->second.second > limit) return nullptr;
  return it->second.first;
}

}  // namespace holcheck
