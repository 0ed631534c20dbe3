#include "holcheck/type.hpp"

#include <algorithm>

#include "holcheck/error.hpp"

namespace holcheck {

TypePtr HolType::var(std::string name) {
  return TypePtr(new HolType(Kind::Var, std::move(name), {}));
}

TypePtr HolType::app(std::string constructor, std::vector<TypePtr> args) {
  return TypePtr(new HolType(Kind::App, std::move(constructor), std::move(args)));
}

bool HolType::is_fun() const {
  return kind_ == Kind::App && name_ == kFunConstructor && args_.size() == 2;
}

TypePtr fun_type(TypePtr domain, TypePtr range) {
  return HolType::app(kFunConstructor, {std::move(domain), std::move(range)});
}

TypePtr bool_type() {
  static const TypePtr ty = HolType::app("bool");
  return ty;
}

TypePtr nat_type() {
  static const TypePtr ty = HolType::app("nat");
  return ty;
}

bool equal(const TypePtr& a, const TypePtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind() || a->name() != b->name()) return false;
  if (a->args().size() != b->args().size()) return false;
  for (std::size_t i = 0; i < a->args().size(); ++i)
    if (!equal(a->args()[i], b->args()[i])) return false;
  return true;
}

int compare(const TypePtr& a, const TypePtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind() != b->kind()) return a->kind() < b->kind() ? -1 : 1;
  if (int c = a->name().compare(b->name())) return c < 0 ? -1 : 1;
  if (a->args().size() != b->args().size())
    return a->args().size() < b->args().size() ? -1 : 1;
  for (std::size_t i = 0; i < a->args().size(); ++i)
    if (int c = compare(a->args()[i], b->args()[i])) return c;
  return 0;
}

TypePtr subst_type(const TypeInstantiation& tyinst, const TypePtr& ty) {
  if (tyinst.empty()) return ty;
  if (ty->is_var()) {
    auto it = tyinst.find(ty->name());
    return it == tyinst.end() ? ty : it->second;
  }
  std::vector<TypePtr> args;
  args.reserve(ty->args().size());
  bool changed = false;
  for (const auto& a : ty->args()) {
    args.push_back(subst_type(tyinst, a));
    changed = changed || args.back().get() != a.get();
  }
  return changed ? HolType::app(ty->name(), std::move(args)) : ty;
}

void match_type(const TypePtr& pattern, const TypePtr& target, TypeInstantiation& tyinst) {
  if (pattern->is_var()) {
    auto it = tyinst.find(pattern->name());
    if (it != tyinst.end()) {
      if (!equal(it->second, target)) throw ConflictingAssignment("'" + pattern->name());
      return;
    }
    tyinst.emplace(pattern->name(), target);
    return;
  }
  if (!target->is_app() || pattern->name() != target->name() ||
      pattern->args().size() != target->args().size())
    throw MatchFailure("type", pattern->name() + " vs " + target->name());
  for (std::size_t i = 0; i < pattern->args().size(); ++i)
    match_type(pattern->args()[i], target->args()[i], tyinst);
}

void collect_type_vars(const TypePtr& ty, std::vector<std::string>& out) {
  if (ty->is_var()) {
    if (std::find(out.begin(), out.end(), ty->name()) == out.end()) out.push_back(ty->name());
    return;
  }
  for (const auto& a : ty->args()) collect_type_vars(a, out);
}

}  // namespace holcheck
