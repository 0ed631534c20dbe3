#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace holcheck {

class HolType;
using TypePtr = std::shared_ptr<const HolType>;

// Simple types: type variables ('a) and applied type constructors
// (bool, nat, fun(A,B), ...). Values are immutable and freely shared.
class HolType {
 public:
  enum class Kind { Var, App };

  static TypePtr var(std::string name);
  static TypePtr app(std::string constructor, std::vector<TypePtr> args = {});

  Kind kind() const { return kind_; }
  // Variable name, or constructor name for applications.
  const std::string& name() const { return name_; }
  const std::vector<TypePtr>& args() const { return args_; }

  bool is_var() const { return kind_ == Kind::Var; }
  bool is_app() const { return kind_ == Kind::App; }
  bool is_fun() const;
  // Domain/range of a fun type; only valid when is_fun().
  const TypePtr& domain() const { return args_[0]; }
  const TypePtr& range() const { return args_[1]; }

 private:
  HolType(Kind kind, std::string name, std::vector<TypePtr> args)
      : kind_(kind), name_(std::move(name)), args_(std::move(args)) {}

  Kind kind_;
  std::string name_;
  std::vector<TypePtr> args_;
};

// The function type constructor is the 2-ary constructor named "fun".
inline constexpr const char* kFunConstructor = "fun";

TypePtr fun_type(TypePtr domain, TypePtr range);
TypePtr bool_type();
TypePtr nat_type();

bool equal(const TypePtr& a, const TypePtr& b);
// Total order: Var < App, then name, then args lexicographically.
int compare(const TypePtr& a, const TypePtr& b);

// Mapping from type-variable name to type.
using TypeInstantiation = std::map<std::string, TypePtr>;

TypePtr subst_type(const TypeInstantiation& tyinst, const TypePtr& ty);

// Extends `tyinst` so that subst_type(tyinst, pattern) == target.
// Throws MatchFailure / ConflictingAssignment.
void match_type(const TypePtr& pattern, const TypePtr& target, TypeInstantiation& tyinst);

void collect_type_vars(const TypePtr& ty, std::vector<std::string>& out);

}  // namespace holcheck
