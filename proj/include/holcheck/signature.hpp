#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "holcheck/type.hpp"

namespace holcheck {

// Declared type constructors (name -> arity) and constants (name -> most
// general type). Every entry records the theory-item index that introduced
// it, so lookups can be restricted to a prefix of the theory during checking.
// Imported declarations use index 0; item i declares at index i + 1.
class Signature {
 public:
  static constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();
  static constexpr std::size_t kImported = 0;

  Signature();  // declares the built-ins: bool (arity 0), fun (arity 2)

  // Redeclaration with identical arity/type is tolerated (diamond imports);
  // a conflicting redeclaration throws SchemaError.
  void declare_type(const std::string& name, std::size_t arity, std::size_t index = kImported);
  void declare_constant(const std::string& name, const TypePtr& ty, std::size_t index = kImported);

  std::optional<std::size_t> type_arity(const std::string& name,
                                        std::size_t limit = kNoLimit) const;
  // Most general declared type, or nullptr when absent (or declared later
  // than `limit`).
  TypePtr constant_type(const std::string& name, std::size_t limit = kNoLimit) const;

  const std::map<std::string, std::pair<std::size_t, std::size_t>>& types() const {
    return types_;
  }
  const std::map<std::string, std::pair<TypePtr, std::size_t>>& constants() const {
    return constants_;
  }

 private:
  std::map<std::string, std::pair<std::size_t, std::size_t>> types_;      // name -> (arity, index)
  std::map<std::string, std::pair<TypePtr, std::size_t>> constants_;      // name -> (type, index)
};

// A signature restricted to declarations visible at `limit`. What the parser
// and kernel take; implicitly built from a bare Signature (no restriction).
struct SigView {
  const Signature* sig;
  std::size_t limit;

  SigView(const Signature& s) : sig(&s), limit(Signature::kNoLimit) {}  // NOLINT(runtime/explicit)
  SigView(const Signature& s, std::size_t limit_) : sig(&s), limit(limit_) {}

  std::optional<std::size_t> type_arity(const std::string& name) const {
    return sig->type_arity(name, limit);
  }
  TypePtr constant_type(const std::string& name) const {
    return sig->constant_type(name, limit);
  }
};

}  // namespace holcheck
