#pragma once

#include <functional>
#include <string>

#include "holcheck/proof.hpp"

namespace holcheck {

// Conversions turn a term t into a proof of |- t = t'. Failure is an
// explicit value, not an exception, so combinators like top_conv can
// recover at positions where a conversion does not apply.

struct ConvError {
  enum class Kind { ShapeMismatch, MatchFailure, NotAnEquation, BudgetExceeded, Failed };
  Kind kind = Kind::Failed;
  std::string message;
};

class ConvResult {
 public:
  ConvResult(ProofNodePtr node) : node_(std::move(node)) {}  // NOLINT(runtime/explicit)
  ConvResult(ConvError error) : error_(std::move(error)) {}  // NOLINT(runtime/explicit)

  bool ok() const { return node_ != nullptr; }
  const ProofNodePtr& proof() const { return node_; }
  const ConvError& error() const { return error_; }
  // Right-hand side of the proved equation.
  const TermPtr& rhs() const;

 private:
  ProofNodePtr node_;
  ConvError error_;
};

using Conversion = std::function<ConvResult(const TheoryView&, const TermPtr&)>;

// |- t = t, via reflexive.
Conversion all_conv();
// cv1 then cv2 on cv1's right-hand side, joined by transitivity.
Conversion then_conv(Conversion cv1, Conversion cv2);
// Rewrites with the named (schematic) equation theorem: |- t = rhs[match].
Conversion rewr_conv(std::string theorem_name);
// Congruence: apply cv under one application argument / function position /
// abstraction body / both operands of a binary operator.
Conversion arg_conv(Conversion cv);
Conversion fun_conv(Conversion cv);
Conversion abs_conv(Conversion cv);
Conversion binop_conv(Conversion cv);
// Applies cv at every subterm position, top-down, repeating at a position
// until cv fails there. Each successful rewrite consumes budget;
// BudgetExceeded stops runaway rewrite systems.
Conversion top_conv(Conversion cv, std::size_t budget = 0);  // 0: use the default

std::size_t default_conv_budget();
void set_default_conv_budget(std::size_t budget);

}  // namespace holcheck
