#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "holcheck/kernel.hpp"
#include "holcheck/syntax.hpp"

namespace holcheck {

class TheoryView;  // theory.hpp

// Dotted proof-item identifier: (1,2,3) renders as "1.2.3". Nested
// components arise from macro expansions checked under a parent item.
using ProofId = std::vector<std::uint32_t>;

std::string id_to_string(const ProofId& id);
ProofId id_from_string(std::string_view s);  // throws ParseError

class ProofNode;
using ProofNodePtr = std::shared_ptr<const ProofNode>;

ProofNodePtr node(const std::string& rule, RuleArgs args, std::vector<ProofNodePtr> prevs,
                  const TheoryView& thy);
ProofNodePtr premise_node(Sequent th);

// One vertex of a proof-term DAG: a rule application together with the
// sequent it proves. Nodes are immutable and shared by reference; `th` is
// computed eagerly on construction, so every reachable node is valid by
// construction. Arbitrary sequents enter only through `premise_node` (for
// externally checked premises during macro expansion) and the `sorry` rule.
class ProofNode {
 public:
  const std::string& rule() const { return rule_; }
  const RuleArgs& args() const { return args_; }
  const std::vector<ProofNodePtr>& prevs() const { return prevs_; }
  const Sequent& th() const { return th_; }
  bool is_premise() const { return rule_ == "premise"; }

 private:
  friend ProofNodePtr node(const std::string&, RuleArgs, std::vector<ProofNodePtr>,
                           const TheoryView&);
  friend ProofNodePtr premise_node(Sequent);

  ProofNode(std::string rule, RuleArgs args, std::vector<ProofNodePtr> prevs, Sequent th)
      : rule_(std::move(rule)), args_(std::move(args)), prevs_(std::move(prevs)),
        th_(std::move(th)) {}

  std::string rule_;
  RuleArgs args_;
  std::vector<ProofNodePtr> prevs_;
  Sequent th_;
};

struct LinearProofItem {
  ProofId id;
  std::string rule;
  std::string args;  // serialized per the rule's argument shape
  std::vector<ProofId> prevs;
  std::optional<std::string> th;  // serialized sequent annotation
};

struct LinearProof {
  std::vector<LinearProofItem> items;
};

// Emits the DAG in topological order (premises before consumers), each node
// exactly once, ids 0,1,2,...; ties broken by first visit of a depth-first
// traversal of prevs left to right. Every item carries a `th` annotation.
LinearProof linearize(const ProofNodePtr& root);

// Macros with level <= threshold are trusted (eval accepted unexpanded).
struct TrustPolicy {
  std::uint32_t threshold = 0;
};

struct CheckReport {
  Sequent conclusion;
  std::size_t steps_checked = 0;
  std::size_t macro_steps_trusted = 0;
  std::size_t macro_steps_expanded = 0;
  std::vector<ProofId> gaps;
};

// Re-evaluates every item from its resolved premises; verifies `th`
// annotations when present; expands untrusted macros and checks the
// expansion recursively under child ids (parent k yields k.0, k.1, ...).
// `ctx` types the free variables appearing in serialized arguments.
CheckReport check_linear_proof(const LinearProof& p, const TheoryView& thy, TrustPolicy trust,
                               const VarContext& ctx = {});

// Macro-free DAG proving the identical sequent. Throws NoExpansion.
ProofNodePtr expand_fully(const ProofNodePtr& root, const TheoryView& thy);

// Rebuilds the proof-term DAG of a stored linear proof, re-evaluating every
// item; the result's root proves the proof's conclusion.
ProofNodePtr proof_to_dag(const LinearProof& p, const TheoryView& thy,
                          const VarContext& ctx = {});

}  // namespace holcheck
