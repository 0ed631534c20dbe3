#include "holcheck/proof.hpp"

#include <map>
#include <unordered_map>

#include "holcheck/error.hpp"
#include "holcheck/macro.hpp"
#include "holcheck/theory.hpp"

namespace holcheck {

std::string id_to_string(const ProofId& id) {
  std::string out;
  for (std::size_t i = 0; i < id.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(id[i]);
  }
  return out;
}

ProofId id_from_string(std::string_view s) {
  ProofId id;
  std::size_t i = 0;
  while (true) {
    if (i >= s.size() || s[i] < '0' || s[i] > '9')
      throw ParseError(i, "expected a natural number in the identifier");
    std::uint64_t v = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
      if (v > 0xffffffffull) throw ParseError(i, "identifier component too large");
      ++i;
    }
    id.push_back(static_cast<std::uint32_t>(v));
    if (i >= s.size()) break;
    if (s[i] != '.') throw ParseError(i, "expected '.' in the identifier");
    ++i;
  }
  return id;
}

namespace {

Sequent eval_rule(const std::string& rule, const RuleArgs& args,
                  const std::vector<Sequent>& prevs, const TheoryView& thy) {
  if (is_primitive_rule(rule)) return apply_prim_rule(rule, args, prevs, thy);
  const MacroDefinition* def = MacroRegistry::instance().find(rule);
  if (!def) throw RuleMismatch(rule, "unknown rule or macro");
  return def->eval(thy, args, prevs);
}

ArgShape arg_shape_of(const std::string& rule) {
  if (is_primitive_rule(rule)) return prim_rule_arg_shape(rule);
  const MacroDefinition* def = MacroRegistry::instance().find(rule);
  if (!def) throw RuleMismatch(rule, "unknown rule or macro");
  return def->arg_shape;
}

}  // namespace

ProofNodePtr node(const std::string& rule, RuleArgs args, std::vector<ProofNodePtr> prevs,
                  const TheoryView& thy) {
  MacroRegistry::instance().freeze();
  std::vector<Sequent> prev_ths;
  prev_ths.reserve(prevs.size());
  for (const auto& p : prevs) prev_ths.push_back(p->th());
  Sequent th = eval_rule(rule, args, prev_ths, thy);
  return ProofNodePtr(new ProofNode(rule, std::move(args), std::move(prevs), std::move(th)));
}

ProofNodePtr premise_node(Sequent th) {
  return ProofNodePtr(new ProofNode("premise", std::monostate{}, {}, std::move(th)));
}

namespace {

// Shared linearization core. Nodes in `external` are referenced by their
// existing ids instead of being emitted.
std::vector<LinearProofItem> linearize_items(
    const ProofNodePtr& root, const std::map<const ProofNode*, ProofId>& external,
    const ProofId& prefix) {
  std::vector<LinearProofItem> items;
  std::map<const ProofNode*, ProofId> ids(external);

  // Post-order DFS, prevs left to right, each node emitted once.
  struct Frame {
    const ProofNodePtr* node;
    std::size_t next_prev;
  };
  std::vector<Frame> stack;
  stack.push_back({&root, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const ProofNode* n = f.node->get();
    if (ids.count(n)) {
      stack.pop_back();
      continue;
    }
    if (f.next_prev < n->prevs().size()) {
      const ProofNodePtr& child = n->prevs()[f.next_prev];
      ++f.next_prev;
      if (!ids.count(child.get())) stack.push_back({&child, 0});
      continue;
    }
    if (n->is_premise())
      throw HolError("cannot linearize a proof with unresolved premise leaves");
    ProofId id = prefix;
    id.push_back(static_cast<std::uint32_t>(items.size()));
    LinearProofItem item;
    item.id = id;
    item.rule = n->rule();
    item.args = print_rule_args(arg_shape_of(n->rule()), n->args());
    for (const auto& p : n->prevs()) item.prevs.push_back(ids.at(p.get()));
    item.th = print_sequent(n->th());
    items.push_back(std::move(item));
    ids.emplace(n, std::move(id));
    stack.pop_back();
  }
  return items;
}

}  // namespace

LinearProof linearize(const ProofNodePtr& root) {
  LinearProof p;
  p.items = linearize_items(root, {}, {});
  return p;
}

namespace {

struct CheckerState {
  const TheoryView& thy;
  TrustPolicy trust;
  const VarContext& ctx;
  std::map<ProofId, Sequent> env;
  CheckReport report;
};

void check_items(const std::vector<LinearProofItem>& items, CheckerState& st);

void check_one(const LinearProofItem& item, CheckerState& st) {
  const std::string id_str = id_to_string(item.id);
  auto fail = [&](const std::string& reason) -> CheckFailure {
    return CheckFailure(id_str, reason);
  };

  if (st.env.count(item.id)) throw fail("duplicate identifier");

  std::vector<Sequent> prevs;
  prevs.reserve(item.prevs.size());
  for (const auto& pid : item.prevs) {
    auto it = st.env.find(pid);
    if (it == st.env.end()) throw fail("unresolved premise " + id_to_string(pid));
    prevs.push_back(it->second);
  }

  Sequent th;
  if (is_primitive_rule(item.rule)) {
    RuleArgs args;
    try {
      args = parse_rule_args(prim_rule_arg_shape(item.rule), item.args, st.ctx, st.thy.sig());
      th = apply_prim_rule(item.rule, args, prevs, st.thy);
    } catch (const HolError& e) {
      throw fail(e.what());
    }
    if (item.rule == "sorry") st.report.gaps.push_back(item.id);
  } else {
    const MacroDefinition* def = MacroRegistry::instance().find(item.rule);
    if (!def) throw fail("unknown rule or macro " + item.rule);
    RuleArgs args;
    Sequent claimed;
    try {
      args = parse_rule_args(def->arg_shape, item.args, st.ctx, st.thy.sig());
      claimed = def->eval(st.thy, args, prevs);
    } catch (const HolError& e) {
      throw fail(e.what());
    }
    if (def->level <= st.trust.threshold) {
      ++st.report.macro_steps_trusted;
      th = claimed;
    } else {
      if (!def->expand) throw fail("macro " + item.rule + " has no expansion");
      std::map<const ProofNode*, ProofId> external;
      std::vector<ProofNodePtr> premise_nodes;
      premise_nodes.reserve(prevs.size());
      for (std::size_t i = 0; i < prevs.size(); ++i) {
        premise_nodes.push_back(premise_node(prevs[i]));
        external.emplace(premise_nodes.back().get(), item.prevs[i]);
      }
      ProofNodePtr root;
      std::vector<LinearProofItem> children;
      try {
        root = def->expand(st.thy, args, premise_nodes);
        children = linearize_items(root, external, item.id);
      } catch (const HolError& e) {
        throw fail(std::string("expansion failed: ") + e.what());
      }
      ++st.report.macro_steps_expanded;
      check_items(children, st);
      Sequent derived = children.empty() ? root->th() : st.env.at(children.back().id);
      if (!equal(derived, claimed)) throw fail("expansion proves a different sequent");
      th = claimed;
    }
  }

  if (item.th) {
    Sequent ann;
    try {
      ann = parse_sequent(*item.th, st.ctx, st.thy.sig());
    } catch (const HolError& e) {
      throw fail(std::string("bad sequent annotation: ") + e.what());
    }
    if (!equal(ann, th)) throw fail("annotation does not match the recomputed sequent");
  }

  st.env.emplace(item.id, std::move(th));
  ++st.report.steps_checked;
}

void check_items(const std::vector<LinearProofItem>& items, CheckerState& st) {
  for (const auto& item : items) check_one(item, st);
}

}  // namespace

CheckReport check_linear_proof(const LinearProof& p, const TheoryView& thy, TrustPolicy trust,
                               const VarContext& ctx) {
  MacroRegistry::instance().freeze();
  if (p.items.empty()) throw CheckFailure("-", "empty proof");
  CheckerState st{thy, trust, ctx, {}, {}};
  check_items(p.items, st);
  st.report.conclusion = st.env.at(p.items.back().id);
  return st.report;
}

namespace {

ProofNodePtr expand_rec(const ProofNodePtr& n, const TheoryView& thy,
                        std::map<const ProofNode*, ProofNodePtr>& memo, std::size_t depth) {
  if (depth > 64) throw NoExpansion("expansion nesting too deep");
  auto it = memo.find(n.get());
  if (it != memo.end()) return it->second;

  std::vector<ProofNodePtr> prevs;
  prevs.reserve(n->prevs().size());
  for (const auto& p : n->prevs()) prevs.push_back(expand_rec(p, thy, memo, depth));

  ProofNodePtr result;
  if (n->is_premise()) {
    result = n;
  } else if (is_primitive_rule(n->rule())) {
    result = node(n->rule(), n->args(), std::move(prevs), thy);
  } else {
    const MacroDefinition* def = MacroRegistry::instance().find(n->rule());
    if (!def) throw RuleMismatch(n->rule(), "unknown rule or macro");
    if (!def->expand) throw NoExpansion(n->rule());
    ProofNodePtr expansion = def->expand(thy, n->args(), prevs);
    result = expand_rec(expansion, thy, memo, depth + 1);
  }
  if (!equal(result->th(), n->th()))
    throw HolError("expansion of " + n->rule() + " changed the proved sequent");
  memo.emplace(n.get(), result);
  return result;
}

}  // namespace

ProofNodePtr expand_fully(const ProofNodePtr& root, const TheoryView& thy) {
  MacroRegistry::instance().freeze();
  std::map<const ProofNode*, ProofNodePtr> memo;
  return expand_rec(root, thy, memo, 0);
}

ProofNodePtr proof_to_dag(const LinearProof& p, const TheoryView& thy, const VarContext& ctx) {
  MacroRegistry::instance().freeze();
  if (p.items.empty()) throw CheckFailure("-", "empty proof");
  std::map<ProofId, ProofNodePtr> env;
  for (const auto& item : p.items) {
    const std::string id_str = id_to_string(item.id);
    if (env.count(item.id)) throw CheckFailure(id_str, "duplicate identifier");
    std::vector<ProofNodePtr> prevs;
    for (const auto& pid : item.prevs) {
      auto it = env.find(pid);
      if (it == env.end())
        throw CheckFailure(id_str, "unresolved premise " + id_to_string(pid));
      prevs.push_back(it->second);
    }
    try {
      RuleArgs args = parse_rule_args(arg_shape_of(item.rule), item.args, ctx, thy.sig());
      env.emplace(item.id, node(item.rule, std::move(args), std::move(prevs), thy));
    } catch (const HolError& e) {
      throw CheckFailure(id_str, e.what());
    }
  }
  return env.at(p.items.back().id);
}

}  // namespace holcheck
