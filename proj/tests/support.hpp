#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "holcheck/match.hpp"
#include "holcheck/numeral.hpp"
#include "holcheck/proof.hpp"
#include "holcheck/theory.hpp"

// Shared fixtures, generators, and the independent oracles used by both the
// unit suites and the acceptance suite. Oracles deliberately reimplement the
// operations they check (often naively) instead of calling the library path
// under test.
namespace holcheck::test {

std::string source_dir();
std::string cli_path();

const Theory& logic_base();
const Theory& nat_theory();

struct RunResult {
  int exit_code;
  std::string output;
};
// Runs the CLI with `args`, working directory = source dir, stdout captured.
RunResult run_cli(const std::string& args);

// ------------------------------------------------------------ generators --

// Random well-typed terms over a fixed pool of variables (p,q,r : bool;
// x,y,z : nat; fn : nat => nat; gn : nat => nat => nat) and the fixture
// signature. No schematic variables.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed) : rng_(seed) {}

  const VarContext& ctx() const;
  TermPtr gen(const TypePtr& ty, int depth);
  TermPtr gen_bool(int depth) { return gen(bool_type(), depth); }
  TermPtr gen_nat(int depth) { return gen(nat_type(), depth); }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::vector<TypePtr> binders_;  // innermost last
  std::size_t pick(std::size_t n);
  TermPtr gen_rec(const TypePtr& ty, int depth);
};

// Random polynomial terms over variables x,y,z: numerals, +, *.
TermPtr gen_poly_term(std::mt19937_64& rng, int depth);

// Random valid proof DAGs with sharing; every node constructed through the
// kernel, so the DAG is valid by construction.
ProofNodePtr gen_proof_dag(std::mt19937_64& rng, const TheoryView& thy);

// All terms with at most `max_nodes` raw constructor nodes over the tiny
// matching signature (constants p : bool, f : bool => bool; implication;
// abstractions over bool). With `with_svars`, schematic ?A : bool and
// ?F : bool => bool may appear. Closed terms only.
std::vector<TermPtr> enumerate_match_terms(std::size_t max_nodes, bool with_svars);

// --------------------------------------------------------------- oracles --

// Independent recursive typing (explicit binder context, signature checks).
TypePtr oracle_type_of(const TermPtr& t, const Signature& sig);

// Beta-normalization by iterated single leftmost-outermost steps, with its
// own lifting/substitution code.
TermPtr oracle_beta_norm(const TermPtr& t);

// Named-variable substitution: converts to a named representation, applies
// the instantiation with explicit capture-avoiding renaming, converts back.
TermPtr oracle_subst_named(const TermInstantiation& inst, const TermPtr& t);

// Brute-force first-order matching: tries every assignment of closed target
// subterms to the pattern's schematic variables and accepts an assignment
// iff substitute-then-normalize reproduces the target (both reimplemented
// here). Monomorphic patterns only (no type variables).
std::optional<TermInstantiation> oracle_match(const TermPtr& pattern, const TermPtr& target);

// Independent coefficient-map polynomial semantics; nullopt when t is not a
// polynomial over nat variables, numerals, +, *.
using OracleMonomial = std::vector<std::string>;
using OraclePoly = std::map<OracleMonomial, NatValue>;
std::optional<OraclePoly> oracle_poly(const TermPtr& t);

}  // namespace holcheck::test
