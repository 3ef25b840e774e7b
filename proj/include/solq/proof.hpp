#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "solq/semantics.hpp"
#include "solq/term.hpp"

namespace solq {

/// The ten rules, Fig. 1 names. T is the transitivity (cut) rule; RSOL/T
/// mode forbids it.
enum class RuleId : std::uint8_t { A, S, G, N_L, N_R, T, O_L, O_R, R, M };

const char* rule_name(RuleId r);
std::optional<RuleId> rule_from_name(const std::string& name);
int rule_arity(RuleId r);

/// Tree of rule instances. A node is either a rule application over its
/// premise subtrees or a named hypothesis leaf (rule empty).
struct Derivation {
  Sequent conclusion;
  std::optional<RuleId> rule;
  std::string hyp_label;  // hypothesis leaves only
  std::vector<Derivation> premises;

  bool is_hypothesis() const { return !rule.has_value(); }
};

struct Hypothesis {
  std::string label;
  Sequent sequent;
};

/// check_derivation outcome. On success `hypotheses` is the multiset of open
/// hypothesis leaves in left-to-right order; on failure `path` holds the
/// premise indices from the root to the offending node and `message`
/// describes the expected pattern.
struct CheckResult {
  bool ok = true;
  std::vector<Hypothesis> hypotheses;
  std::vector<int> path;
  std::string message;
};

/// Verifies that every node instantiates its rule schema exactly. The ⊥
/// decorations of the S and G schemas may be realized by adding or by
/// removing an orthocomplement (the involutive reading); everything else is
/// syntactic equality. T nodes are rejected unless allow_t.
CheckResult check_derivation(const Derivation& d, bool allow_t);

struct RuleApplication {
  RuleId rule;
  std::vector<Sequent> premises;
};

/// Every RSOL/T rule instance concluding s, in the fixed order
/// [A, R, O_L, O_R, M, G, N_L, N_R, S]. Axiom and &-consuming rules come
/// first (they shrink the termination measure), structural rules last.
/// The S and G premises are built with involutive negation, which makes the
/// two rules self-inverse under backward application and keeps the search
/// space finite.
std::vector<RuleApplication> backward_expand(const Sequent& s);

/// Node budget: SOLQ_BUDGET from the environment when set and parseable,
/// otherwise 1,000,000.
std::uint64_t default_node_budget();

struct SearchConfig {
  std::uint64_t node_budget = default_node_budget();
  /// Maximum number of T nodes along any root-to-leaf path (prove_with_cut).
  int cut_depth = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;        // sequents expanded
  std::size_t memo_entries = 0;   // proved + failed memo sizes at the end
};

/// The search gave up because it expanded more nodes than the configured
/// budget. Distinct from Exhausted: nothing is known about the sequent.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(std::string msg, SearchStats s) : std::runtime_error(std::move(msg)), stats(s) {}
  SearchStats stats;
};

enum class ProofOutcome : std::uint8_t { proved, refuted, exhausted };

/// Proved carries a derivation that passed check_derivation in the mode it
/// was found. Refuted (from decide) carries a countermodel. Exhausted means
/// the whole backward-search space closed without a proof; when decide
/// produced it, `refutation` records the countermodel search that also came
/// up empty.
struct ProofResult {
  ProofOutcome outcome = ProofOutcome::exhausted;
  std::optional<Derivation> derivation;
  std::optional<Countermodel> countermodel;
  std::optional<CountermodelSearch> refutation;
  SearchStats stats;
};

/// Terminating backward search for cut-free RSOL/T: depth-first over
/// backward_expand with a branch-local visited set and a proved/failed memo.
/// Returns Proved or Exhausted; throws BudgetExceeded.
ProofResult prove_rsol_t(const Sequent& s, const SearchConfig& config = {});

/// Same search with T instances added (tried after every cut-free rule).
/// Middle terms range over `cut_terms`; at most config.cut_depth T nodes
/// are allowed along any path.
ProofResult prove_with_cut(const Sequent& s, const std::vector<Term>& cut_terms,
                           const SearchConfig& config = {});

/// Default cut terms: every subterm of s plus each one's orthocomplement.
std::vector<Term> default_cut_terms(const Sequent& s);
ProofResult prove_with_cut(const Sequent& s, const SearchConfig& config = {});

/// Front end: prove_rsol_t, then countermodel search over `catalog` on
/// Exhausted. Returns Proved, Refuted, or Exhausted with the empty-handed
/// refutation search attached.
ProofResult decide(const Sequent& s, const SearchConfig& config = {},
                   const std::vector<std::string>& catalog = default_model_catalog(),
                   const SearchLimits& limits = {}, Exec exec = Exec::serial);

/// All terms over the given atoms with at most max_ops connective
/// occurrences (& and ' together), in a deterministic order: by operator
/// count, then construction order.
std::vector<Term> enumerate_terms(const std::vector<std::string>& atoms, int max_ops);

}  // namespace solq
