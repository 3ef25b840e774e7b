#include "solq/proof.hpp"

#include <cstdlib>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace solq {

const char* rule_name(RuleId r) {
  switch (r) {
    case RuleId::A: return "A";
    case RuleId::S: return "S";
    case RuleId::G: return "G";
    case RuleId::N_L: return "N_L";
    case RuleId::N_R: return "N_R";
    case RuleId::T: return "T";
    case RuleId::O_L: return "O_L";
    case RuleId::O_R: return "O_R";
    case RuleId::R: return "R";
    case RuleId::M: return "M";
  }
  return "?";
}

std::optional<RuleId> rule_from_name(const std::string& name) {
  static const std::unordered_map<std::string, RuleId> kByName = {
      {"A", RuleId::A},     {"S", RuleId::S},     {"G", RuleId::G},   {"N_L", RuleId::N_L},
      {"N_R", RuleId::N_R}, {"T", RuleId::T},     {"O_L", RuleId::O_L}, {"O_R", RuleId::O_R},
      {"R", RuleId::R},     {"M", RuleId::M}};
  auto it = kByName.find(name);
  if (it == kByName.end()) return std::nullopt;
  return it->second;
}

int rule_arity(RuleId r) {
  switch (r) {
    case RuleId::A: return 0;
    case RuleId::S:
    case RuleId::G:
    case RuleId::N_L:
    case RuleId::N_R:
    case RuleId::R: return 1;
    case RuleId::T:
    case RuleId::O_L:
    case RuleId::O_R: return 2;
    case RuleId::M: return 3;
  }
  return -1;
}

namespace {

// One consistent reading of every schema in Fig. 1. The ⊥ decorations of S
// and G go through ortho_of (wrap or strip); all other positions must match
// syntactically. Returns an error description, or nothing when the node is a
// correct instance.
std::optional<std::string> schema_violation(const Derivation& d) {
  const Sequent& c = d.conclusion;
  auto prem = [&d](int i) -> const Sequent& { return d.premises[static_cast<std::size_t>(i)].conclusion; };
  switch (*d.rule) {
    case RuleId::A:
      if (c.lhs != c.rhs)
        return "rule A concludes a <= a; the two sides differ";
      return std::nullopt;
    case RuleId::S:
      if (!ortho_of(prem(0).lhs, c.rhs) || !ortho_of(prem(0).rhs, c.lhs))
        return "rule S concludes a <= b from b' <= a'; premise '" + format_sequent(prem(0)) +
               "' is not the orthocomplemented flip of '" + format_sequent(c) + "'";
      return std::nullopt;
    case RuleId::G: {
      if (!c.lhs.is_sasaki())
        return "rule G concludes a & b <= c; conclusion left side is not a Sasaki term";
      const Sequent& p = prem(0);
      if (!p.lhs.is_sasaki() || p.lhs.right() != c.lhs.right() ||
          !ortho_of(p.lhs.left(), c.rhs) || !ortho_of(p.rhs, c.lhs.left()))
        return "rule G concludes a & b <= c from c' & b <= a'; premise '" + format_sequent(p) +
               "' does not match";
      return std::nullopt;
    }
    case RuleId::N_L:
      if (!(c.lhs.is_ortho() && c.lhs.inner().is_ortho()))
        return "rule N_L concludes a'' <= b; conclusion left side has no double orthocomplement";
      if (prem(0).lhs != c.lhs.inner().inner() || prem(0).rhs != c.rhs)
        return "rule N_L concludes a'' <= b from a <= b; premise does not match";
      return std::nullopt;
    case RuleId::N_R:
      if (!(c.rhs.is_ortho() && c.rhs.inner().is_ortho()))
        return "rule N_R concludes a <= b''; conclusion right side has no double orthocomplement";
      if (prem(0).rhs != c.rhs.inner().inner() || prem(0).lhs != c.lhs)
        return "rule N_R concludes a <= b'' from a <= b; premise does not match";
      return std::nullopt;
    case RuleId::T:
      if (prem(0).lhs != c.lhs || prem(1).rhs != c.rhs || prem(0).rhs != prem(1).lhs)
        return "rule T concludes a <= c from a <= b and b <= c; the middle term does not agree";
      return std::nullopt;
    case RuleId::O_L:
      if (!c.lhs.is_sasaki())
        return "rule O_L concludes a & b <= c; conclusion left side is not a Sasaki term";
      if (prem(0) != Sequent{c.lhs.left(), c.lhs.right()} || prem(1) != Sequent{c.lhs.left(), c.rhs})
        return "rule O_L concludes a & b <= c from a <= b and a <= c; premises do not match";
      return std::nullopt;
    case RuleId::O_R:
      if (!c.rhs.is_sasaki())
        return "rule O_R concludes a <= b & c; conclusion right side is not a Sasaki term";
      if (prem(0) != Sequent{c.lhs, c.rhs.left()} || prem(1) != Sequent{c.lhs, c.rhs.right()})
        return "rule O_R concludes a <= b & c from a <= b and a <= c; premises do not match";
      return std::nullopt;
    case RuleId::R:
      if (!c.lhs.is_sasaki())
        return "rule R concludes a & b <= c; conclusion left side is not a Sasaki term";
      if (prem(0) != Sequent{c.lhs.right(), c.rhs})
        return "rule R concludes a & b <= c from b <= c; premise does not match";
      return std::nullopt;
    case RuleId::M:
      if (!c.lhs.is_sasaki() || !c.rhs.is_sasaki())
        return "rule M concludes a & b <= c & d; both sides must be Sasaki terms";
      if (prem(0) != Sequent{c.lhs.left(), c.rhs.left()} ||
          prem(1) != Sequent{c.lhs.right(), c.rhs.right()} ||
          prem(2) != Sequent{c.rhs.right(), c.lhs.right()})
        return "rule M concludes a & b <= c & d from a <= c, b <= d and d <= b; premises do not match";
      return std::nullopt;
  }
  return "unknown rule";
}

struct Checker {
  bool allow_t;
  CheckResult result;
  std::vector<int> path;

  bool fail(std::string msg) {
    result.ok = false;
    result.path = path;
    result.message = std::move(msg);
    return false;
  }

  bool visit(const Derivation& d) {
    if (d.is_hypothesis()) {
      if (!d.premises.empty()) return fail("hypothesis leaves carry no premises");
      result.hypotheses.push_back({d.hyp_label, d.conclusion});
      return true;
    }
    const RuleId r = *d.rule;
    if (r == RuleId::T && !allow_t)
      return fail("rule T is not part of RSOL/T");
    const auto arity = static_cast<std::size_t>(rule_arity(r));
    if (d.premises.size() != arity)
      return fail(std::string("rule ") + rule_name(r) + " takes " + std::to_string(arity) +
                  " premise(s), found " + std::to_string(d.premises.size()));
    if (auto msg = schema_violation(d)) return fail(std::move(*msg));
    for (std::size_t i = 0; i < d.premises.size(); ++i) {
      path.push_back(static_cast<int>(i));
      if (!visit(d.premises[i])) return false;
      path.pop_back();
    }
    return true;
  }
};

}  // namespace

CheckResult check_derivation(const Derivation& d, bool allow_t) {
  Checker checker{allow_t, {}, {}};
  checker.visit(d);
  return std::move(checker.result);
}

std::vector<RuleApplication> backward_expand(const Sequent& s) {
  std::vector<RuleApplication> out;
  const Term& l = s.lhs;
  const Term& r = s.rhs;
  if (l == r) out.push_back({RuleId::A, {}});
  if (l.is_sasaki()) {
    out.push_back({RuleId::R, {{l.right(), r}}});
    out.push_back({RuleId::O_L, {{l.left(), l.right()}, {l.left(), r}}});
  }
  if (r.is_sasaki())
    out.push_back({RuleId::O_R, {{l, r.left()}, {l, r.right()}}});
  if (l.is_sasaki() && r.is_sasaki())
    out.push_back({RuleId::M,
                   {{l.left(), r.left()}, {l.right(), r.right()}, {r.right(), l.right()}}});
  if (l.is_sasaki())
    out.push_back({RuleId::G, {{Term::sasaki(negated(r), l.right()), negated(l.left())}}});
  if (l.is_ortho() && l.inner().is_ortho())
    out.push_back({RuleId::N_L, {{l.inner().inner(), r}}});
  if (r.is_ortho() && r.inner().is_ortho())
    out.push_back({RuleId::N_R, {{l, r.inner().inner()}}});
  out.push_back({RuleId::S, {{negated(r), negated(l)}}});
  return out;
}

std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("SOLQ_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1'000'000;
}

namespace {

constexpr int kNoPrune = std::numeric_limits<int>::max();

// Depth-first backward search. Loop control is a per-path visited map; a
// repeat prunes the branch. Failures are memoized only when no prune in the
// failed subtree pointed at an ancestor strictly above the node — such a
// failure is independent of the path and therefore valid in every context.
// (Successes are always safe to memoize.) With cuts enabled, provability
// depends on how many T nodes are still allowed below, so all bookkeeping is
// per remaining-cut level.
struct Searcher {
  std::uint64_t budget;
  std::vector<Term> cut_terms;
  int max_cuts;

  std::uint64_t nodes = 0;
  std::vector<std::unordered_map<Sequent, Derivation, SequentHash>> proved;
  std::vector<std::unordered_set<Sequent, SequentHash>> failed;
  std::vector<std::unordered_map<Sequent, int, SequentHash>> on_path;
  int min_prune_depth = kNoPrune;

  Searcher(const SearchConfig& config, std::vector<Term> cuts)
      : budget(config.node_budget),
        cut_terms(std::move(cuts)),
        max_cuts(cut_terms.empty() ? 0 : config.cut_depth) {
    proved.resize(static_cast<std::size_t>(max_cuts) + 1);
    failed.resize(static_cast<std::size_t>(max_cuts) + 1);
    on_path.resize(static_cast<std::size_t>(max_cuts) + 1);
  }

  SearchStats stats() const {
    SearchStats s{nodes, 0};
    for (const auto& m : proved) s.memo_entries += m.size();
    for (const auto& f : failed) s.memo_entries += f.size();
    return s;
  }

  std::optional<Derivation> close(const Sequent& s, RuleId rule,
                                  const std::vector<Sequent>& premises, int depth, int cuts_left) {
    std::vector<Derivation> subs;
    subs.reserve(premises.size());
    for (const Sequent& p : premises) {
      auto sub = search(p, depth + 1, cuts_left);
      if (!sub) return std::nullopt;
      subs.push_back(std::move(*sub));
    }
    return Derivation{s, rule, {}, std::move(subs)};
  }

  std::optional<Derivation> search(const Sequent& s, int depth, int cuts_left) {
    const auto level = static_cast<std::size_t>(cuts_left);
    if (auto it = proved[level].find(s); it != proved[level].end()) return it->second;
    if (failed[level].count(s) != 0) return std::nullopt;
    if (auto it = on_path[level].find(s); it != on_path[level].end()) {
      min_prune_depth = std::min(min_prune_depth, it->second);
      return std::nullopt;
    }
    if (++nodes > budget)
      throw BudgetExceeded("search expanded more than " + std::to_string(budget) +
                               " nodes (SOLQ_BUDGET / --budget raises the limit)",
                           stats());
    on_path[level].emplace(s, depth);
    const int saved = min_prune_depth;
    min_prune_depth = kNoPrune;

    std::optional<Derivation> found;
    for (const RuleApplication& app : backward_expand(s)) {
      found = close(s, app.rule, app.premises, depth, cuts_left);
      if (found) break;
    }
    if (!found && cuts_left > 0) {
      for (const Term& mid : cut_terms) {
        found = close(s, RuleId::T, {{s.lhs, mid}, {mid, s.rhs}}, depth, cuts_left - 1);
        if (found) break;
      }
    }

    on_path[level].erase(s);
    const int subtree = min_prune_depth;
    if (found) {
      proved[level].emplace(s, *found);
      min_prune_depth = saved;  // prunes below a proved node cannot mislead anyone
    } else {
      if (subtree >= depth) failed[level].insert(s);
      min_prune_depth = subtree < depth ? std::min(saved, subtree) : saved;
    }
    return found;
  }
};

ProofResult run_search(const Sequent& s, const SearchConfig& config, std::vector<Term> cut_terms,
                       bool allow_t) {
  Searcher searcher(config, std::move(cut_terms));
  std::optional<Derivation> found = searcher.search(s, 0, searcher.max_cuts);
  ProofResult result;
  result.stats = searcher.stats();
  if (found) {
    CheckResult check = check_derivation(*found, allow_t);
    if (!check.ok || !check.hypotheses.empty())
      throw std::logic_error("internal: search produced a derivation the checker rejects: " +
                             check.message);
    result.outcome = ProofOutcome::proved;
    result.derivation = std::move(found);
  } else {
    result.outcome = ProofOutcome::exhausted;
  }
  return result;
}

}  // namespace

ProofResult prove_rsol_t(const Sequent& s, const SearchConfig& config) {
  return run_search(s, config, {}, /*allow_t=*/false);
}

std::vector<Term> default_cut_terms(const Sequent& s) {
  std::vector<Term> out;
  std::unordered_set<Term, TermHash> seen;
  auto add = [&](const Term& t) {
    if (seen.insert(t).second) out.push_back(t);
  };
  const std::vector<Term> subs = subterms(s);
  for (const Term& t : subs) add(t);
  for (const Term& t : subs) add(Term::ortho(t));
  return out;
}

ProofResult prove_with_cut(const Sequent& s, const std::vector<Term>& cut_terms,
                           const SearchConfig& config) {
  return run_search(s, config, cut_terms, /*allow_t=*/true);
}

ProofResult prove_with_cut(const Sequent& s, const SearchConfig& config) {
  return prove_with_cut(s, default_cut_terms(s), config);
}

ProofResult decide(const Sequent& s, const SearchConfig& config,
                   const std::vector<std::string>& catalog, const SearchLimits& limits, Exec exec) {
  ProofResult result = prove_rsol_t(s, config);
  if (result.outcome == ProofOutcome::proved) return result;
  CountermodelSearch refutation = find_countermodel(s, catalog, limits, exec);
  if (refutation.found) {
    result.outcome = ProofOutcome::refuted;
    result.countermodel = refutation.found;
  }
  result.refutation = std::move(refutation);
  return result;
}

std::vector<Term> enumerate_terms(const std::vector<std::string>& atoms, int max_ops) {
  std::vector<std::vector<Term>> by_ops(static_cast<std::size_t>(max_ops) + 1);
  for (const std::string& name : atoms) by_ops[0].push_back(Term::atom(name));
  for (int k = 1; k <= max_ops; ++k) {
    auto& level = by_ops[static_cast<std::size_t>(k)];
    for (const Term& t : by_ops[static_cast<std::size_t>(k - 1)]) level.push_back(Term::ortho(t));
    for (int left_ops = 0; left_ops < k; ++left_ops)
      for (const Term& l : by_ops[static_cast<std::size_t>(left_ops)])
        for (const Term& r : by_ops[static_cast<std::size_t>(k - 1 - left_ops)])
          level.push_back(Term::sasaki(l, r));
  }
  std::vector<Term> out;
  for (const auto& level : by_ops) out.insert(out.end(), level.begin(), level.end());
  return out;
}

}  // namespace solq
