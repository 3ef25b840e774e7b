#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "solq/json_io.hpp"
#include "solq/proof.hpp"
#include "solq/semantics.hpp"
#include "solq/term.hpp"

using solq::Derivation;
using solq::Elem;
using solq::RuleId;
using solq::Sequent;
using solq::Term;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

Derivation load_fixture(const std::string& name) {
  return solq::derivation_from_json(solq::load_json_file(fixture_path(name)));
}

// Rule names along a preorder walk; hypothesis leaves print as hyp:<label>.
void trace_of(const Derivation& d, std::vector<std::string>& out) {
  out.push_back(d.is_hypothesis() ? "hyp:" + d.hyp_label : solq::rule_name(*d.rule));
  for (const Derivation& p : d.premises) trace_of(p, out);
}

std::vector<std::string> trace_of(const Derivation& d) {
  std::vector<std::string> out;
  trace_of(d, out);
  return out;
}

std::string premises_of(const solq::RuleApplication& app) {
  std::string out;
  for (const Sequent& p : app.premises) out += (out.empty() ? "" : " | ") + solq::format_sequent(p);
  return out;
}

Derivation hyp(const std::string& label, const std::string& sequent) {
  return Derivation{solq::parse_sequent(sequent), std::nullopt, label, {}};
}

Derivation node(RuleId rule, const std::string& conclusion, std::vector<Derivation> premises) {
  return Derivation{solq::parse_sequent(conclusion), rule, {}, std::move(premises)};
}

}  // namespace

TEST_CASE("rule metadata is consistent") {
  using solq::rule_arity;
  using solq::rule_from_name;
  using solq::rule_name;
  for (RuleId r : {RuleId::A, RuleId::S, RuleId::G, RuleId::N_L, RuleId::N_R, RuleId::T,
                   RuleId::O_L, RuleId::O_R, RuleId::R, RuleId::M})
    CHECK(rule_from_name(rule_name(r)) == r);
  CHECK(!rule_from_name("X").has_value());
  CHECK(!rule_from_name("a").has_value());
  CHECK(rule_arity(RuleId::A) == 0);
  CHECK(rule_arity(RuleId::S) == 1);
  CHECK(rule_arity(RuleId::G) == 1);
  CHECK(rule_arity(RuleId::T) == 2);
  CHECK(rule_arity(RuleId::O_L) == 2);
  CHECK(rule_arity(RuleId::M) == 3);
}

TEST_CASE("backward expansion of a & b <= b lists every applicable rule") {
  const auto apps = solq::backward_expand(solq::parse_sequent("a & b <= b"));
  REQUIRE(apps.size() == 4);
  CHECK(apps[0].rule == RuleId::R);
  CHECK(premises_of(apps[0]) == "b <= b");
  CHECK(apps[1].rule == RuleId::O_L);
  CHECK(premises_of(apps[1]) == "a <= b | a <= b");
  CHECK(apps[2].rule == RuleId::G);
  CHECK(premises_of(apps[2]) == "b' & b <= a'");
  CHECK(apps[3].rule == RuleId::S);
  CHECK(premises_of(apps[3]) == "b' <= (a & b)'");
}

TEST_CASE("backward expansion handles atoms, double negations, and products of rules") {
  const auto atoms = solq::backward_expand(solq::parse_sequent("a <= b"));
  REQUIRE(atoms.size() == 1);
  CHECK(atoms[0].rule == RuleId::S);
  CHECK(premises_of(atoms[0]) == "b' <= a'");

  const auto dneg = solq::backward_expand(solq::parse_sequent("a'' <= b"));
  REQUIRE(dneg.size() == 2);
  CHECK(dneg[0].rule == RuleId::N_L);
  CHECK(premises_of(dneg[0]) == "a <= b");
  CHECK(dneg[1].rule == RuleId::S);
  CHECK(premises_of(dneg[1]) == "b' <= a'");

  const auto refl = solq::backward_expand(solq::parse_sequent("a <= a"));
  CHECK(refl[0].rule == RuleId::A);
  CHECK(refl[0].premises.empty());

  const auto both = solq::backward_expand(solq::parse_sequent("a & b <= c & d"));
  std::vector<RuleId> rules;
  for (const auto& app : both) rules.push_back(app.rule);
  CHECK(rules == std::vector<RuleId>{RuleId::R, RuleId::O_L, RuleId::O_R, RuleId::M, RuleId::G,
                                     RuleId::S});
}

TEST_CASE("backward S application is an involution on singly-negated sides") {
  for (const char* text : {"a <= b", "a' <= b", "a & b <= c'", "(a & b)' <= c"}) {
    const Sequent s = solq::parse_sequent(text);
    const auto once = solq::backward_expand(s).back();
    REQUIRE(once.rule == RuleId::S);
    const auto twice = solq::backward_expand(once.premises[0]).back();
    REQUIRE(twice.rule == RuleId::S);
    CHECK(twice.premises[0] == s);
  }
}

TEST_CASE("the embedded derivations check with their expected hypotheses") {
  struct Expect {
    const char* file;
    std::vector<std::string> hyps;
  };
  const std::vector<Expect> table = {
      {"r_reduction.json", {}},
      {"l_monotony.json", {"a <= b"}},
      {"orthomod_ol.json", {"a <= b"}},
      {"orthomod_or.json", {"a <= b"}},
      {"galois.json", {"a & b <= c"}},
  };
  for (const Expect& e : table) {
    CAPTURE(e.file);
    const Derivation d = load_fixture(e.file);
    const solq::CheckResult r = solq::check_derivation(d, /*allow_t=*/false);
    CHECK(r.ok);
    CHECK(r.message.empty());
    std::vector<std::string> hyps;
    for (const solq::Hypothesis& h : r.hypotheses) {
      CHECK(h.label == "h1");
      hyps.push_back(solq::format_sequent(h.sequent));
    }
    CHECK(hyps == e.hyps);
  }
}

TEST_CASE("single-node edits to the fixtures are rejected") {
  // Swapping the sides of any hypothesis invalidates the enclosing rule.
  for (const char* file : {"l_monotony.json", "orthomod_ol.json", "orthomod_or.json",
                           "galois.json"}) {
    CAPTURE(file);
    Derivation d = load_fixture(file);
    bool swapped = false;
    for (Derivation* n = &d; !n->premises.empty() && !swapped; n = &n->premises[0]) {
      for (Derivation& p : n->premises) {
        if (p.is_hypothesis()) {
          std::swap(p.conclusion.lhs, p.conclusion.rhs);
          swapped = true;
          break;
        }
      }
    }
    REQUIRE(swapped);
    CHECK(!solq::check_derivation(d, false).ok);
  }

  // Renaming an atom in one leaf breaks the schema match above it.
  Derivation r = load_fixture("r_reduction.json");
  r.premises[0].conclusion = solq::parse_sequent("a <= a");
  const solq::CheckResult rr = solq::check_derivation(r, false);
  CHECK(!rr.ok);
  CHECK(rr.path.empty());  // the R node is where the mismatch shows
  CHECK(rr.message.find("rule R") != std::string::npos);

  // Changing the rule id is caught by arity or schema.
  Derivation g = load_fixture("galois.json");
  for (RuleId wrong : {RuleId::R, RuleId::S, RuleId::N_L, RuleId::N_R}) {
    g.rule = wrong;
    CAPTURE(solq::rule_name(wrong));
    CHECK(!solq::check_derivation(g, false).ok);
  }

  // Dropping the orthocomplement on one side of a G conclusion is rejected.
  Derivation g2 = load_fixture("galois.json");
  g2.conclusion = solq::parse_sequent("c' & b <= a");
  CHECK(!solq::check_derivation(g2, false).ok);

  // Deleting a premise is an arity error.
  Derivation m = load_fixture("l_monotony.json");
  m.premises.pop_back();
  const solq::CheckResult mr = solq::check_derivation(m, false);
  CHECK(!mr.ok);
  CHECK(mr.message.find("3 premise(s)") != std::string::npos);
}

TEST_CASE("failures deep in a tree are located by premise path") {
  // Corrupting a premise conclusion is caught by the parent's schema at the
  // parent; to exercise deep attribution, break a leaf in a way only the
  // leaf itself can see (an A node that grew a premise).
  Derivation m = load_fixture("l_monotony.json");
  m.premises[1].premises.push_back(hyp("x", "c <= c"));
  const solq::CheckResult r = solq::check_derivation(m, false);
  REQUIRE(!r.ok);
  CHECK(r.path == std::vector<int>{1});
  CHECK(r.message.find("rule A") != std::string::npos);

  // A hypothesis leaf with premises is malformed wherever it sits.
  Derivation bad = node(RuleId::R, "a & b <= b", {hyp("h", "b <= b")});
  bad.premises[0].premises.push_back(hyp("x", "a <= a"));
  const solq::CheckResult r2 = solq::check_derivation(bad, false);
  REQUIRE(!r2.ok);
  CHECK(r2.path == std::vector<int>{0});
}

TEST_CASE("T nodes are rejected in RSOL/T mode and checked in full mode") {
  const Derivation cut =
      node(RuleId::T, "a <= c", {hyp("h1", "a <= b"), hyp("h2", "b <= c")});
  const solq::CheckResult strict = solq::check_derivation(cut, false);
  CHECK(!strict.ok);
  CHECK(strict.message.find("rule T") != std::string::npos);

  const solq::CheckResult full = solq::check_derivation(cut, true);
  CHECK(full.ok);
  REQUIRE(full.hypotheses.size() == 2);
  CHECK(full.hypotheses[0].label == "h1");
  CHECK(full.hypotheses[1].label == "h2");

  const Derivation misaligned =
      node(RuleId::T, "a <= c", {hyp("h1", "a <= b"), hyp("h2", "b' <= c")});
  CHECK(!solq::check_derivation(misaligned, true).ok);
}

TEST_CASE("proof search closes the expected sequents with the expected traces") {
  struct Expect {
    const char* sequent;
    std::vector<std::string> trace;
  };
  const std::vector<Expect> table = {
      {"a <= a", {"A"}},
      {"a & b <= b", {"R", "A"}},
      {"a'' <= a", {"N_L", "A"}},
      {"a <= a''", {"N_R", "A"}},
      {"(a & b)' & b <= a'", {"G", "A"}},
      {"a & b & c <= c", {"R", "A"}},
      {"a' <= a'", {"A"}},
  };
  for (const Expect& e : table) {
    CAPTURE(e.sequent);
    const solq::ProofResult r = solq::prove_rsol_t(solq::parse_sequent(e.sequent));
    REQUIRE(r.outcome == solq::ProofOutcome::proved);
    REQUIRE(r.derivation.has_value());
    CHECK(r.derivation->conclusion == solq::parse_sequent(e.sequent));
    CHECK(trace_of(*r.derivation) == e.trace);
    const solq::CheckResult check = solq::check_derivation(*r.derivation, false);
    CHECK(check.ok);
    CHECK(check.hypotheses.empty());
  }
}

TEST_CASE("search terminates with Exhausted on unprovable sequents") {
  for (const char* text : {"a <= b", "a <= a & b", "a & b <= b & a", "b <= a & b"}) {
    CAPTURE(text);
    const solq::ProofResult r = solq::prove_rsol_t(solq::parse_sequent(text));
    CHECK(r.outcome == solq::ProofOutcome::exhausted);
    CHECK(!r.derivation.has_value());
    CHECK(r.stats.nodes > 0);
  }
}

TEST_CASE("the node budget aborts runaway searches with BudgetExceeded") {
  solq::SearchConfig tiny;
  tiny.node_budget = 1;
  CHECK_NOTHROW(solq::prove_rsol_t(solq::parse_sequent("a <= a"), tiny));  // one node suffices
  CHECK_THROWS_AS(solq::prove_rsol_t(solq::parse_sequent("a & b <= b"), tiny),
                  solq::BudgetExceeded);
  try {
    solq::prove_rsol_t(solq::parse_sequent("a & b <= b"), tiny);
    FAIL("expected BudgetExceeded");
  } catch (const solq::BudgetExceeded& e) {
    CHECK(e.stats.nodes > 1);
    CHECK(std::string(e.what()).find("SOLQ_BUDGET") != std::string::npos);
  }
}

TEST_CASE("SOLQ_BUDGET sets the default budget when parseable") {
  ::setenv("SOLQ_BUDGET", "12345", 1);
  CHECK(solq::default_node_budget() == 12345);
  ::setenv("SOLQ_BUDGET", "not-a-number", 1);
  CHECK(solq::default_node_budget() == 1'000'000);
  ::setenv("SOLQ_BUDGET", "0", 1);
  CHECK(solq::default_node_budget() == 1'000'000);
  ::unsetenv("SOLQ_BUDGET");
  CHECK(solq::default_node_budget() == 1'000'000);
}

TEST_CASE("cut search subsumes cut-free search") {
  for (const char* text : {"a <= a", "a & b <= b", "(a & b)' & b <= a'"}) {
    CAPTURE(text);
    const solq::ProofResult r = solq::prove_with_cut(solq::parse_sequent(text));
    REQUIRE(r.outcome == solq::ProofOutcome::proved);
    CHECK(solq::check_derivation(*r.derivation, true).ok);
  }
  // Refutable sequents stay unprovable with cuts (soundness): the whole
  // T-augmented space closes.
  const solq::ProofResult r = solq::prove_with_cut(solq::parse_sequent("a <= b"));
  CHECK(r.outcome == solq::ProofOutcome::exhausted);
}

TEST_CASE("explicit cut terms are honored") {
  const Sequent s = solq::parse_sequent("a & b <= b");
  const std::vector<Term> cuts = {Term::atom("b")};
  const solq::ProofResult r = solq::prove_with_cut(s, cuts, {});
  CHECK(r.outcome == solq::ProofOutcome::proved);

  const std::vector<Term> defaults = solq::default_cut_terms(s);
  // Subterms a&b, a, b plus one orthocomplement each, deduplicated.
  CHECK(defaults.size() == 6);
  for (std::size_t i = 0; i < defaults.size(); ++i)
    for (std::size_t j = i + 1; j < defaults.size(); ++j) CHECK(defaults[i] != defaults[j]);
}

TEST_CASE("decide routes to proof, countermodel, or both-empty") {
  const solq::ProofResult proved = solq::decide(solq::parse_sequent("a & b <= b"));
  CHECK(proved.outcome == solq::ProofOutcome::proved);
  CHECK(!proved.countermodel.has_value());

  const solq::ProofResult refuted = solq::decide(solq::parse_sequent("a & b <= b & a"));
  REQUIRE(refuted.outcome == solq::ProofOutcome::refuted);
  REQUIRE(refuted.countermodel.has_value());
  CHECK(refuted.countermodel->model.structure->poset.name() == "mo2");
  REQUIRE(refuted.refutation.has_value());
  CHECK(refuted.refutation->found.has_value());

  const solq::ProofResult boolean = solq::decide(solq::parse_sequent("a <= b"));
  REQUIRE(boolean.outcome == solq::ProofOutcome::refuted);
  const auto& cm = *boolean.countermodel;
  CHECK(cm.model.structure->poset.name() == "b1");
  CHECK(cm.model.valuation.at("a") == 1);
  CHECK(cm.model.valuation.at("b") == 0);
}

TEST_CASE("term enumeration is graded by operator count") {
  const auto zero = solq::enumerate_terms({"a", "b"}, 0);
  REQUIRE(zero.size() == 2);
  CHECK(solq::format_term(zero[0]) == "a");
  CHECK(solq::format_term(zero[1]) == "b");

  const auto one = solq::enumerate_terms({"a", "b"}, 1);
  CHECK(one.size() == 8);  // 2 atoms + 2 orthos + 4 products
  CHECK(solq::format_term(one[2]) == "a'");
  CHECK(solq::format_term(one[4]) == "a & a");

  CHECK(solq::enumerate_terms({"a", "b"}, 2).size() == 38);
  const auto three = solq::enumerate_terms({"a", "b"}, 3);
  CHECK(three.size() == 224);
  for (const Term& t : three) CHECK(t.operator_count() <= 3);
  for (std::size_t i = 0; i + 1 < three.size(); ++i)
    CHECK(three[i].operator_count() <= three[i + 1].operator_count());
}

TEST_CASE("every proof found on a small corpus is sound in mo2") {
  const auto catalog = solq::build_catalog({"mo2"});
  const auto& structure = catalog[0];
  const auto terms = solq::enumerate_terms({"a", "b"}, 2);
  int proved = 0;
  for (const Term& lhs : terms) {
    for (const Term& rhs : terms) {
      const Sequent s{lhs, rhs};
      const solq::ProofResult r = solq::prove_rsol_t(s);
      if (r.outcome != solq::ProofOutcome::proved) continue;
      ++proved;
      for (Elem va = 0; va < 6; ++va)
        for (Elem vb = 0; vb < 6; ++vb) {
          const solq::SasakiModel m{structure, {{"a", va}, {"b", vb}}};
          if (!solq::holds(m, s)) {
            CAPTURE(solq::format_sequent(s));
            CAPTURE(va);
            CAPTURE(vb);
            FAIL_CHECK("proved sequent fails in mo2");
          }
        }
    }
  }
  CHECK(proved > 0);
}
