// Command-line front end: proving, countermodel search, axiom verification,
// derivation checking, and the built-in model catalog.
//
// Exit codes: 0 proved / everything holds, 1 refuted / violation found,
// 2 unknown (search closed or came up empty without an answer), 3 error,
// 64 usage error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "solq/json_io.hpp"
#include "solq/lattice.hpp"
#include "solq/proof.hpp"
#include "solq/semantics.hpp"
#include "solq/term.hpp"

namespace {

using nlohmann::json;

constexpr int kExitProved = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitError = 3;
constexpr int kExitUsage = 64;

// Bad command-line input (malformed sequent, unknown catalog name, ...)
// as opposed to failures of the requested computation.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

solq::Sequent parse_sequent_arg(const std::string& text) {
  try {
    return solq::parse_sequent(text);
  } catch (const solq::SyntaxError& e) {
    throw UsageError("cannot parse sequent \"" + text + "\": " + e.what());
  }
}

std::vector<std::string> resolve_catalog(const std::vector<std::string>& names) {
  const std::vector<std::string>& chosen = names.empty() ? solq::default_model_catalog() : names;
  for (const std::string& name : chosen) {
    try {
      (void)solq::catalog_model(name);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return chosen;
}

void print_derivation(std::ostream& os, const solq::Derivation& d, int depth = 0) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ');
  if (d.is_hypothesis())
    os << "hyp " << (d.hyp_label.empty() ? "?" : d.hyp_label) << ": ";
  else
    os << solq::rule_name(*d.rule) << ": ";
  os << solq::format_sequent(d.conclusion) << '\n';
  for (const solq::Derivation& p : d.premises) print_derivation(os, p, depth + 1);
}

void collect_rule_trace(const solq::Derivation& d, json& trace) {
  if (d.is_hypothesis())
    trace.push_back("hyp:" + d.hyp_label);
  else
    trace.push_back(solq::rule_name(*d.rule));
  for (const solq::Derivation& p : d.premises) collect_rule_trace(p, trace);
}

json stats_to_json(const solq::SearchStats& stats) {
  return {{"nodes", stats.nodes}, {"memo_entries", stats.memo_entries}};
}

std::string path_to_string(const std::vector<int>& path) {
  if (path.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) out += (i ? "." : "") + std::to_string(path[i]);
  return out;
}

void print_countermodel(std::ostream& os, const solq::Countermodel& cm) {
  const solq::FiniteOrthoposet& p = cm.model.structure->poset;
  os << "countermodel in " << p.name() << ":";
  std::vector<std::string> atoms;
  for (const auto& [atom, _] : cm.model.valuation) atoms.push_back(atom);
  std::sort(atoms.begin(), atoms.end());
  for (const std::string& atom : atoms)
    os << ' ' << atom << " = " << p.element_name(cm.model.valuation.at(atom)) << ',';
  os << " lhs = " << p.element_name(cm.lhs_value) << " !<= rhs = " << p.element_name(cm.rhs_value)
     << '\n';
}

// verify-axioms: orthoposet laws, then lattice-level orthomodularity, then
// (when those hold) the Sasaki axioms and roundtrip on the derived table.
solq::AxiomReport full_axiom_report(const solq::FiniteOrthoposet& p, solq::Exec exec) {
  solq::AxiomReport report = solq::validate_orthoposet(p, exec);
  if (!p.is_lattice() || !report.ok()) return report;
  const solq::OrthomodularResult om = solq::is_orthomodular(p, exec);
  if (!om.ok) {
    report.violations.push_back({solq::Law::orthomodular_law, {om.x, om.y}});
    return report;
  }
  const solq::SasakiTable table = solq::derived_sasaki_table(p, exec);
  for (auto& v : solq::check_sasaki_axioms(p, table, exec).violations)
    report.violations.push_back(std::move(v));
  for (auto& v : solq::sasaki_roundtrip_check(p, table, exec).violations)
    report.violations.push_back(std::move(v));
  return report;
}

int run_prove(const std::string& sequent_text, bool with_cut, std::uint64_t budget, int cut_depth,
              const std::string& emit_proof, bool as_json) {
  const solq::Sequent s = parse_sequent_arg(sequent_text);
  solq::SearchConfig config;
  config.node_budget = budget;
  config.cut_depth = cut_depth;
  const solq::ProofResult result =
      with_cut ? solq::prove_with_cut(s, config) : solq::prove_rsol_t(s, config);
  if (result.outcome == solq::ProofOutcome::proved && !emit_proof.empty())
    solq::save_json_file(emit_proof, solq::derivation_to_json(*result.derivation));
  if (as_json) {
    json out;
    out["sequent"] = solq::format_sequent(s);
    out["stats"] = stats_to_json(result.stats);
    if (result.outcome == solq::ProofOutcome::proved) {
      out["result"] = "proved";
      json trace = json::array();
      collect_rule_trace(*result.derivation, trace);
      out["rule_trace"] = std::move(trace);
      out["derivation"] = solq::derivation_to_json(*result.derivation);
    } else {
      out["result"] = "exhausted";
    }
    std::cout << out.dump(2) << '\n';
  } else if (result.outcome == solq::ProofOutcome::proved) {
    std::cout << "proved: " << solq::format_sequent(s) << '\n';
    print_derivation(std::cout, *result.derivation);
  } else {
    std::cout << "exhausted: no " << (with_cut ? "proof" : "cut-free proof") << " of \""
              << solq::format_sequent(s) << "\" exists (" << result.stats.nodes
              << " nodes searched)\n";
  }
  return result.outcome == solq::ProofOutcome::proved ? kExitProved : kExitUnknown;
}

int run_countermodel(const std::string& sequent_text, const std::vector<std::string>& catalog,
                     int max_atoms, bool as_json) {
  const solq::Sequent s = parse_sequent_arg(sequent_text);
  solq::SearchLimits limits;
  limits.max_atoms = max_atoms;
  const solq::CountermodelSearch search =
      solq::find_countermodel(s, resolve_catalog(catalog), limits, solq::Exec::parallel);
  if (as_json) {
    json out = solq::countermodel_search_to_json(search);
    out["sequent"] = solq::format_sequent(s);
    std::cout << out.dump(2) << '\n';
  } else if (search.found) {
    print_countermodel(std::cout, *search.found);
  } else {
    std::cout << "no countermodel: \"" << solq::format_sequent(s) << "\" holds in ";
    for (std::size_t i = 0; i < search.models_searched.size(); ++i)
      std::cout << (i ? ", " : "") << search.models_searched[i];
    std::cout << " (" << search.valuations_tried << " valuations)\n";
  }
  return search.found ? kExitRefuted : kExitUnknown;
}

int run_decide(const std::string& sequent_text, const std::vector<std::string>& catalog,
               std::uint64_t budget, int max_atoms, bool as_json) {
  const solq::Sequent s = parse_sequent_arg(sequent_text);
  solq::SearchConfig config;
  config.node_budget = budget;
  solq::SearchLimits limits;
  limits.max_atoms = max_atoms;
  const solq::ProofResult result =
      solq::decide(s, config, resolve_catalog(catalog), limits, solq::Exec::parallel);
  if (as_json) {
    json out;
    out["sequent"] = solq::format_sequent(s);
    out["stats"] = stats_to_json(result.stats);
    switch (result.outcome) {
      case solq::ProofOutcome::proved: {
        out["result"] = "proved";
        json trace = json::array();
        collect_rule_trace(*result.derivation, trace);
        out["rule_trace"] = std::move(trace);
        out["derivation"] = solq::derivation_to_json(*result.derivation);
        break;
      }
      case solq::ProofOutcome::refuted:
        out["result"] = "refuted";
        out["model"] = result.countermodel->model.structure->poset.name();
        out["countermodel"] = solq::countermodel_to_json(*result.countermodel);
        break;
      case solq::ProofOutcome::exhausted:
        out["result"] = "unknown";
        out["refutation"] = solq::countermodel_search_to_json(*result.refutation);
        break;
    }
    std::cout << out.dump(2) << '\n';
  } else {
    switch (result.outcome) {
      case solq::ProofOutcome::proved:
        std::cout << "proved: " << solq::format_sequent(s) << '\n';
        print_derivation(std::cout, *result.derivation);
        break;
      case solq::ProofOutcome::refuted:
        std::cout << "refuted: " << solq::format_sequent(s) << '\n';
        print_countermodel(std::cout, *result.countermodel);
        break;
      case solq::ProofOutcome::exhausted:
        std::cout << "unknown: no cut-free proof (" << result.stats.nodes
                  << " nodes) and no countermodel in the searched catalog ("
                  << result.refutation->valuations_tried << " valuations)\n";
        break;
    }
  }
  switch (result.outcome) {
    case solq::ProofOutcome::proved: return kExitProved;
    case solq::ProofOutcome::refuted: return kExitRefuted;
    case solq::ProofOutcome::exhausted: return kExitUnknown;
  }
  return kExitError;
}

int run_verify_axioms(const std::string& catalog_name, const std::string& model_file,
                      bool as_json) {
  std::optional<solq::FiniteOrthoposet> poset;
  if (!catalog_name.empty()) {
    try {
      poset = solq::catalog_model(catalog_name);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    poset = solq::orthoposet_from_json(solq::load_json_file(model_file), model_file);
  }
  const solq::AxiomReport report = full_axiom_report(*poset, solq::Exec::parallel);
  if (as_json) {
    json out = solq::axiom_report_to_json(*poset, report);
    out["lattice"] = poset->is_lattice();
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "model " << poset->name() << ": " << poset->size() << " elements, "
              << (poset->is_lattice() ? "lattice" : "not a lattice") << '\n';
    if (report.ok()) {
      std::cout << "all checked laws hold\n";
    } else {
      for (const solq::Violation& v : report.violations) {
        std::cout << solq::law_name(v.law) << " violated at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i)
          std::cout << (i ? ", " : "") << poset->element_name(v.witness[i]);
        std::cout << ")\n";
      }
    }
  }
  return report.ok() ? kExitProved : kExitRefuted;
}

int run_check_proof(const std::string& path, bool allow_t, bool as_json) {
  const solq::Derivation d = solq::derivation_from_json(solq::load_json_file(path));
  const solq::CheckResult result = solq::check_derivation(d, allow_t);
  if (as_json) {
    json out;
    out["ok"] = result.ok;
    out["allow_t"] = allow_t;
    if (result.ok) {
      json hyps = json::array();
      for (const solq::Hypothesis& h : result.hypotheses)
        hyps.push_back({{"label", h.label}, {"sequent", solq::format_sequent(h.sequent)}});
      out["hypotheses"] = std::move(hyps);
    } else {
      out["path"] = result.path;
      out["message"] = result.message;
    }
    std::cout << out.dump(2) << '\n';
  } else if (result.ok) {
    std::cout << "valid derivation of " << solq::format_sequent(d.conclusion) << '\n';
    if (result.hypotheses.empty()) {
      std::cout << "no open hypotheses\n";
    } else {
      std::cout << "open hypotheses:\n";
      for (const solq::Hypothesis& h : result.hypotheses)
        std::cout << "  " << (h.label.empty() ? "?" : h.label) << ": "
                  << solq::format_sequent(h.sequent) << '\n';
    }
  } else {
    std::cout << "invalid at " << path_to_string(result.path) << ": " << result.message << '\n';
  }
  return result.ok ? kExitProved : kExitRefuted;
}

int run_catalog(bool as_json) {
  json listing = json::array();
  for (const std::string& name : solq::catalog_names()) {
    const solq::FiniteOrthoposet p = solq::catalog_model(name);
    const solq::OrthomodularResult om = solq::is_orthomodular(p, solq::Exec::parallel);
    json entry = {{"name", name},
                  {"elements", p.size()},
                  {"orthomodular", om.ok},
                  {"distributive", solq::is_distributive(p)}};
    if (!om.ok)
      entry["orthomodularity_witness"] = {p.element_name(om.x), p.element_name(om.y)};
    listing.push_back(std::move(entry));
  }
  if (as_json) {
    std::cout << listing.dump(2) << '\n';
  } else {
    for (const json& entry : listing) {
      std::cout << entry["name"].get<std::string>() << ": " << entry["elements"]
                << " elements, " << (entry["orthomodular"].get<bool>() ? "orthomodular" : "NOT orthomodular")
                << ", " << (entry["distributive"].get<bool>() ? "distributive" : "non-distributive")
                << '\n';
    }
  }
  return kExitProved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sasaki orthologic toolkit: terminating RSOL/T proof search, RSOL derivation "
               "checking, and finite orthomodular-lattice countermodels"};
  app.require_subcommand(1);

  std::string sequent_text;
  std::vector<std::string> catalog;
  std::string model_file;
  std::string catalog_name;
  std::string proof_file;
  std::string emit_proof;
  std::uint64_t budget = solq::default_node_budget();
  int cut_depth = 1;
  int max_atoms = 4;
  bool with_cut = false;
  bool allow_t = false;
  bool as_json = false;

  CLI::App* prove = app.add_subcommand("prove", "Backward proof search for a sequent");
  prove->add_option("sequent", sequent_text, "sequent, e.g. \"a & b <= b\"")->required();
  prove->add_flag("--with-cut", with_cut, "also try the transitivity rule T (cut)");
  prove->add_option("--budget", budget, "node budget (default: SOLQ_BUDGET or 1000000)");
  prove->add_option("--cut-depth", cut_depth, "max T nodes per branch with --with-cut")
      ->check(CLI::NonNegativeNumber);
  prove->add_option("--emit-proof", emit_proof, "write the found derivation to a JSON file");
  prove->add_flag("--json", as_json, "machine-readable output");

  CLI::App* countermodel =
      app.add_subcommand("countermodel", "Search finite models for a refutation");
  countermodel->add_option("sequent", sequent_text, "sequent to refute")->required();
  countermodel->add_option("--catalog", catalog, "model names to search (default: built-in list)");
  countermodel->add_option("--max-atoms", max_atoms, "largest atom count to enumerate (default 4)")
      ->check(CLI::PositiveNumber);
  countermodel->add_flag("--json", as_json, "machine-readable output");

  CLI::App* decide = app.add_subcommand("decide", "Prove, and on failure search countermodels");
  decide->add_option("sequent", sequent_text, "sequent to decide")->required();
  decide->add_option("--catalog", catalog, "model names to search (default: built-in list)");
  decide->add_option("--budget", budget, "node budget (default: SOLQ_BUDGET or 1000000)");
  decide->add_option("--max-atoms", max_atoms, "largest atom count to enumerate (default 4)")
      ->check(CLI::PositiveNumber);
  decide->add_flag("--json", as_json, "machine-readable output");

  CLI::App* verify = app.add_subcommand("verify-axioms", "Check every law on a finite structure");
  auto* opt_catalog = verify->add_option("--catalog", catalog_name, "built-in model name");
  auto* opt_model = verify->add_option("--model", model_file, "model file (JSON)");
  opt_catalog->excludes(opt_model);
  verify->add_flag("--json", as_json, "machine-readable output");

  CLI::App* check = app.add_subcommand("check-proof", "Validate a derivation file");
  check->add_option("file", proof_file, "derivation file (JSON)")->required();
  check->add_flag("--allow-t", allow_t, "accept the transitivity rule T (full RSOL)");
  check->add_flag("--json", as_json, "machine-readable output");

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "List the built-in structures");
  catalog_cmd->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (prove->parsed())
      return run_prove(sequent_text, with_cut, budget, cut_depth, emit_proof, as_json);
    if (countermodel->parsed())
      return run_countermodel(sequent_text, catalog, max_atoms, as_json);
    if (decide->parsed()) return run_decide(sequent_text, catalog, budget, max_atoms, as_json);
    if (verify->parsed()) {
      if (catalog_name.empty() == model_file.empty())
        throw UsageError("verify-axioms needs exactly one of --catalog NAME or --model FILE");
      return run_verify_axioms(catalog_name, model_file, as_json);
    }
    if (check->parsed()) return run_check_proof(proof_file, allow_t, as_json);
    if (catalog_cmd->parsed()) return run_catalog(as_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}
