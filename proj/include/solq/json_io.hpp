#pragma once

#include <string>

#include "json.hpp"
#include "solq/lattice.hpp"
#include "solq/proof.hpp"
#include "solq/semantics.hpp"
#include "solq/term.hpp"

namespace solq {

/// Term tree: {"atom": name} | {"sasaki": [left, right]} | {"ortho": inner}.
nlohmann::json term_to_json(const Term& t);
Term term_from_json(const nlohmann::json& j);

/// Sequent: {"lhs": term, "rhs": term}.
nlohmann::json sequent_to_json(const Sequent& s);
Sequent sequent_from_json(const nlohmann::json& j);

/// Derivation node: {"conclusion": sequent, "rule": id, "premises": [...]}
/// with {"conclusion": sequent, "hyp": label} at hypothesis leaves.
nlohmann::json derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const nlohmann::json& j);

/// Model file: {"elements": [names], "covers": [[lo, hi], ...],
/// "ortho": {name: name}, "bottom": name, "top": name}. The order relation
/// is the reflexive-transitive closure of the cover pairs.
FiniteOrthoposet orthoposet_from_json(const nlohmann::json& j, const std::string& name = "model");

nlohmann::json axiom_report_to_json(const FiniteOrthoposet& p, const AxiomReport& report);
nlohmann::json countermodel_to_json(const Countermodel& cm);
nlohmann::json countermodel_search_to_json(const CountermodelSearch& search);

/// Throws std::runtime_error naming the path on open or parse failure.
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace solq
