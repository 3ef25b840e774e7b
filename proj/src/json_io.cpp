#include "solq/json_io.hpp"

#include <fstream>
#include <unordered_map>

namespace solq {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key, const char* what) {
  if (!j.is_object())
    throw std::invalid_argument(std::string(what) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw std::invalid_argument(std::string(what) + ": missing key \"" + key + "\"");
  return *it;
}

std::string require_string(const json& j, const char* what) {
  if (!j.is_string())
    throw std::invalid_argument(std::string(what) + ": expected a string");
  return j.get<std::string>();
}

}  // namespace

nlohmann::json term_to_json(const Term& t) {
  switch (t.kind()) {
    case TermKind::atom: return {{"atom", t.atom_name()}};
    case TermKind::sasaki: return {{"sasaki", {term_to_json(t.left()), term_to_json(t.right())}}};
    case TermKind::ortho: return {{"ortho", term_to_json(t.inner())}};
  }
  throw std::logic_error("term_to_json: unreachable term kind");
}

Term term_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.size() != 1)
    throw std::invalid_argument(
        "term: expected exactly one of {\"atom\"}, {\"sasaki\"}, {\"ortho\"}");
  if (auto it = j.find("atom"); it != j.end())
    return Term::atom(require_string(*it, "term: \"atom\""));
  if (auto it = j.find("sasaki"); it != j.end()) {
    if (!it->is_array() || it->size() != 2)
      throw std::invalid_argument("term: \"sasaki\" takes an array of two terms");
    return Term::sasaki(term_from_json((*it)[0]), term_from_json((*it)[1]));
  }
  if (auto it = j.find("ortho"); it != j.end()) return Term::ortho(term_from_json(*it));
  throw std::invalid_argument("term: unknown key \"" + j.begin().key() + "\"");
}

nlohmann::json sequent_to_json(const Sequent& s) {
  return {{"lhs", term_to_json(s.lhs)}, {"rhs", term_to_json(s.rhs)}};
}

Sequent sequent_from_json(const nlohmann::json& j) {
  return {term_from_json(require(j, "lhs", "sequent")),
          term_from_json(require(j, "rhs", "sequent"))};
}

nlohmann::json derivation_to_json(const Derivation& d) {
  json node;
  node["conclusion"] = sequent_to_json(d.conclusion);
  if (d.is_hypothesis()) {
    node["hyp"] = d.hyp_label;
    return node;
  }
  node["rule"] = rule_name(*d.rule);
  json premises = json::array();
  for (const Derivation& p : d.premises) premises.push_back(derivation_to_json(p));
  node["premises"] = std::move(premises);
  return node;
}

Derivation derivation_from_json(const nlohmann::json& j) {
  Derivation d;
  d.conclusion = sequent_from_json(require(j, "conclusion", "derivation node"));
  if (auto it = j.find("hyp"); it != j.end()) {
    if (j.contains("rule") || (j.contains("premises") && !j["premises"].empty()))
      throw std::invalid_argument("derivation node: a hypothesis leaf has no rule or premises");
    d.hyp_label = require_string(*it, "derivation node: \"hyp\"");
    return d;
  }
  const std::string name = require_string(require(j, "rule", "derivation node"), "derivation node: \"rule\"");
  auto rule = rule_from_name(name);
  if (!rule) throw std::invalid_argument("derivation node: unknown rule \"" + name + "\"");
  d.rule = *rule;
  if (auto it = j.find("premises"); it != j.end()) {
    if (!it->is_array())
      throw std::invalid_argument("derivation node: \"premises\" must be an array");
    for (const json& p : *it) d.premises.push_back(derivation_from_json(p));
  }
  return d;
}

FiniteOrthoposet orthoposet_from_json(const nlohmann::json& j, const std::string& name) {
  const json& elements = require(j, "elements", "model file");
  if (!elements.is_array() || elements.empty())
    throw std::invalid_argument("model file: \"elements\" must be a nonempty array of names");
  std::vector<std::string> names;
  std::unordered_map<std::string, Elem> ids;
  for (const json& e : elements) {
    std::string en = require_string(e, "model file: element");
    if (!ids.emplace(en, static_cast<Elem>(names.size())).second)
      throw std::invalid_argument("model file: duplicate element \"" + en + "\"");
    names.push_back(std::move(en));
  }
  auto lookup = [&ids](const std::string& en, const char* what) {
    auto it = ids.find(en);
    if (it == ids.end())
      throw std::invalid_argument(std::string("model file: ") + what + " names unknown element \"" +
                                  en + "\"");
    return it->second;
  };

  const auto n = names.size();
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) leq[a * n + a] = 1;
  const json& covers = require(j, "covers", "model file");
  if (!covers.is_array())
    throw std::invalid_argument("model file: \"covers\" must be an array of [lo, hi] pairs");
  for (const json& c : covers) {
    if (!c.is_array() || c.size() != 2)
      throw std::invalid_argument("model file: each cover must be a [lo, hi] pair");
    const Elem lo = lookup(require_string(c[0], "model file: cover"), "a cover");
    const Elem hi = lookup(require_string(c[1], "model file: cover"), "a cover");
    leq[static_cast<std::size_t>(lo) * n + static_cast<std::size_t>(hi)] = 1;
  }
  // Warshall closure of the cover relation.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (leq[a * n + k])
        for (std::size_t b = 0; b < n; ++b)
          if (leq[k * n + b]) leq[a * n + b] = 1;

  const json& ortho_map = require(j, "ortho", "model file");
  if (!ortho_map.is_object())
    throw std::invalid_argument("model file: \"ortho\" must be an object {name: name}");
  std::vector<Elem> ortho(n, kUndefined);
  for (auto it = ortho_map.begin(); it != ortho_map.end(); ++it) {
    const Elem from = lookup(it.key(), "the ortho map");
    ortho[static_cast<std::size_t>(from)] =
        lookup(require_string(it.value(), "model file: ortho image"), "the ortho map");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (ortho[a] == kUndefined)
      throw std::invalid_argument("model file: ortho map is missing \"" + names[a] + "\"");

  const Elem bottom = lookup(require_string(require(j, "bottom", "model file"), "model file: \"bottom\""), "bottom");
  const Elem top = lookup(require_string(require(j, "top", "model file"), "model file: \"top\""), "top");
  return FiniteOrthoposet(name, std::move(names), std::move(leq), std::move(ortho), bottom, top);
}

nlohmann::json axiom_report_to_json(const FiniteOrthoposet& p, const AxiomReport& report) {
  json violations = json::array();
  for (const Violation& v : report.violations) {
    json witness = json::array();
    for (Elem e : v.witness) witness.push_back(p.element_name(e));
    violations.push_back({{"law", law_name(v.law)}, {"witness", std::move(witness)}});
  }
  return {{"model", p.name()},
          {"elements", p.size()},
          {"ok", report.ok()},
          {"violations", std::move(violations)}};
}

nlohmann::json countermodel_to_json(const Countermodel& cm) {
  const FiniteOrthoposet& p = cm.model.structure->poset;
  json valuation;
  for (const auto& [atom, elem] : cm.model.valuation) valuation[atom] = p.element_name(elem);
  return {{"model", p.name()},
          {"valuation", std::move(valuation)},
          {"lhs_value", p.element_name(cm.lhs_value)},
          {"rhs_value", p.element_name(cm.rhs_value)}};
}

nlohmann::json countermodel_search_to_json(const CountermodelSearch& search) {
  json out = {{"found", search.found.has_value()},
              {"models_searched", search.models_searched},
              {"valuations_tried", search.valuations_tried}};
  if (search.found) out["countermodel"] = countermodel_to_json(*search.found);
  return out;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("'" + path + "': " + e.what());
  }
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace solq
