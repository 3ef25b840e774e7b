#include "solq/semantics.hpp"

#include <string>

namespace solq {

SasakiStructure make_sasaki_structure(FiniteOrthoposet poset, Exec exec) {
  if (!poset.is_lattice())
    throw std::invalid_argument("make_sasaki_structure: '" + poset.name() + "' is not a lattice");
  SasakiTable table = derived_sasaki_table(poset, exec);
  AxiomReport report = check_sasaki_axioms(poset, table, exec);
  if (!report.ok()) {
    const Violation& v = report.violations.front();
    std::string msg = "make_sasaki_structure: '" + poset.name() + "' violates " +
                      law_name(v.law) + " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i)
      msg += (i ? "," : "") + poset.element_name(v.witness[i]);
    throw std::invalid_argument(msg + ")");
  }
  return SasakiStructure{std::move(poset), std::move(table)};
}

Elem interpret(const SasakiModel& m, const Term& t) {
  switch (t.kind()) {
    case TermKind::atom: {
      auto it = m.valuation.find(t.atom_name());
      if (it == m.valuation.end())
        throw UnboundAtom("unbound atom '" + t.atom_name() + "' in model over '" +
                          m.structure->poset.name() + "'");
      return it->second;
    }
    case TermKind::ortho:
      return m.structure->poset.ortho(interpret(m, t.inner()));
    case TermKind::sasaki:
      return m.structure->table.at(interpret(m, t.left()), interpret(m, t.right()));
  }
  throw std::logic_error("interpret: unreachable term kind");
}

bool holds(const SasakiModel& m, const Sequent& s) {
  return m.structure->poset.leq(interpret(m, s.lhs), interpret(m, s.rhs));
}

std::vector<std::shared_ptr<const SasakiStructure>> build_catalog(
    const std::vector<std::string>& names, Exec exec) {
  std::vector<std::shared_ptr<const SasakiStructure>> out;
  out.reserve(names.size());
  for (const std::string& name : names)
    out.push_back(std::make_shared<const SasakiStructure>(
        make_sasaki_structure(catalog_model(name), exec)));
  return out;
}

namespace {

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Decodes valuation index i into the model's map: the FIRST atom takes the
// most significant digit, so ascending i is lexicographic over the
// (sorted) atom list.
void decode_valuation(SasakiModel& m, const std::vector<std::string>& atoms, std::uint64_t i,
                      int n) {
  std::uint64_t rest = i;
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
    m.valuation[*it] = static_cast<Elem>(rest % static_cast<std::uint64_t>(n));
    rest /= static_cast<std::uint64_t>(n);
  }
}

}  // namespace

CountermodelSearch find_countermodel(
    const Sequent& s, const std::vector<std::shared_ptr<const SasakiStructure>>& structures,
    const SearchLimits& limits, Exec exec) {
  const std::vector<std::string> atoms = atoms_of(s);
  if (static_cast<int>(atoms.size()) > limits.max_atoms)
    throw TooManyAtoms("sequent has " + std::to_string(atoms.size()) +
                       " atoms; the valuation limit is " + std::to_string(limits.max_atoms) +
                       " (raise it explicitly to search anyway)");
  CountermodelSearch result;
  for (const auto& structure : structures) {
    const int n = structure->poset.size();
    const std::uint64_t count = ipow(static_cast<std::uint64_t>(n), static_cast<int>(atoms.size()));
    result.models_searched.push_back(structure->poset.name());
    // first_failure keeps the smallest failing index, so the reported
    // countermodel is the lexicographically first one even when scanned in
    // parallel.
    auto hit = first_failure(static_cast<std::size_t>(count), exec, [&](std::size_t i) {
      SasakiModel m{structure, {}};
      decode_valuation(m, atoms, static_cast<std::uint64_t>(i), n);
      return holds(m, s);
    });
    if (hit) {
      result.valuations_tried += static_cast<std::uint64_t>(*hit) + 1;
      SasakiModel m{structure, {}};
      decode_valuation(m, atoms, static_cast<std::uint64_t>(*hit), n);
      Countermodel cm{m, interpret(m, s.lhs), interpret(m, s.rhs)};
      result.found = std::move(cm);
      return result;
    }
    result.valuations_tried += count;
  }
  return result;
}

CountermodelSearch find_countermodel(const Sequent& s, const std::vector<std::string>& catalog,
                                     const SearchLimits& limits, Exec exec) {
  return find_countermodel(s, build_catalog(catalog, exec), limits, exec);
}

const std::vector<std::string>& default_model_catalog() {
  static const std::vector<std::string> kNames = {"b1", "b2", "b3", "mo2", "mo3", "mo4", "mo2xb1"};
  return kNames;
}

}  // namespace solq
