#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "solq/lattice.hpp"
#include "solq/term.hpp"

namespace solq {

/// An orthoposet bundled with a Sasaki table that passed check_sasaki_axioms.
struct SasakiStructure {
  FiniteOrthoposet poset;
  SasakiTable table;
};

/// Derives the table b ∧ (b' ∨ a) from the lattice and verifies the four
/// axioms on it. Throws std::invalid_argument when the poset is not a lattice
/// or the axioms fail (e.g. for o6, which is not orthomodular).
SasakiStructure make_sasaki_structure(FiniteOrthoposet poset, Exec exec = Exec::serial);

/// Thrown by interpret/holds when a term mentions an atom the valuation
/// does not cover.
struct UnboundAtom : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A structure plus an assignment of atom names to elements.
struct SasakiModel {
  std::shared_ptr<const SasakiStructure> structure;
  std::unordered_map<std::string, Elem> valuation;
};

/// ⟦t⟧: atoms via the valuation, ' via the orthocomplement, & via the table.
Elem interpret(const SasakiModel& m, const Term& t);

/// ⟦lhs⟧ ≤ ⟦rhs⟧ in the model's order.
bool holds(const SasakiModel& m, const Sequent& s);

struct Countermodel {
  SasakiModel model;
  Elem lhs_value = kUndefined;
  Elem rhs_value = kUndefined;
};

struct SearchLimits {
  /// Valuation spaces grow as n^atoms; refuse queries with more atoms.
  int max_atoms = 4;
};

/// Thrown when a sequent has more atoms than SearchLimits allows; searching
/// anyway would silently skip part of the space, so the caller must raise
/// the limit explicitly.
struct TooManyAtoms : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// find_countermodel outcome. `found` empty means "valid over the searched
/// family", NOT validity in general; the searched space is recorded so that
/// a NotFound can be reported honestly.
struct CountermodelSearch {
  std::optional<Countermodel> found;
  std::vector<std::string> models_searched;
  std::uint64_t valuations_tried = 0;
};

/// Builds validated Sasaki structures for the named catalog entries.
std::vector<std::shared_ptr<const SasakiStructure>> build_catalog(
    const std::vector<std::string>& names, Exec exec = Exec::serial);

/// Enumerates every valuation of s's atoms into each structure, in
/// deterministic order: structures in the given order, valuations
/// lexicographic over the sorted atom names with elements in id order.
/// Returns the first countermodel in that order (regardless of execution
/// policy) or NotFound. Throws TooManyAtoms past the limit.
CountermodelSearch find_countermodel(const Sequent& s,
                                     const std::vector<std::shared_ptr<const SasakiStructure>>& structures,
                                     const SearchLimits& limits = {}, Exec exec = Exec::serial);

/// Convenience overload building the named structures first.
CountermodelSearch find_countermodel(const Sequent& s, const std::vector<std::string>& catalog,
                                     const SearchLimits& limits = {}, Exec exec = Exec::serial);

/// Structures searched by default: Booleans catch classical failures
/// cheaply, the MO family separates quantum from classical laws, and one
/// product mixes the two. (o6 is absent: its derived table fails the Sasaki
/// axioms, so it carries no models.)
const std::vector<std::string>& default_model_catalog();

}  // namespace solq
