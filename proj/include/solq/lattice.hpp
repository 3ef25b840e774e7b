#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "solq/scan.hpp"

namespace solq {

/// Element id inside a FiniteOrthoposet (0..n-1).
using Elem = int;
inline constexpr Elem kUndefined = -1;

/// Laws checked by the validators below. The first four are orthoposet
/// structure, `orthomodular_law` is the lattice-level law, the next four are
/// the axioms a Sasaki table must satisfy, and `roundtrip` tags mismatches
/// found when & is re-derived from its induced meet.
enum class Law : std::uint8_t {
  order,
  involution,
  antitone,
  complement,
  orthomodular_law,
  l_monotony,
  r_reduction,
  sasaki_orthomodularity,
  galois,
  roundtrip,
};

const char* law_name(Law law);

struct Violation {
  Law law;
  std::vector<Elem> witness;
};

struct AxiomReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Thrown when a generated-subalgebra closure grows past its size cap;
/// signals "unknown at this scale" rather than a definite answer.
struct ClosureCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite bounded poset with an orthocomplement map, given by the full ≤
/// relation. Meet/join tables are precomputed at construction; entries may be
/// kUndefined because orthoposets need not be lattices. Immutable after
/// construction, so safe to share across threads.
class FiniteOrthoposet {
 public:
  /// `leq` is the n×n relation in row-major order (leq[a*n+b] ⟺ a ≤ b).
  /// Throws std::invalid_argument on shape errors (non-square relation,
  /// ids out of range, duplicate element names). Semantic law violations are
  /// NOT rejected here; validate_orthoposet reports them.
  FiniteOrthoposet(std::string name, std::vector<std::string> element_names,
                   std::vector<std::uint8_t> leq, std::vector<Elem> ortho,
                   Elem bottom, Elem top);

  const std::string& name() const noexcept { return name_; }
  int size() const noexcept { return n_; }
  const std::string& element_name(Elem a) const { return names_.at(static_cast<std::size_t>(a)); }
  std::optional<Elem> element_by_name(const std::string& name) const;

  bool leq(Elem a, Elem b) const { return leq_[index(a, b)] != 0; }
  Elem ortho(Elem a) const { return ortho_[check(a)]; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  /// Greatest lower / least upper bound, or kUndefined when none exists.
  Elem meet(Elem a, Elem b) const { return meet_[index(a, b)]; }
  Elem join(Elem a, Elem b) const { return join_[index(a, b)]; }

  /// True when every pair has both a meet and a join.
  bool is_lattice() const noexcept { return is_lattice_; }

 private:
  std::size_t check(Elem a) const;
  std::size_t index(Elem a, Elem b) const { return check(a) * static_cast<std::size_t>(n_) + check(b); }
  void build_bound_tables();

  std::string name_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Elem> by_name_;
  int n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> ortho_;
  Elem bottom_ = 0;
  Elem top_ = 0;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  bool is_lattice_ = false;
};

/// Total binary operation table; entry at(a,b) is the value of a & b.
struct SasakiTable {
  int n = 0;
  std::vector<Elem> values;  // n×n row-major

  Elem at(Elem a, Elem b) const { return values[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)]; }
  Elem& at(Elem a, Elem b) { return values[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)]; }
};

/// Exhaustively checks every orthoposet invariant: order laws (reflexive,
/// antisymmetric, transitive, bounded), involution, antitonicity, and the
/// complement laws where the bounds exist. Witnesses are element ids.
AxiomReport validate_orthoposet(const FiniteOrthoposet& p, Exec exec = Exec::serial);

struct OrthomodularResult {
  bool ok = true;
  Elem x = kUndefined;  // witness pair when !ok: x ≤ y but x ≠ y ∧ (x ∨ y')
  Elem y = kUndefined;
};

/// Tests the orthomodular law on a lattice; returns the first witness in
/// scan order when it fails. Throws std::invalid_argument when p is not a
/// lattice.
OrthomodularResult is_orthomodular(const FiniteOrthoposet& p, Exec exec = Exec::serial);

/// b ∧ (b' ∨ a): the projection of a onto b. Requires a lattice.
Elem sasaki_from_lattice(const FiniteOrthoposet& p, Elem a, Elem b);

/// Full table of sasaki_from_lattice over all pairs.
SasakiTable derived_sasaki_table(const FiniteOrthoposet& p, Exec exec = Exec::serial);

/// Exhaustively tests the four Sasaki axioms against an explicit table:
///   L-Monotony      a ≤ b ⇒ a&c ≤ b&c        (all triples)
///   R-Reduction     a&b ≤ b                   (all pairs)
///   Orthomodularity a ≤ b ⇒ a = a&b           (all pairs)
///   Galois          a&b ≤ c ⇒ c'&b ≤ a'       (all triples)
AxiomReport check_sasaki_axioms(const FiniteOrthoposet& p, const SasakiTable& table,
                                Exec exec = Exec::serial);

/// (a' & b)' & b — the meet induced by a Sasaki table.
Elem meet_from_sasaki(const FiniteOrthoposet& p, const SasakiTable& table, Elem a, Elem b);

/// Pairs where meet_from_sasaki disagrees with the order-theoretic meet.
std::vector<std::pair<Elem, Elem>> meet_agreement_failures(const FiniteOrthoposet& p,
                                                           const SasakiTable& table,
                                                           Exec exec = Exec::serial);

/// Recomputes a & b = b ∧_& (b ∧_& a')' from the induced meet and reports
/// every pair where the result disagrees with the table.
AxiomReport sasaki_roundtrip_check(const FiniteOrthoposet& p, const SasakiTable& table,
                                   Exec exec = Exec::serial);

inline constexpr std::size_t kClosureCap = 4096;

/// Smallest subset containing `seed`, bottom, and top that is closed under
/// meet, join, and orthocomplement. Result is sorted by element id.
/// Throws ClosureCapExceeded when the closure would exceed `cap`.
std::vector<Elem> generated_subalgebra(const FiniteOrthoposet& p, const std::vector<Elem>& seed,
                                       std::size_t cap = kClosureCap);

/// Does a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c) hold for all triples drawn from
/// `elems`? All meets/joins among members must exist.
bool is_distributive_subset(const FiniteOrthoposet& p, const std::vector<Elem>& elems);

/// Whole-structure distributivity (convenience for catalog listings).
bool is_distributive(const FiniteOrthoposet& p);

/// x C y: the subalgebra generated by {x, y, 0, 1} is Boolean (distributive).
/// Requires a lattice. Throws ClosureCapExceeded per generated_subalgebra.
bool compatible(const FiniteOrthoposet& p, Elem x, Elem y, std::size_t cap = kClosureCap);

/// (x ∧ y) ∨ (x ∧ y'): in an orthomodular lattice, x C y ⟺ x equals this.
/// Kept as a cross-check diagnostic; `compatible` is the definition.
Elem commutator(const FiniteOrthoposet& p, Elem x, Elem y);

/// π_x(y) = (y ∨ x) ∧ (y ∨ x'): least element above y compatible with x.
Elem pi(const FiniteOrthoposet& p, Elem x, Elem y);

/// One violated π law, if any:
///   clause 1: y ≤ π_x(y)
///   clause 2: x C π_x(y)
///   clause 3: minimality — y ≤ t and x C t imply π_x(y) ≤ t   (t recorded)
///   clause 4: π_x(y) ∧ x = (y ∨ x') ∧ x = sasaki_from_lattice(p, y, x)
struct PiViolation {
  int clause = 0;
  Elem x = kUndefined, y = kUndefined, t = kUndefined;
};
std::optional<PiViolation> pi_law_violation(const FiniteOrthoposet& p, Exec exec = Exec::serial,
                                            std::size_t cap = kClosureCap);

/// First triple (a,b,c) violating the Galois biconditional
/// b ∧ (b' ∨ a) ≤ c ⟺ a ≤ b' ∨ (b ∧ c), or nullopt.
std::optional<std::array<Elem, 3>> galois_biconditional_violation(const FiniteOrthoposet& p,
                                                                  Exec exec = Exec::serial);

/// First triple (x,y,z) violating π_x(y) ∧ x ≤ z ⇒ π_x(z') ∧ x ≤ y',
/// or nullopt.
std::optional<std::array<Elem, 3>> pi_galois_violation(const FiniteOrthoposet& p,
                                                       Exec exec = Exec::serial);

/// First comparable pair that is not compatible, or nullopt.
std::optional<std::array<Elem, 2>> comparable_compatible_violation(const FiniteOrthoposet& p,
                                                                   Exec exec = Exec::serial,
                                                                   std::size_t cap = kClosureCap);

// ---- built-in structures ---------------------------------------------------

/// Powerset algebra on `atom_count` generators (2^k elements). Element names
/// concatenate the atom letters p, q, r, ... present in the subset; bottom is
/// "0" and top is "1". atom_count must be in [1, 11].
FiniteOrthoposet boolean_algebra(int atom_count);

/// MO_k: horizontal sum of k four-element blocks sharing bottom and top
/// (2k+2 elements). Block atoms are named x1, x1', x2, x2', ...
FiniteOrthoposet mo(int block_count);

/// The six-element benzene ring 0 < a < b < 1, 0 < b' < a' < 1: an
/// ortholattice that is not orthomodular.
FiniteOrthoposet o6();

/// Componentwise product order/orthocomplement; element names are "(u,v)".
FiniteOrthoposet product(const FiniteOrthoposet& p, const FiniteOrthoposet& q);

/// Names of all built-in structures, in listing order.
const std::vector<std::string>& catalog_names();

/// Builds a built-in structure by name ("b1".."b4", "mo2".."mo4", "o6",
/// "mo2xb1"). Throws std::invalid_argument for unknown names.
FiniteOrthoposet catalog_model(const std::string& name);

}  // namespace solq
