#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace solq {

// Raised by the parsers. `offset` is a byte position into the input text,
// `expected` lists the token spellings that would have been accepted there.
struct SyntaxError : std::runtime_error {
  SyntaxError(std::string msg, std::size_t offset, std::vector<std::string> expected);
  std::size_t offset;
  std::vector<std::string> expected;
};

enum class TermKind : std::uint8_t { atom, sasaki, ortho };

struct TermNode;

/// Immutable term of the language: atoms, the binary Sasaki connective `&`,
/// and the postfix orthocomplement `'`. Subtrees are shared; copying a Term
/// copies a pointer. Structural hash and connective counts are cached per node.
class Term {
 public:
  Term() = default;  // null term; only valid as a container placeholder

  static Term atom(std::string name);
  static Term sasaki(Term left, Term right);
  static Term ortho(Term inner);

  bool null() const { return node_ == nullptr; }
  TermKind kind() const;
  bool is_atom() const;
  bool is_sasaki() const;
  bool is_ortho() const;

  const std::string& atom_name() const;
  const Term& left() const;
  const Term& right() const;
  const Term& inner() const;

  std::size_t hash() const;
  /// Number of `&` nodes (the termination measure of the backward search).
  int connective_count() const;
  /// Total connective occurrences, `&` and `'` together.
  int operator_count() const;

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

 private:
  using Node = TermNode;
  explicit Term(std::shared_ptr<const TermNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const TermNode> node_;
};

/// Shared node behind Term; an implementation detail of the representation.
struct TermNode {
  TermKind kind;
  std::string name;   // atom only
  Term sub[2];        // sasaki: left/right; ortho: sub[0]
  std::size_t hash = 0;
  int sasaki_count = 0;
  int op_count = 0;
};

inline TermKind Term::kind() const { return node_->kind; }
inline bool Term::is_atom() const { return node_->kind == TermKind::atom; }
inline bool Term::is_sasaki() const { return node_->kind == TermKind::sasaki; }
inline bool Term::is_ortho() const { return node_->kind == TermKind::ortho; }
inline const std::string& Term::atom_name() const { return node_->name; }
inline const Term& Term::left() const { return node_->sub[0]; }
inline const Term& Term::right() const { return node_->sub[1]; }
inline const Term& Term::inner() const { return node_->sub[0]; }
inline std::size_t Term::hash() const { return node_->hash; }
inline int Term::connective_count() const { return node_->sasaki_count; }
inline int Term::operator_count() const { return node_->op_count; }

/// Judgment `lhs <= rhs`.
struct Sequent {
  Term lhs, rhs;
  bool operator==(const Sequent& o) const { return lhs == o.lhs && rhs == o.rhs; }
  bool operator!=(const Sequent& o) const { return !(*this == o); }
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};
struct SequentHash {
  std::size_t operator()(const Sequent& s) const {
    return s.lhs.hash() * 0x9e3779b97f4a7c15ull + s.rhs.hash();
  }
};

/// Orthocomplement at the term level with the involution folded in:
/// negated(t') = t, negated(t) = t' otherwise. This is the form the
/// backward reading of the S and G rules produces.
Term negated(const Term& t);

/// True when `u` and `x` differ by exactly one outer orthocomplement,
/// in either direction. This is how a `^⊥` decoration in a rule schema
/// is allowed to be realized.
bool ortho_of(const Term& u, const Term& x);

Term parse_term(const std::string& text);
Sequent parse_sequent(const std::string& text);

/// Minimal parenthesization; parse_term(format_term(t)) == t.
std::string format_term(const Term& t);
std::string format_sequent(const Sequent& s);

int connective_count(const Term& t);

/// Distinct atom names, sorted.
std::vector<std::string> atoms_of(const Term& t);
std::vector<std::string> atoms_of(const Sequent& s);

/// Distinct subterms in preorder (first occurrence wins).
std::vector<Term> subterms(const Term& t);
std::vector<Term> subterms(const Sequent& s);

}  // namespace solq
