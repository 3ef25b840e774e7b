#include "solq/term.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

namespace solq {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

bool valid_atom_name(const std::string& s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

SyntaxError::SyntaxError(std::string msg, std::size_t off, std::vector<std::string> exp)
    : std::runtime_error(std::move(msg)), offset(off), expected(std::move(exp)) {}

Term Term::atom(std::string name) {
  if (!valid_atom_name(name))
    throw std::invalid_argument("invalid atom name: '" + name + "'");
  auto n = std::make_shared<Node>();
  n->kind = TermKind::atom;
  n->hash = mix(0x61, std::hash<std::string>{}(name));
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::sasaki(Term left, Term right) {
  if (left.null() || right.null()) throw std::invalid_argument("null subterm");
  auto n = std::make_shared<Node>();
  n->kind = TermKind::sasaki;
  n->hash = mix(mix(0x26, left.hash()), right.hash());
  n->sasaki_count = left.connective_count() + right.connective_count() + 1;
  n->op_count = left.operator_count() + right.operator_count() + 1;
  n->sub[0] = std::move(left);
  n->sub[1] = std::move(right);
  return Term(std::move(n));
}

Term Term::ortho(Term inner) {
  if (inner.null()) throw std::invalid_argument("null subterm");
  auto n = std::make_shared<Node>();
  n->kind = TermKind::ortho;
  n->hash = mix(0x27, inner.hash());
  n->sasaki_count = inner.connective_count();
  n->op_count = inner.operator_count() + 1;
  n->sub[0] = std::move(inner);
  return Term(std::move(n));
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->hash != other.node_->hash || node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case TermKind::atom:
      return node_->name == other.node_->name;
    case TermKind::ortho:
      return inner() == other.inner();
    case TermKind::sasaki:
      return left() == other.left() && right() == other.right();
  }
  return false;
}

Term negated(const Term& t) {
  return t.is_ortho() ? t.inner() : Term::ortho(t);
}

bool ortho_of(const Term& u, const Term& x) {
  if (u.is_ortho() && u.inner() == x) return true;
  if (x.is_ortho() && x.inner() == u) return true;
  return false;
}

int connective_count(const Term& t) { return t.connective_count(); }

// ---------------------------------------------------------------------------
// Lexer / parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok : std::uint8_t { atom, amp, prime, lpar, rpar, leq, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::atom: return "atom";
    case Tok::amp: return "'&'";
    case Tok::prime: return "'";
    case Tok::lpar: return "'('";
    case Tok::rpar: return "')'";
    case Tok::leq: return "'<='";
    case Tok::end: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') { ++i; continue; }
    if (c == '&') { out.push_back({Tok::amp, "&", i}); ++i; continue; }
    if (c == '\'') { out.push_back({Tok::prime, "'", i}); ++i; continue; }
    if (c == '(') { out.push_back({Tok::lpar, "(", i}); ++i; continue; }
    if (c == ')') { out.push_back({Tok::rpar, ")", i}); ++i; continue; }
    if (c == '<') {
      if (i + 1 < text.size() && text[i + 1] == '=') {
        out.push_back({Tok::leq, "<=", i});
        i += 2;
        continue;
      }
      throw SyntaxError("expected '<=' at offset " + std::to_string(i), i, {"<="});
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      out.push_back({Tok::atom, text.substr(start, i - start), start});
      continue;
    }
    throw SyntaxError("unexpected character '" + std::string(1, c) + "' at offset " +
                          std::to_string(i),
                      i, {"atom", "'('"});
  }
  out.push_back({Tok::end, "", text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Term term() {
    Term t = factor();
    while (peek().kind == Tok::amp) {
      advance();
      t = Term::sasaki(std::move(t), factor());
    }
    return t;
  }

  const Token& peek() const { return toks_[pos_]; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::ostringstream msg;
    msg << "syntax error at offset " << t.offset << ": unexpected " << tok_name(t.kind)
        << "; expected ";
    for (std::size_t i = 0; i < expected.size(); ++i)
      msg << (i ? " or " : "") << expected[i];
    throw SyntaxError(msg.str(), t.offset, std::move(expected));
  }

 private:
  Term factor() {
    Term t = primary();
    while (peek().kind == Tok::prime) {
      advance();
      t = Term::ortho(std::move(t));
    }
    return t;
  }

  Term primary() {
    const Token& t = peek();
    if (t.kind == Tok::atom) {
      advance();
      return Term::atom(t.text);
    }
    if (t.kind == Tok::lpar) {
      advance();
      Term inner = term();
      if (peek().kind != Tok::rpar) fail({"')'", "'&'", "'"});
      advance();
      return inner;
    }
    fail({"atom", "'('"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(const std::string& text) {
  Parser p(lex(text));
  Term t = p.term();
  if (p.peek().kind != Tok::end) p.fail({"'&'", "end of input"});
  return t;
}

Sequent parse_sequent(const std::string& text) {
  Parser p(lex(text));
  Term lhs = p.term();
  if (p.peek().kind != Tok::leq) p.fail({"'<='"});
  p.advance();
  Term rhs = p.term();
  if (p.peek().kind == Tok::leq) {
    std::size_t off = p.peek().offset;
    throw SyntaxError("duplicate '<=' at offset " + std::to_string(off), off,
                      {"'&'", "end of input"});
  }
  if (p.peek().kind != Tok::end) p.fail({"'&'", "end of input"});
  return Sequent{std::move(lhs), std::move(rhs)};
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

void print_term(std::ostringstream& out, const Term& t, bool ortho_operand) {
  switch (t.kind()) {
    case TermKind::atom:
      out << t.atom_name();
      return;
    case TermKind::ortho:
      // '(...)'' is the only place parentheses are forced: a Sasaki operand
      // of the tighter-binding postfix '.
      print_term(out, t.inner(), true);
      out << '\'';
      return;
    case TermKind::sasaki: {
      bool paren = ortho_operand;
      if (paren) out << '(';
      print_term(out, t.left(), false);
      out << " & ";
      // right child parenthesized when itself a '&': the bare form would
      // reassociate to the left.
      if (t.right().is_sasaki()) {
        out << '(';
        print_term(out, t.right(), false);
        out << ')';
      } else {
        print_term(out, t.right(), false);
      }
      if (paren) out << ')';
      return;
    }
  }
}

}  // namespace

std::string format_term(const Term& t) {
  std::ostringstream out;
  print_term(out, t, false);
  return out.str();
}

std::string format_sequent(const Sequent& s) {
  return format_term(s.lhs) + " <= " + format_term(s.rhs);
}

std::vector<std::string> atoms_of(const Term& t) {
  std::vector<std::string> out;
  std::vector<Term> stack{t};
  while (!stack.empty()) {
    Term cur = stack.back();
    stack.pop_back();
    switch (cur.kind()) {
      case TermKind::atom:
        out.push_back(cur.atom_name());
        break;
      case TermKind::ortho:
        stack.push_back(cur.inner());
        break;
      case TermKind::sasaki:
        stack.push_back(cur.right());
        stack.push_back(cur.left());
        break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> atoms_of(const Sequent& s) {
  std::vector<std::string> a = atoms_of(s.lhs), b = atoms_of(s.rhs);
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

namespace {

void collect_subterms(const Term& t, std::vector<Term>& out,
                      std::unordered_set<Term, TermHash>& seen) {
  if (seen.insert(t).second) out.push_back(t);
  switch (t.kind()) {
    case TermKind::atom:
      break;
    case TermKind::ortho:
      collect_subterms(t.inner(), out, seen);
      break;
    case TermKind::sasaki:
      collect_subterms(t.left(), out, seen);
      collect_subterms(t.right(), out, seen);
      break;
  }
}

}  // namespace

std::vector<Term> subterms(const Term& t) {
  std::vector<Term> out;
  std::unordered_set<Term, TermHash> seen;
  collect_subterms(t, out, seen);
  return out;
}

std::vector<Term> subterms(const Sequent& s) {
  std::vector<Term> out;
  std::unordered_set<Term, TermHash> seen;
  collect_subterms(s.lhs, out, seen);
  collect_subterms(s.rhs, out, seen);
  return out;
}

}  // namespace solq
