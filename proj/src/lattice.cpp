#include "solq/lattice.hpp"

#include <algorithm>
#include <string>

namespace solq {

const char* law_name(Law law) {
  switch (law) {
    case Law::order: return "order";
    case Law::involution: return "involution";
    case Law::antitone: return "antitone";
    case Law::complement: return "complement";
    case Law::orthomodular_law: return "orthomodular-law";
    case Law::l_monotony: return "L-Monotony";
    case Law::r_reduction: return "R-Reduction";
    case Law::sasaki_orthomodularity: return "Orthomodularity";
    case Law::galois: return "Galois";
    case Law::roundtrip: return "roundtrip";
  }
  return "?";
}

FiniteOrthoposet::FiniteOrthoposet(std::string name, std::vector<std::string> element_names,
                                   std::vector<std::uint8_t> leq, std::vector<Elem> ortho,
                                   Elem bottom, Elem top)
    : name_(std::move(name)),
      names_(std::move(element_names)),
      n_(static_cast<int>(names_.size())),
      leq_(std::move(leq)),
      ortho_(std::move(ortho)),
      bottom_(bottom),
      top_(top) {
  if (n_ == 0) throw std::invalid_argument("orthoposet: no elements");
  const auto n = static_cast<std::size_t>(n_);
  if (leq_.size() != n * n) throw std::invalid_argument("orthoposet: order relation is not n×n");
  if (ortho_.size() != n) throw std::invalid_argument("orthoposet: ortho map size mismatch");
  for (Elem img : ortho_)
    if (img < 0 || img >= n_) throw std::invalid_argument("orthoposet: ortho image out of range");
  if (bottom_ < 0 || bottom_ >= n_ || top_ < 0 || top_ >= n_)
    throw std::invalid_argument("orthoposet: bottom/top out of range");
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = by_name_.emplace(names_[i], static_cast<Elem>(i));
    if (!fresh) throw std::invalid_argument("orthoposet: duplicate element name '" + names_[i] + "'");
  }
  build_bound_tables();
}

std::optional<Elem> FiniteOrthoposet::element_by_name(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteOrthoposet::check(Elem a) const {
  if (a < 0 || a >= n_) throw std::out_of_range("orthoposet: element id out of range");
  return static_cast<std::size_t>(a);
}

void FiniteOrthoposet::build_bound_tables() {
  const auto n = static_cast<std::size_t>(n_);
  meet_.assign(n * n, kUndefined);
  join_.assign(n * n, kUndefined);
  is_lattice_ = true;
  // One pass keeps the greatest lower bound seen so far; if a true meet
  // exists the pass converges on it, and the verification loop rejects the
  // candidate otherwise. O(n) per pair instead of the naive O(n²).
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = 0; b < n_; ++b) {
      Elem lo = kUndefined;
      Elem hi = kUndefined;
      for (Elem x = 0; x < n_; ++x) {
        if (leq(x, a) && leq(x, b) && (lo == kUndefined || leq(lo, x))) lo = x;
        if (leq(a, x) && leq(b, x) && (hi == kUndefined || leq(x, hi))) hi = x;
      }
      for (Elem x = 0; x < n_ && (lo != kUndefined || hi != kUndefined); ++x) {
        if (lo != kUndefined && leq(x, a) && leq(x, b) && !leq(x, lo)) lo = kUndefined;
        if (hi != kUndefined && leq(a, x) && leq(b, x) && !leq(hi, x)) hi = kUndefined;
      }
      meet_[index(a, b)] = lo;
      join_[index(a, b)] = hi;
      if (lo == kUndefined || hi == kUndefined) is_lattice_ = false;
    }
  }
}

AxiomReport validate_orthoposet(const FiniteOrthoposet& p, Exec exec) {
  AxiomReport report;
  const int n = p.size();
  auto flag = [&report](Law law, std::initializer_list<Elem> witness) {
    report.violations.push_back({law, std::vector<Elem>(witness)});
  };

  for (Elem a = 0; a < n; ++a)
    if (!p.leq(a, a)) flag(Law::order, {a});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (a != b && p.leq(a, b) && p.leq(b, a)) flag(Law::order, {a, b});
  const auto nn = static_cast<std::size_t>(n);
  for (std::size_t i : scan_failures(nn * nn * nn, exec, [&p, n](std::size_t i) {
         const Elem a = static_cast<Elem>(i / (static_cast<std::size_t>(n) * n));
         const Elem b = static_cast<Elem>((i / static_cast<std::size_t>(n)) % n);
         const Elem c = static_cast<Elem>(i % static_cast<std::size_t>(n));
         return !(p.leq(a, b) && p.leq(b, c)) || p.leq(a, c);
       })) {
    flag(Law::order, {static_cast<Elem>(i / (nn * nn)), static_cast<Elem>((i / nn) % nn),
                      static_cast<Elem>(i % nn)});
  }
  for (Elem a = 0; a < n; ++a)
    if (!p.leq(p.bottom(), a) || !p.leq(a, p.top())) flag(Law::order, {a});

  for (Elem a = 0; a < n; ++a)
    if (p.ortho(p.ortho(a)) != a) flag(Law::involution, {a});

  for (std::size_t i : scan_failures(nn * nn, exec, [&p, n](std::size_t i) {
         const Elem a = static_cast<Elem>(i / static_cast<std::size_t>(n));
         const Elem b = static_cast<Elem>(i % static_cast<std::size_t>(n));
         return !p.leq(a, b) || p.leq(p.ortho(b), p.ortho(a));
       })) {
    flag(Law::antitone, {static_cast<Elem>(i / nn), static_cast<Elem>(i % nn)});
  }

  for (Elem a = 0; a < n; ++a) {
    const Elem lo = p.meet(a, p.ortho(a));
    const Elem hi = p.join(a, p.ortho(a));
    if (lo != kUndefined && lo != p.bottom()) flag(Law::complement, {a});
    else if (hi != kUndefined && hi != p.top()) flag(Law::complement, {a});
  }
  return report;
}

OrthomodularResult is_orthomodular(const FiniteOrthoposet& p, Exec exec) {
  if (!p.is_lattice())
    throw std::invalid_argument("is_orthomodular: '" + p.name() + "' is not a lattice");
  const auto n = static_cast<std::size_t>(p.size());
  auto hit = first_failure(n * n, exec, [&p, n](std::size_t i) {
    const Elem x = static_cast<Elem>(i / n);
    const Elem y = static_cast<Elem>(i % n);
    return !p.leq(x, y) || x == p.meet(y, p.join(x, p.ortho(y)));
  });
  if (!hit) return {};
  return {false, static_cast<Elem>(*hit / n), static_cast<Elem>(*hit % n)};
}

Elem sasaki_from_lattice(const FiniteOrthoposet& p, Elem a, Elem b) {
  if (!p.is_lattice())
    throw std::invalid_argument("sasaki_from_lattice: '" + p.name() + "' is not a lattice");
  return p.meet(b, p.join(p.ortho(b), a));
}

SasakiTable derived_sasaki_table(const FiniteOrthoposet& p, Exec exec) {
  const auto n = static_cast<std::size_t>(p.size());
  SasakiTable table{p.size(), std::vector<Elem>(n * n, kUndefined)};
  for_each_index(n * n, exec, [&](std::size_t i) {
    table.values[i] = sasaki_from_lattice(p, static_cast<Elem>(i / n), static_cast<Elem>(i % n));
  });
  return table;
}

AxiomReport check_sasaki_axioms(const FiniteOrthoposet& p, const SasakiTable& table, Exec exec) {
  if (table.n != p.size())
    throw std::invalid_argument("check_sasaki_axioms: table size mismatch");
  AxiomReport report;
  const auto n = static_cast<std::size_t>(p.size());
  auto decode3 = [n](std::size_t i) {
    return std::array<Elem, 3>{static_cast<Elem>(i / (n * n)), static_cast<Elem>((i / n) % n),
                               static_cast<Elem>(i % n)};
  };

  for (std::size_t i : scan_failures(n * n * n, exec, [&, n](std::size_t i) {
         const Elem a = static_cast<Elem>(i / (n * n));
         const Elem b = static_cast<Elem>((i / n) % n);
         const Elem c = static_cast<Elem>(i % n);
         return !p.leq(a, b) || p.leq(table.at(a, c), table.at(b, c));
       })) {
    auto [a, b, c] = decode3(i);
    report.violations.push_back({Law::l_monotony, {a, b, c}});
  }

  for (std::size_t i : scan_failures(n * n, exec, [&, n](std::size_t i) {
         const Elem a = static_cast<Elem>(i / n);
         const Elem b = static_cast<Elem>(i % n);
         return p.leq(table.at(a, b), b);
       })) {
    report.violations.push_back({Law::r_reduction, {static_cast<Elem>(i / n), static_cast<Elem>(i % n)}});
  }

  for (std::size_t i : scan_failures(n * n, exec, [&, n](std::size_t i) {
         const Elem a = static_cast<Elem>(i / n);
         const Elem b = static_cast<Elem>(i % n);
         return !p.leq(a, b) || table.at(a, b) == a;
       })) {
    report.violations.push_back({Law::sasaki_orthomodularity, {static_cast<Elem>(i / n), static_cast<Elem>(i % n)}});
  }

  for (std::size_t i : scan_failures(n * n * n, exec, [&, n](std::size_t i) {
         const Elem a = static_cast<Elem>(i / (n * n));
         const Elem b = static_cast<Elem>((i / n) % n);
         const Elem c = static_cast<Elem>(i % n);
         return !p.leq(table.at(a, b), c) || p.leq(table.at(p.ortho(c), b), p.ortho(a));
       })) {
    auto [a, b, c] = decode3(i);
    report.violations.push_back({Law::galois, {a, b, c}});
  }
  return report;
}

Elem meet_from_sasaki(const FiniteOrthoposet& p, const SasakiTable& table, Elem a, Elem b) {
  return table.at(p.ortho(table.at(p.ortho(a), b)), b);
}

std::vector<std::pair<Elem, Elem>> meet_agreement_failures(const FiniteOrthoposet& p,
                                                           const SasakiTable& table, Exec exec) {
  const auto n = static_cast<std::size_t>(p.size());
  std::vector<std::pair<Elem, Elem>> out;
  for (std::size_t i : scan_failures(n * n, exec, [&, n](std::size_t i) {
         const Elem a = static_cast<Elem>(i / n);
         const Elem b = static_cast<Elem>(i % n);
         return meet_from_sasaki(p, table, a, b) == p.meet(a, b);
       })) {
    out.emplace_back(static_cast<Elem>(i / n), static_cast<Elem>(i % n));
  }
  return out;
}

AxiomReport sasaki_roundtrip_check(const FiniteOrthoposet& p, const SasakiTable& table, Exec exec) {
  AxiomReport report;
  const auto n = static_cast<std::size_t>(p.size());
  // Rebuild a & b as b ∧_& (b ∧_& a')' where ∧_& is the induced meet, then
  // compare with the table entry.
  for (std::size_t i : scan_failures(n * n, exec, [&, n](std::size_t i) {
         const Elem a = static_cast<Elem>(i / n);
         const Elem b = static_cast<Elem>(i % n);
         const Elem inner = meet_from_sasaki(p, table, b, p.ortho(a));
         return meet_from_sasaki(p, table, b, p.ortho(inner)) == table.at(a, b);
       })) {
    report.violations.push_back({Law::roundtrip, {static_cast<Elem>(i / n), static_cast<Elem>(i % n)}});
  }
  return report;
}

std::vector<Elem> generated_subalgebra(const FiniteOrthoposet& p, const std::vector<Elem>& seed,
                                       std::size_t cap) {
  std::vector<char> member(static_cast<std::size_t>(p.size()), 0);
  std::vector<Elem> work;
  auto add = [&](Elem e) {
    if (e == kUndefined || member[static_cast<std::size_t>(e)]) return;
    member[static_cast<std::size_t>(e)] = 1;
    work.push_back(e);
  };
  add(p.bottom());
  add(p.top());
  for (Elem e : seed) add(e);
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (work.size() > cap)
      throw ClosureCapExceeded("generated subalgebra exceeds " + std::to_string(cap) + " elements");
    const Elem a = work[i];
    add(p.ortho(a));
    for (std::size_t j = 0; j <= i; ++j) {
      add(p.meet(a, work[j]));
      add(p.join(a, work[j]));
    }
  }
  std::sort(work.begin(), work.end());
  return work;
}

bool is_distributive_subset(const FiniteOrthoposet& p, const std::vector<Elem>& elems) {
  for (Elem a : elems)
    for (Elem b : elems)
      for (Elem c : elems)
        if (p.meet(a, p.join(b, c)) != p.join(p.meet(a, b), p.meet(a, c))) return false;
  return true;
}

bool is_distributive(const FiniteOrthoposet& p) {
  std::vector<Elem> all(static_cast<std::size_t>(p.size()));
  for (Elem a = 0; a < p.size(); ++a) all[static_cast<std::size_t>(a)] = a;
  return is_distributive_subset(p, all);
}

bool compatible(const FiniteOrthoposet& p, Elem x, Elem y, std::size_t cap) {
  if (!p.is_lattice())
    throw std::invalid_argument("compatible: '" + p.name() + "' is not a lattice");
  return is_distributive_subset(p, generated_subalgebra(p, {x, y}, cap));
}

namespace {
void require_lattice(const FiniteOrthoposet& p, const char* op) {
  if (!p.is_lattice())
    throw std::invalid_argument(std::string(op) + ": '" + p.name() + "' is not a lattice");
}
}  // namespace

Elem commutator(const FiniteOrthoposet& p, Elem x, Elem y) {
  require_lattice(p, "commutator");
  return p.join(p.meet(x, y), p.meet(x, p.ortho(y)));
}

Elem pi(const FiniteOrthoposet& p, Elem x, Elem y) {
  require_lattice(p, "pi");
  return p.meet(p.join(y, x), p.join(y, p.ortho(x)));
}

std::optional<PiViolation> pi_law_violation(const FiniteOrthoposet& p, Exec exec, std::size_t cap) {
  require_lattice(p, "pi_law_violation");
  const auto n = static_cast<std::size_t>(p.size());
  auto hit = first_failure(n * n, exec, [&, n](std::size_t i) {
    const Elem x = static_cast<Elem>(i / n);
    const Elem y = static_cast<Elem>(i % n);
    const Elem px_y = pi(p, x, y);
    if (!p.leq(y, px_y)) return false;
    if (!compatible(p, x, px_y, cap)) return false;
    for (Elem t = 0; t < p.size(); ++t)
      if (p.leq(y, t) && compatible(p, x, t, cap) && !p.leq(px_y, t)) return false;
    return p.meet(px_y, x) == p.meet(p.join(y, p.ortho(x)), x) &&
           p.meet(px_y, x) == sasaki_from_lattice(p, y, x);
  });
  if (!hit) return std::nullopt;
  // Re-run the failing pair serially to name the clause and the witness t.
  const Elem x = static_cast<Elem>(*hit / n);
  const Elem y = static_cast<Elem>(*hit % n);
  const Elem px_y = pi(p, x, y);
  if (!p.leq(y, px_y)) return PiViolation{1, x, y, kUndefined};
  if (!compatible(p, x, px_y, cap)) return PiViolation{2, x, y, kUndefined};
  for (Elem t = 0; t < p.size(); ++t)
    if (p.leq(y, t) && compatible(p, x, t, cap) && !p.leq(px_y, t)) return PiViolation{3, x, y, t};
  return PiViolation{4, x, y, kUndefined};
}

std::optional<std::array<Elem, 3>> galois_biconditional_violation(const FiniteOrthoposet& p,
                                                                  Exec exec) {
  require_lattice(p, "galois_biconditional_violation");
  const auto n = static_cast<std::size_t>(p.size());
  auto hit = first_failure(n * n * n, exec, [&, n](std::size_t i) {
    const Elem a = static_cast<Elem>(i / (n * n));
    const Elem b = static_cast<Elem>((i / n) % n);
    const Elem c = static_cast<Elem>(i % n);
    const bool lower = p.leq(p.meet(b, p.join(p.ortho(b), a)), c);
    const bool upper = p.leq(a, p.join(p.ortho(b), p.meet(b, c)));
    return lower == upper;
  });
  if (!hit) return std::nullopt;
  return std::array<Elem, 3>{static_cast<Elem>(*hit / (n * n)), static_cast<Elem>((*hit / n) % n),
                             static_cast<Elem>(*hit % n)};
}

std::optional<std::array<Elem, 3>> pi_galois_violation(const FiniteOrthoposet& p, Exec exec) {
  require_lattice(p, "pi_galois_violation");
  const auto n = static_cast<std::size_t>(p.size());
  auto hit = first_failure(n * n * n, exec, [&, n](std::size_t i) {
    const Elem x = static_cast<Elem>(i / (n * n));
    const Elem y = static_cast<Elem>((i / n) % n);
    const Elem z = static_cast<Elem>(i % n);
    return !p.leq(p.meet(pi(p, x, y), x), z) ||
           p.leq(p.meet(pi(p, x, p.ortho(z)), x), p.ortho(y));
  });
  if (!hit) return std::nullopt;
  return std::array<Elem, 3>{static_cast<Elem>(*hit / (n * n)), static_cast<Elem>((*hit / n) % n),
                             static_cast<Elem>(*hit % n)};
}

std::optional<std::array<Elem, 2>> comparable_compatible_violation(const FiniteOrthoposet& p,
                                                                   Exec exec, std::size_t cap) {
  require_lattice(p, "comparable_compatible_violation");
  const auto n = static_cast<std::size_t>(p.size());
  auto hit = first_failure(n * n, exec, [&, n](std::size_t i) {
    const Elem x = static_cast<Elem>(i / n);
    const Elem y = static_cast<Elem>(i % n);
    return !p.leq(x, y) || compatible(p, x, y, cap);
  });
  if (!hit) return std::nullopt;
  return std::array<Elem, 2>{static_cast<Elem>(*hit / n), static_cast<Elem>(*hit % n)};
}

// ---- built-in structures ---------------------------------------------------

FiniteOrthoposet boolean_algebra(int atom_count) {
  static const char kLetters[] = "pqrstuvwxyz";
  if (atom_count < 1 || atom_count > 11)
    throw std::invalid_argument("boolean_algebra: atom count must be in [1, 11]");
  const int n = 1 << atom_count;
  const unsigned full = static_cast<unsigned>(n - 1);
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (unsigned mask = 0; mask < static_cast<unsigned>(n); ++mask) {
    if (mask == 0) {
      names[mask] = "0";
    } else if (mask == full) {
      names[mask] = "1";
    } else {
      std::string s;
      for (int bit = 0; bit < atom_count; ++bit)
        if (mask & (1u << bit)) s += kLetters[bit];
      names[mask] = std::move(s);
    }
  }
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<Elem> ortho(static_cast<std::size_t>(n));
  for (unsigned a = 0; a < static_cast<unsigned>(n); ++a) {
    ortho[a] = static_cast<Elem>(full & ~a);
    for (unsigned b = 0; b < static_cast<unsigned>(n); ++b)
      leq[static_cast<std::size_t>(a) * n + b] = (a & ~b) == 0 ? 1 : 0;
  }
  return FiniteOrthoposet("b" + std::to_string(atom_count), std::move(names), std::move(leq),
                          std::move(ortho), 0, static_cast<Elem>(full));
}

FiniteOrthoposet mo(int block_count) {
  if (block_count < 1 || block_count > 512)
    throw std::invalid_argument("mo: block count must be in [1, 512]");
  const int n = 2 * block_count + 2;
  const Elem bottom = 0;
  const Elem top = n - 1;
  std::vector<std::string> names(static_cast<std::size_t>(n));
  names[static_cast<std::size_t>(bottom)] = "0";
  names[static_cast<std::size_t>(top)] = "1";
  std::vector<Elem> ortho(static_cast<std::size_t>(n));
  ortho[static_cast<std::size_t>(bottom)] = top;
  ortho[static_cast<std::size_t>(top)] = bottom;
  for (int blk = 1; blk <= block_count; ++blk) {
    const Elem x = 2 * blk - 1;
    const Elem xo = 2 * blk;
    names[static_cast<std::size_t>(x)] = "x" + std::to_string(blk);
    names[static_cast<std::size_t>(xo)] = "x" + std::to_string(blk) + "'";
    ortho[static_cast<std::size_t>(x)] = xo;
    ortho[static_cast<std::size_t>(xo)] = x;
  }
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (Elem a = 0; a < n; ++a) {
    leq[static_cast<std::size_t>(a) * n + a] = 1;
    leq[static_cast<std::size_t>(bottom) * n + a] = 1;
    leq[static_cast<std::size_t>(a) * n + top] = 1;
  }
  return FiniteOrthoposet("mo" + std::to_string(block_count), std::move(names), std::move(leq),
                          std::move(ortho), bottom, top);
}

FiniteOrthoposet o6() {
  // 0 < a < b < 1 on one side, 0 < b' < a' < 1 on the other.
  const std::vector<std::string> names = {"0", "a", "b", "b'", "a'", "1"};
  const int n = 6;
  std::vector<std::uint8_t> leq(n * n, 0);
  auto set = [&leq](Elem a, Elem b) { leq[static_cast<std::size_t>(a) * 6 + b] = 1; };
  for (Elem a = 0; a < n; ++a) {
    set(a, a);
    set(0, a);
    set(a, 5);
  }
  set(1, 2);  // a ≤ b
  set(3, 4);  // b' ≤ a'
  const std::vector<Elem> ortho = {5, 4, 3, 2, 1, 0};
  return FiniteOrthoposet("o6", names, std::move(leq), ortho, 0, 5);
}

FiniteOrthoposet product(const FiniteOrthoposet& p, const FiniteOrthoposet& q) {
  const int np = p.size();
  const int nq = q.size();
  const int n = np * nq;
  std::vector<std::string> names(static_cast<std::size_t>(n));
  std::vector<Elem> ortho(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  auto id = [nq](Elem i, Elem j) { return i * nq + j; };
  for (Elem i = 0; i < np; ++i) {
    for (Elem j = 0; j < nq; ++j) {
      names[static_cast<std::size_t>(id(i, j))] = "(" + p.element_name(i) + "," + q.element_name(j) + ")";
      ortho[static_cast<std::size_t>(id(i, j))] = id(p.ortho(i), q.ortho(j));
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      leq[static_cast<std::size_t>(a) * n + b] =
          (p.leq(a / nq, b / nq) && q.leq(a % nq, b % nq)) ? 1 : 0;
  return FiniteOrthoposet(p.name() + "x" + q.name(), std::move(names), std::move(leq),
                          std::move(ortho), id(p.bottom(), q.bottom()), id(p.top(), q.top()));
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> kNames = {"b1",  "b2",  "b3",  "b4",    "mo2",
                                                  "mo3", "mo4", "o6",  "mo2xb1"};
  return kNames;
}

FiniteOrthoposet catalog_model(const std::string& name) {
  if (name == "b1") return boolean_algebra(1);
  if (name == "b2") return boolean_algebra(2);
  if (name == "b3") return boolean_algebra(3);
  if (name == "b4") return boolean_algebra(4);
  if (name == "mo2") return mo(2);
  if (name == "mo3") return mo(3);
  if (name == "mo4") return mo(4);
  if (name == "o6") return o6();
  if (name == "mo2xb1") return product(mo(2), boolean_algebra(1));
  throw std::invalid_argument("unknown catalog model '" + name + "'");
}

}  // namespace solq
