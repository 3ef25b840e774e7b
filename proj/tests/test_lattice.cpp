#include <algorithm>
#include <vector>

#include "doctest.h"
#include "solq/lattice.hpp"

using solq::Elem;
using solq::FiniteOrthoposet;
using solq::kUndefined;
using solq::Law;

namespace {

// b2's order relation and names, for building deliberately broken variants.
FiniteOrthoposet four_element(std::vector<Elem> ortho) {
  std::vector<std::uint8_t> leq(16, 0);
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) leq[a * 4 + b] = (a & ~b) == 0 ? 1 : 0;
  return FiniteOrthoposet("four", {"0", "p", "q", "1"}, std::move(leq), std::move(ortho), 0, 3);
}

// Six elements with 0 < {a,b} < {c,d} < 1: join(a,b) and meet(c,d) have two
// incomparable minimal upper / maximal lower bounds, so this is not a lattice.
FiniteOrthoposet hexagon_non_lattice() {
  const int n = 6;  // 0, a, b, c, d, 1
  std::vector<std::uint8_t> leq(36, 0);
  auto set = [&leq](Elem x, Elem y) { leq[static_cast<std::size_t>(x) * 6 + y] = 1; };
  for (Elem x = 0; x < n; ++x) {
    set(x, x);
    set(0, x);
    set(x, 5);
  }
  set(1, 3);
  set(1, 4);
  set(2, 3);
  set(2, 4);
  return FiniteOrthoposet("hex", {"0", "a", "b", "c", "d", "1"}, std::move(leq), {5, 2, 1, 4, 3, 0},
                          0, 5);
}

bool has_violation(const solq::AxiomReport& report, Law law, const std::vector<Elem>& witness) {
  return std::any_of(report.violations.begin(), report.violations.end(),
                     [&](const solq::Violation& v) { return v.law == law && v.witness == witness; });
}

const solq::Violation* first_of(const solq::AxiomReport& report, Law law) {
  for (const solq::Violation& v : report.violations)
    if (v.law == law) return &v;
  return nullptr;
}

}  // namespace

TEST_CASE("catalog entries have the documented sizes") {
  CHECK(solq::catalog_names() == std::vector<std::string>{"b1", "b2", "b3", "b4", "mo2", "mo3",
                                                          "mo4", "o6", "mo2xb1"});
  CHECK(solq::catalog_model("b1").size() == 2);
  CHECK(solq::catalog_model("b2").size() == 4);
  CHECK(solq::catalog_model("b3").size() == 8);
  CHECK(solq::catalog_model("b4").size() == 16);
  CHECK(solq::catalog_model("mo2").size() == 6);
  CHECK(solq::catalog_model("mo3").size() == 8);
  CHECK(solq::catalog_model("mo4").size() == 10);
  CHECK(solq::catalog_model("o6").size() == 6);
  CHECK(solq::catalog_model("mo2xb1").size() == 12);
  CHECK_THROWS_AS(solq::catalog_model("zzz"), std::invalid_argument);
  CHECK_THROWS_AS(solq::boolean_algebra(0), std::invalid_argument);
  CHECK_THROWS_AS(solq::boolean_algebra(12), std::invalid_argument);
  CHECK_THROWS_AS(solq::mo(0), std::invalid_argument);
}

TEST_CASE("every catalog entry is a valid ortholattice") {
  for (const std::string& name : solq::catalog_names()) {
    const FiniteOrthoposet p = solq::catalog_model(name);
    CAPTURE(name);
    CHECK(solq::validate_orthoposet(p).ok());
    CHECK(p.is_lattice());
    CHECK(p.leq(p.bottom(), p.top()));
  }
}

TEST_CASE("constructor rejects malformed inputs") {
  CHECK_THROWS_AS(FiniteOrthoposet("x", {"0", "1"}, {1, 1, 0}, {1, 0}, 0, 1),
                  std::invalid_argument);  // relation not n×n
  CHECK_THROWS_AS(FiniteOrthoposet("x", {"0", "1"}, {1, 1, 0, 1}, {1}, 0, 1),
                  std::invalid_argument);  // ortho map too small
  CHECK_THROWS_AS(FiniteOrthoposet("x", {"0", "1"}, {1, 1, 0, 1}, {1, 2}, 0, 1),
                  std::invalid_argument);  // ortho image out of range
  CHECK_THROWS_AS(FiniteOrthoposet("x", {"0", "0"}, {1, 1, 0, 1}, {1, 0}, 0, 1),
                  std::invalid_argument);  // duplicate names
  CHECK_THROWS_AS(FiniteOrthoposet("x", {"0", "1"}, {1, 1, 0, 1}, {1, 0}, 0, 2),
                  std::invalid_argument);  // top out of range
}

TEST_CASE("element names resolve both ways") {
  const FiniteOrthoposet b2 = solq::boolean_algebra(2);
  CHECK(b2.element_name(0) == "0");
  CHECK(b2.element_name(1) == "p");
  CHECK(b2.element_name(2) == "q");
  CHECK(b2.element_name(3) == "1");
  CHECK(b2.element_by_name("q") == Elem{2});
  CHECK(!b2.element_by_name("nope").has_value());
  const FiniteOrthoposet prod = solq::catalog_model("mo2xb1");
  CHECK(prod.element_by_name("(x1,0)").has_value());
  CHECK(prod.name() == "mo2xb1");
}

TEST_CASE("meets and joins match hand computations") {
  const FiniteOrthoposet b2 = solq::boolean_algebra(2);
  const Elem p = *b2.element_by_name("p"), q = *b2.element_by_name("q");
  CHECK(b2.meet(p, q) == b2.bottom());
  CHECK(b2.join(p, q) == b2.top());
  CHECK(b2.meet(p, b2.top()) == p);

  const FiniteOrthoposet m = solq::mo(2);
  const Elem x1 = *m.element_by_name("x1"), x2 = *m.element_by_name("x2");
  CHECK(m.join(x1, x2) == m.top());
  CHECK(m.meet(x1, x2) == m.bottom());
  CHECK(m.meet(x1, x1) == x1);
  CHECK(m.join(x1, *m.element_by_name("x1'")) == m.top());
}

TEST_CASE("De Morgan holds in every catalog entry") {
  for (const std::string& name : solq::catalog_names()) {
    const FiniteOrthoposet p = solq::catalog_model(name);
    CAPTURE(name);
    for (Elem a = 0; a < p.size(); ++a)
      for (Elem b = 0; b < p.size(); ++b) {
        CHECK(p.ortho(p.meet(a, b)) == p.join(p.ortho(a), p.ortho(b)));
        CHECK(p.ortho(p.join(a, b)) == p.meet(p.ortho(a), p.ortho(b)));
      }
  }
}

TEST_CASE("a non-lattice is detected and bound-dependent queries refuse it") {
  const FiniteOrthoposet hex = hexagon_non_lattice();
  CHECK(!hex.is_lattice());
  CHECK(hex.join(1, 2) == kUndefined);
  CHECK(hex.meet(3, 4) == kUndefined);
  CHECK(hex.meet(1, 3) == 1);
  CHECK_THROWS_AS(solq::is_orthomodular(hex), std::invalid_argument);
  CHECK_THROWS_AS(solq::compatible(hex, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(solq::pi(hex, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(solq::sasaki_from_lattice(hex, 1, 2), std::invalid_argument);
}

TEST_CASE("a broken involution is reported element by element") {
  const solq::AxiomReport report = solq::validate_orthoposet(four_element({3, 3, 1, 0}));
  CHECK(!report.ok());
  CHECK(has_violation(report, Law::involution, {1}));
  CHECK(has_violation(report, Law::involution, {2}));
  const solq::Violation* first = first_of(report, Law::involution);
  REQUIRE(first != nullptr);
  CHECK(first->witness == std::vector<Elem>{1});
}

TEST_CASE("a broken complement is reported") {
  // ortho = identity on the atoms: p ∧ p' = p ≠ 0.
  const solq::AxiomReport report = solq::validate_orthoposet(four_element({3, 1, 2, 0}));
  CHECK(!report.ok());
  CHECK(has_violation(report, Law::complement, {1}));
}

TEST_CASE("orthomodularity holds on the OML entries and fails on o6") {
  for (const std::string name : {"b1", "b2", "b3", "b4", "mo2", "mo3", "mo4", "mo2xb1"}) {
    CAPTURE(name);
    CHECK(solq::is_orthomodular(solq::catalog_model(name)).ok);
  }
  const FiniteOrthoposet o = solq::o6();
  const solq::OrthomodularResult r = solq::is_orthomodular(o);
  REQUIRE(!r.ok);
  CHECK(r.x == 1);  // a
  CHECK(r.y == 2);  // b
  // The witness really does violate the law: x ≤ y but y ∧ (x ∨ y') ≠ x.
  CHECK(o.leq(r.x, r.y));
  CHECK(o.meet(r.y, o.join(r.x, o.ortho(r.y))) != r.x);
}

TEST_CASE("the derived Sasaki table matches hand values on mo2") {
  const FiniteOrthoposet m = solq::mo(2);
  const Elem x1 = 1, x1o = 2, x2 = 3;
  CHECK(solq::sasaki_from_lattice(m, x1, x2) == x2);       // different blocks: a & b = b
  CHECK(solq::sasaki_from_lattice(m, x1, x1o) == m.bottom());  // x & x' = 0
  CHECK(solq::sasaki_from_lattice(m, x1, x1) == x1);
  CHECK(solq::sasaki_from_lattice(m, m.top(), x2) == x2);
  CHECK(solq::sasaki_from_lattice(m, x1, m.top()) == x1);
  const solq::SasakiTable t = solq::derived_sasaki_table(m);
  CHECK(t.at(x1, x2) == x2);
  CHECK(solq::check_sasaki_axioms(m, t).ok());
}

TEST_CASE("the o6 table violates Orthomodularity") {
  const FiniteOrthoposet o = solq::o6();
  const solq::SasakiTable t = solq::derived_sasaki_table(o);
  const solq::AxiomReport report = solq::check_sasaki_axioms(o, t);
  CHECK(!report.ok());
  const solq::Violation* v = first_of(report, Law::sasaki_orthomodularity);
  REQUIRE(v != nullptr);
  CHECK(v->witness == std::vector<Elem>{1, 2});
}

TEST_CASE("a join table fails R-Reduction with a named witness") {
  const FiniteOrthoposet b2 = solq::boolean_algebra(2);
  solq::SasakiTable joins{4, std::vector<Elem>(16)};
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) joins.at(a, b) = b2.join(a, b);
  const solq::AxiomReport report = solq::check_sasaki_axioms(b2, joins);
  CHECK(!report.ok());
  const solq::Violation* v = first_of(report, Law::r_reduction);
  REQUIRE(v != nullptr);
  CHECK(v->witness == std::vector<Elem>{1, 0});  // p ∨ 0 = p ≰ 0
}

TEST_CASE("meet_from_sasaki recovers the order-theoretic meet") {
  const FiniteOrthoposet m = solq::mo(2);
  const solq::SasakiTable mt = solq::derived_sasaki_table(m);
  CHECK(solq::meet_from_sasaki(m, mt, 1, 3) == m.bottom());  // different blocks
  CHECK(solq::meet_agreement_failures(m, mt).empty());
  const FiniteOrthoposet b3 = solq::boolean_algebra(3);
  const solq::SasakiTable bt = solq::derived_sasaki_table(b3);
  for (Elem a = 0; a < b3.size(); ++a)
    for (Elem b = 0; b < b3.size(); ++b)
      CHECK(solq::meet_from_sasaki(b3, bt, a, b) == b3.meet(a, b));
}

TEST_CASE("the roundtrip reconstruction flags a single corrupted entry") {
  const FiniteOrthoposet m = solq::mo(2);
  solq::SasakiTable t = solq::derived_sasaki_table(m);
  CHECK(solq::sasaki_roundtrip_check(m, t).ok());
  t.at(1, 3) = m.top();  // corrupt x1 & x2
  const solq::AxiomReport report = solq::sasaki_roundtrip_check(m, t);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].law == Law::roundtrip);
  CHECK(report.violations[0].witness == std::vector<Elem>{1, 3});
}

TEST_CASE("generated subalgebras close under the three operations") {
  const FiniteOrthoposet m = solq::mo(2);
  CHECK(solq::generated_subalgebra(m, {1, 2}) == std::vector<Elem>{0, 1, 2, 5});
  CHECK(solq::generated_subalgebra(m, {1, 3}) == std::vector<Elem>{0, 1, 2, 3, 4, 5});
  CHECK(solq::generated_subalgebra(m, {}) == std::vector<Elem>{0, 5});
  const FiniteOrthoposet b3 = solq::boolean_algebra(3);
  CHECK(solq::generated_subalgebra(b3, {1}) == std::vector<Elem>{0, 1, 6, 7});
  CHECK_THROWS_AS(solq::generated_subalgebra(m, {1, 3}, 3), solq::ClosureCapExceeded);
}

TEST_CASE("compatibility distinguishes blocks in mo2") {
  const FiniteOrthoposet m = solq::mo(2);
  const Elem x1 = 1, x1o = 2, x2 = 3, x2o = 4;
  CHECK(solq::compatible(m, x1, x1o));
  CHECK(!solq::compatible(m, x1, x2));
  CHECK(!solq::compatible(m, x1, x2o));
  CHECK(!solq::compatible(m, x1o, x2));
  CHECK(solq::compatible(m, x1, m.top()));
  CHECK(solq::compatible(m, x1, m.bottom()));
  const FiniteOrthoposet b2 = solq::boolean_algebra(2);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) CHECK(solq::compatible(b2, a, b));
}

TEST_CASE("the commutator agrees with subalgebra compatibility on OMLs") {
  for (const std::string name : {"b2", "mo2", "mo3", "mo2xb1"}) {
    const FiniteOrthoposet p = solq::catalog_model(name);
    CAPTURE(name);
    for (Elem x = 0; x < p.size(); ++x)
      for (Elem y = 0; y < p.size(); ++y)
        CHECK(solq::compatible(p, x, y) == (solq::commutator(p, x, y) == x));
  }
}

TEST_CASE("pi projects onto the compatible cone") {
  const FiniteOrthoposet m = solq::mo(2);
  CHECK(solq::pi(m, 1, 3) == m.top());  // different blocks
  CHECK(solq::pi(m, 1, 0) == m.bottom());
  for (const std::string name : {"b1", "b2", "b3"}) {
    const FiniteOrthoposet b = solq::catalog_model(name);
    CAPTURE(name);
    for (Elem x = 0; x < b.size(); ++x) CHECK(b.meet(solq::pi(b, x, b.bottom()), x) == b.bottom());
  }
}

TEST_CASE("the pi laws and both Galois forms hold on spot-checked OMLs") {
  for (const std::string name : {"b2", "mo2", "mo2xb1"}) {
    const FiniteOrthoposet p = solq::catalog_model(name);
    CAPTURE(name);
    CHECK(!solq::pi_law_violation(p).has_value());
    CHECK(!solq::galois_biconditional_violation(p).has_value());
    CHECK(!solq::pi_galois_violation(p).has_value());
    CHECK(!solq::comparable_compatible_violation(p).has_value());
  }
}

TEST_CASE("o6 has a comparable pair that is not compatible") {
  const auto v = solq::comparable_compatible_violation(solq::o6());
  REQUIRE(v.has_value());
  CHECK((*v)[0] == 1);  // a
  CHECK((*v)[1] == 2);  // b
}

TEST_CASE("products are componentwise") {
  const FiniteOrthoposet prod = solq::catalog_model("mo2xb1");
  CHECK(prod.size() == 12);
  CHECK(solq::validate_orthoposet(prod).ok());
  CHECK(solq::is_orthomodular(prod).ok);
  CHECK(!solq::is_distributive(prod));
  const FiniteOrthoposet b1b1 = solq::product(solq::boolean_algebra(1), solq::boolean_algebra(1));
  CHECK(b1b1.size() == 4);
  CHECK(solq::is_distributive(b1b1));
  const Elem lo = *b1b1.element_by_name("(0,0)");
  CHECK(lo == b1b1.bottom());
}

TEST_CASE("distributivity separates Boolean algebras from the quantum entries") {
  CHECK(solq::is_distributive(solq::boolean_algebra(3)));
  CHECK(!solq::is_distributive(solq::mo(2)));
  CHECK(!solq::is_distributive(solq::o6()));
}
