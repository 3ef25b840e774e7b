// Micro-benchmark comparing the serial reference scans against the
// OpenMP-parallel ones on the heavy kernels: whole-table axiom checks,
// the projection/Galois triple scan, and a countermodel sweep over a
// generated sequent corpus.  Also cross-checks that both execution modes
// return identical results.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "solq/lattice.hpp"
#include "solq/proof.hpp"
#include "solq/semantics.hpp"
#include "solq/term.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
  const auto start = Clock::now();
  f();
  const auto stop = Clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-36s %10.1f ms %10.1f ms   x%-6.2f %s\n", name.c_str(), serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "match" : "MISMATCH");
}

void bench_axioms(const solq::FiniteOrthoposet& p) {
  solq::AxiomReport serial_report, parallel_report;
  solq::SasakiTable serial_table{0, {}}, parallel_table{0, {}};
  const double s = time_ms([&] {
    serial_table = solq::derived_sasaki_table(p, solq::Exec::serial);
    serial_report = solq::check_sasaki_axioms(p, serial_table, solq::Exec::serial);
  });
  const double par = time_ms([&] {
    parallel_table = solq::derived_sasaki_table(p, solq::Exec::parallel);
    parallel_report = solq::check_sasaki_axioms(p, parallel_table, solq::Exec::parallel);
  });
  const bool equal = serial_table.values == parallel_table.values &&
                     serial_report.ok() == parallel_report.ok();
  report("sasaki-axioms " + p.name() + " (n=" + std::to_string(p.size()) + ")", s, par, equal);
}

void bench_projection(const solq::FiniteOrthoposet& p) {
  std::optional<solq::PiViolation> serial_hit, parallel_hit;
  std::optional<std::array<solq::Elem, 3>> serial_galois, parallel_galois;
  const double s = time_ms([&] {
    serial_hit = solq::pi_law_violation(p, solq::Exec::serial);
    serial_galois = solq::pi_galois_violation(p, solq::Exec::serial);
  });
  const double par = time_ms([&] {
    parallel_hit = solq::pi_law_violation(p, solq::Exec::parallel);
    parallel_galois = solq::pi_galois_violation(p, solq::Exec::parallel);
  });
  const bool equal = serial_hit.has_value() == parallel_hit.has_value() &&
                     serial_galois == parallel_galois;
  report("projection-galois " + p.name() + " (n=" + std::to_string(p.size()) + ")", s, par, equal);
}

void bench_countermodel_sweep(int max_ops) {
  const std::vector<solq::Term> terms = solq::enumerate_terms({"a", "b"}, max_ops);
  std::vector<solq::Sequent> corpus;
  corpus.reserve(terms.size() * terms.size());
  for (const solq::Term& lhs : terms)
    for (const solq::Term& rhs : terms) corpus.push_back({lhs, rhs});

  const std::vector<std::shared_ptr<const solq::SasakiStructure>> structures =
      solq::build_catalog(solq::default_model_catalog(), solq::Exec::parallel);
  const auto sweep = [&](solq::Exec exec) {
    std::uint64_t found = 0, valuations = 0;
    for (const solq::Sequent& s : corpus) {
      const solq::CountermodelSearch r = solq::find_countermodel(s, structures, {}, exec);
      found += r.found ? 1 : 0;
      valuations += r.valuations_tried;
    }
    return std::pair{found, valuations};
  };
  std::pair<std::uint64_t, std::uint64_t> serial_counts, parallel_counts;
  const double s = time_ms([&] { serial_counts = sweep(solq::Exec::serial); });
  const double par = time_ms([&] { parallel_counts = sweep(solq::Exec::parallel); });
  report("countermodel-sweep (" + std::to_string(corpus.size()) + " sequents)", s, par,
         serial_counts == parallel_counts);
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;

  std::printf("%-36s %13s %13s %8s %s\n", "benchmark", "serial", "parallel", "speedup", "check");
  if (quick) {
    bench_axioms(solq::product(solq::mo(2), solq::boolean_algebra(2)));
    bench_projection(solq::product(solq::mo(2), solq::boolean_algebra(1)));
    bench_countermodel_sweep(1);
  } else {
    bench_axioms(solq::product(solq::mo(4), solq::boolean_algebra(4)));
    bench_projection(solq::product(solq::mo(3), solq::boolean_algebra(3)));
    bench_countermodel_sweep(2);
  }
  return 0;
}
