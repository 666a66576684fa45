// Serial vs OpenMP timings of the parallel kernels. Results are checked for
// equality before a timing is reported.

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>

#include "mfkit/catalog.hpp"
#include "mfkit/parse.hpp"
#include "mfkit/qdim.hpp"
#include "mfkit/search.hpp"

using namespace mfkit;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void report(const std::string& name, double serial, double parallel, bool agree) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(4) << std::setw(10)
            << serial << std::setw(10) << parallel << std::setw(9) << std::setprecision(2) << serial / parallel
            << (agree ? "" : "  MISMATCH") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::cout << "threads " << omp_get_max_threads() << ", reps " << reps << "\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(10) << "serial" << std::setw(10)
            << "openmp" << std::setw(9) << "speedup\n";
  session_calibration();

  QDimOptions serial, parallel;
  serial.kernel = Kernel::Serial;
  parallel.kernel = Kernel::Parallel;
  for (const char* f : {"x^3 + y^3", "x^4 + y^3 + z^2", "x^3 + x*y^3"}) {
    const MatrixFactorization k = knorrer_certificate(parse_polynomial(f, variables_of(f)));
    RawResidues a, b;
    const double ts = seconds([&] { a = raw_residues(k, serial); }, reps);
    const double tp = seconds([&] { b = raw_residues(k, parallel); }, reps);
    report(std::string("residues knorrer(") + f + ")", ts, tp,
           a.over_source == b.over_source && a.over_target == b.over_target);
  }

  for (const auto& [u, v] : std::vector<std::pair<std::string, std::string>>{{"x^3 + x*y^2", "u^6 + v^2"},
                                                                            {"x^2 + x*y^2", "u^4 + v^2"}}) {
    SearchRequest r;
    r.U = parse_polynomial(u, variables_of(u));
    r.V = parse_polynomial(v, variables_of(v));
    SearchOptions so;
    so.group_order_claim = 2;
    so.kernel = Kernel::Serial;
    SearchOptions po = so;
    po.kernel = Kernel::Parallel;
    SearchResult a, b;
    const double ts = seconds([&] { a = search(r, so); }, reps);
    const double tp = seconds([&] { b = search(r, po); }, reps);
    bool agree = a.solutions.size() == b.solutions.size();
    for (std::size_t i = 0; agree && i < a.solutions.size(); ++i) agree = a.solutions[i].d1 == b.solutions[i].d1;
    report("search " + v + " / " + u, ts, tp, agree);
  }

  CatalogOptions co;
  co.enable_external = true;
  const Catalog c = catalog_load(co);
  CatalogReport a, b;
  const double ts = seconds([&] { a = catalog_verify(c, false); }, reps);
  const double tp = seconds([&] { b = catalog_verify(c, true); }, reps);
  bool agree = a.rows.size() == b.rows.size();
  for (std::size_t i = 0; agree && i < a.rows.size(); ++i) agree = a.rows[i].status == b.rows[i].status;
  report("catalog verify (all pairs)", ts, tp, agree);
  return 0;
}
