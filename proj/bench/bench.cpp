// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0
//
// Benchmark: the OpenMP-parallel assembly and sweep kernels against the
// single-thread path, on the same inputs. Reports the best wall time over a
// few repeats plus the parallel speedup, and cross-checks that both paths
// produce bitwise-identical results (the parallel kernels only distribute
// independent writes, so they must).

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "ptbox/assembler.hpp"
#include "ptbox/boxbasis.hpp"
#include "ptbox/matelem.hpp"
#include "ptbox/parallel.hpp"
#include "ptbox/pointgroup.hpp"
#include "ptbox/sweep.hpp"

using namespace ptbox;
using Clock = std::chrono::steady_clock;

namespace {

double best_of(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = Clock::now();
    fn();
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    best = std::min(best, ms);
  }
  return best;
}

void report(const std::string& name, double serial_ms, double parallel_ms,
            bool identical) {
  std::printf("%-34s %10.2f ms %10.2f ms %8.2fx   %s\n", name.c_str(),
              serial_ms, parallel_ms, serial_ms / parallel_ms,
              identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ptbox benchmark: serial vs parallel kernels"};
  int max_index = 24;
  int threads = 0;
  int repeats = 3;
  app.add_option("--max-index", max_index, "basis size per axis")
      ->check(CLI::Range(2, 1000));
  app.add_option("--threads", threads, "parallel thread count (0 = auto)");
  app.add_option("--repeats", repeats, "repeats per measurement (best is kept)")
      ->check(CLI::Range(1, 100));
  CLI11_PARSE(app, argc, argv);

  const int nthreads = resolve_threads(threads);
  std::printf("max_index = %d, parallel threads = %d, repeats = %d\n",
              max_index, nthreads, repeats);
  std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  const BasisSpec spec{max_index};
  const ElementTables tables(max_index);

  {
    const auto basis = build_basis(spec, {Group::C2v, Irrep::A1});
    Eigen::MatrixXd serial, parallel;
    const double ms1 = best_of(
        repeats, [&] { serial = coupling_matrix(basis, 1, 1, tables, 1); });
    const double msN = best_of(repeats, [&] {
      parallel = coupling_matrix(basis, 1, 1, tables, nthreads);
    });
    report("coupling_matrix A1 (x y)", ms1, msN,
           (serial - parallel).cwiseAbs().maxCoeff() == 0.0);
  }

  {
    HamiltonianBlock serial, parallel;
    const auto pot = PotentialSpec::xyy(1.0);
    const double ms1 = best_of(repeats, [&] {
      serial = assemble_block(spec, {Group::C2, Irrep::A}, pot, tables, 1);
    });
    const double msN = best_of(repeats, [&] {
      parallel =
          assemble_block(spec, {Group::C2, Irrep::A}, pot, tables, nthreads);
    });
    report("assemble_block A (x y^2)", ms1, msN,
           (serial.matrix - parallel.matrix).cwiseAbs().maxCoeff() == 0.0);
  }

  {
    SweepConfig cfg;
    cfg.a_min = 0.0;
    cfg.a_max = 10.0;
    cfg.step = 0.5;
    SweepResult serial, parallel;
    cfg.threads = 1;
    const double ms1 = best_of(
        repeats, [&] { serial = sweep(PotentialFamily::xy(), spec, cfg, tables); });
    cfg.threads = nthreads;
    const double msN = best_of(repeats, [&] {
      parallel = sweep(PotentialFamily::xy(), spec, cfg, tables);
    });
    bool identical = serial.a_values == parallel.a_values;
    if (identical)
      for (size_t k = 0; k < serial.levels.size() && identical; ++k)
        for (size_t b = 0; b < serial.levels[k].size() && identical; ++b)
          identical = (serial.levels[k][b] - parallel.levels[k][b])
                          .cwiseAbs()
                          .maxCoeff() == 0.0;
    report("sweep x y, a in [0, 10]", ms1, msN, identical);
  }

  return 0;
}
