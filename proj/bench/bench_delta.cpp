// Compares the serial and OpenMP delta-matrix kernels on the stage spaces
// used by the analyze pipeline, and reports the speedup. Matrices from both
// paths are compared entrywise; a mismatch aborts the run.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "stratcx/folan.hpp"
#include "stratcx/parallel.hpp"
#include "stratcx/pforms.hpp"

using namespace stratcx;

namespace {

template <typename F>
double time_of(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
  int r = 5;
  int d = 2;
  int e = 2;
  int reps = 3;
  if (argc > 1) r = std::atoi(argv[1]);
  if (argc > 2) d = std::atoi(argv[2]);
  if (argc > 3) e = std::atoi(argv[3]);
  if (argc > 4) reps = std::atoi(argv[4]);

  const auto w = pforms::random_form(r, 1, d, 12345);
  std::printf("delta-matrix kernel benchmark: r=%d d=%d e=%d, %d reps, %d thread(s)\n", r, d, e,
              reps, effective_threads());
  std::printf("%-28s %10s %10s %8s\n", "stage", "serial[s]", "openmp[s]", "speedup");

  for (int variant = 0; variant < 2; ++variant) {
    const int kmax = variant == 0 ? (r - 1) / 2 : r / 2;
    for (int k = 0; k + 1 <= kmax; ++k) {
      const int deg = variant == 0 ? 2 * k + 1 : 2 * k;
      const auto& source = pforms::basis(r, deg, e + k * d);
      const auto& target = pforms::basis(r, deg + 2, e + (k + 1) * d);
      if (source.dim() == 0 || target.dim() == 0) continue;

      QMatrix serial_out, parallel_out;
      double ts = 0;
      double tp = 0;
      for (int rep = 0; rep < reps; ++rep) {
        ts += time_of([&] { serial_out = pforms::delta_matrix_serial(w, source, target); });
        tp += time_of([&] { parallel_out = pforms::delta_matrix(w, source, target); });
      }
      if (!(serial_out == parallel_out)) {
        std::fprintf(stderr, "FATAL: serial and parallel kernels disagree\n");
        return 1;
      }
      char label[64];
      std::snprintf(label, sizeof label, "%s k=%d (%zux%zu)", variant == 0 ? "minus" : "plus",
                    deg, target.dim(), source.dim());
      std::printf("%-28s %10.4f %10.4f %8.2f\n", label, ts / reps, tp / reps,
                  tp > 0 ? ts / tp : 0.0);
    }
  }
  return 0;
}
