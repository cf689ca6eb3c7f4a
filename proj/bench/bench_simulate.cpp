// Micro-benchmark for the Monte Carlo engine: times the closed-form attack
// kernel (OpenMP across replications) against the serial per-citizen noise
// reference, and verifies that the two produce identical reports and that the
// kernel is bit-stable across thread counts.
//
//   rcg_bench [n_citizens] [n_replications]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rcg/simulate.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const Clock::time_point& a, const Clock::time_point& b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

bool same_report(const rcg::SimReport& a, const rcg::SimReport& b) {
  return std::memcmp(&a, &b, sizeof(rcg::SimReport)) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  rcg::SimConfig cfg;
  cfg.strength = 0.5;
  cfg.naive_cutoff = 0.0;
  cfg.comm = {0.1, 0.2};
  cfg.n_citizens = argc > 1 ? std::atoll(argv[1]) : 200000;
  cfg.n_replications = argc > 2 ? std::atoll(argv[2]) : 200;
  cfg.seed = 20260822;
  if (cfg.n_citizens <= 0 || cfg.n_replications <= 0) {
    std::fprintf(stderr, "usage: rcg_bench [n_citizens] [n_replications]\n");
    return 2;
  }

#ifdef _OPENMP
  const int max_threads = omp_get_max_threads();
#else
  const int max_threads = 1;
#endif

  // Warm-up, and the baseline for the equality checks.
  const rcg::SimReport kernel = rcg::run_simulation(cfg);

  const auto t0 = Clock::now();
  const rcg::SimReport kernel_again = rcg::run_simulation(cfg);
  const auto t1 = Clock::now();
  const rcg::SimReport reference = rcg::run_simulation_reference(cfg);
  const auto t2 = Clock::now();

#ifdef _OPENMP
  omp_set_num_threads(1);
#endif
  const auto t3 = Clock::now();
  const rcg::SimReport kernel_serial = rcg::run_simulation(cfg);
  const auto t4 = Clock::now();
#ifdef _OPENMP
  omp_set_num_threads(max_threads);
#endif

  const double kernel_ms = time_ms(t0, t1);
  const double reference_ms = time_ms(t1, t2);
  const double serial_ms = time_ms(t3, t4);

  std::printf("n=%lld reps=%lld threads=%d\n",
              static_cast<long long>(cfg.n_citizens),
              static_cast<long long>(cfg.n_replications), max_threads);
  std::printf("  %-28s %10.2f ms\n", "kernel (parallel)", kernel_ms);
  std::printf("  %-28s %10.2f ms\n", "kernel (1 thread)", serial_ms);
  std::printf("  %-28s %10.2f ms\n", "reference (serial)", reference_ms);
  std::printf("  parallel speedup over 1 thread: %.2fx\n",
              serial_ms / std::max(kernel_ms, 1e-9));
  std::printf("  kernel speedup over reference:  %.2fx\n",
              reference_ms / std::max(kernel_ms, 1e-9));

  if (!same_report(kernel, kernel_again)) {
    std::fprintf(stderr, "FAIL: kernel not deterministic across runs\n");
    return 1;
  }
  if (!same_report(kernel, kernel_serial)) {
    std::fprintf(stderr, "FAIL: kernel differs across thread counts\n");
    return 1;
  }
  if (!same_report(kernel, reference)) {
    std::fprintf(stderr, "FAIL: kernel and reference reports differ\n");
    return 1;
  }
  std::printf("  reports identical across paths and thread counts\n");
  return 0;
}
