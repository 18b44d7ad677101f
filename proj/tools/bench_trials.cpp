// Compares the plain serial trial loop against the OpenMP-parallel one on
// the same workload and confirms the two produce bit-identical reports.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef ORDMATCH_HAVE_OPENMP
#include <omp.h>
#endif

#include "ordmatch/generators.hpp"
#include "ordmatch/harness.hpp"

using namespace ordmatch;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool reports_identical(const TrialReport& a, const TrialReport& b) {
  return std::memcmp(&a.mean_weight, &b.mean_weight, sizeof(double)) == 0 &&
         std::memcmp(&a.std_err, &b.std_err, sizeof(double)) == 0 &&
         a.audit_max == b.audit_max && a.pass == b.pass;
}

}  // namespace

int main(int argc, char** argv) {
  int n = 20;
  int64_t trials = 200000;
  uint64_t seed = 1;
  int threads = 0;
#ifdef ORDMATCH_HAVE_OPENMP
  threads = omp_get_max_threads();
#else
  threads = 1;
#endif
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::strcmp(argv[i], "--n") == 0) n = std::atoi(argv[++i]);
    else if (std::strcmp(argv[i], "--trials") == 0) trials = std::atoll(argv[++i]);
    else if (std::strcmp(argv[i], "--seed") == 0) seed = std::strtoull(argv[++i], nullptr, 10);
    else if (std::strcmp(argv[i], "--threads") == 0) threads = std::atoi(argv[++i]);
  }

  Instance inst = gen_euclidean(n, 2, seed);
  struct Case {
    Algo algo;
    double alpha;
  } cases[] = {
      {Algo::rsd, 1.0},
      {Algo::rsd_partial, 0.5},
      {Algo::two_sided, 0.75},
      {Algo::total_order, 0.75},
  };

  std::printf("n=%d trials=%lld threads=%d\n", n, static_cast<long long>(trials),
              threads);
  std::printf("%-14s %10s %10s %8s %s\n", "algorithm", "serial(s)", "parallel(s)",
              "speedup", "identical");
  bool all_identical = true;
  for (const auto& c : cases) {
    auto t0 = std::chrono::steady_clock::now();
    auto serial = run_trials_serial(inst, c.algo, c.alpha, trials, seed);
    const double ts = seconds_since(t0);

    RunOptions opts;
    opts.threads = threads;
    t0 = std::chrono::steady_clock::now();
    auto parallel = run_trials(inst, c.algo, c.alpha, trials, seed, opts);
    const double tp = seconds_since(t0);

    const bool same = reports_identical(serial, parallel);
    all_identical = all_identical && same;
    std::printf("%-14s %10.3f %10.3f %7.2fx %s\n", to_string(c.algo).c_str(), ts,
                tp, tp > 0 ? ts / tp : 0.0, same ? "yes" : "NO");
  }
  if (!all_identical) {
    std::printf("mismatch between serial and parallel reports\n");
    return 1;
  }
  return 0;
}
