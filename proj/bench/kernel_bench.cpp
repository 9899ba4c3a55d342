// Times the serial reference kernels against their OpenMP counterparts.
//   kfib_bench [max_n]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "kfib/numerics.h"
#include "kfib/oracle.h"

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace kfib;
  const int max_n = argc > 1 ? std::atoi(argv[1]) : oracle::kMaxEnumerateLength;
  std::printf("threads: %d\n\n", omp_get_max_threads());

  std::printf("brute-force enumeration\n%4s %3s %12s %12s %8s %s\n", "n", "k", "serial [s]", "omp [s]", "speedup",
              "agree");
  for (int n = 16; n <= max_n; n += 2) {
    for (int k : {2, 4}) {
      const AvoidanceParams p(k);
      oracle::OracleResult a, b;
      const double ts = seconds([&] { a = oracle::enumerate_serial(n, p); });
      const double tp = seconds([&] { b = oracle::enumerate_parallel(n, p); });
      std::printf("%4d %3d %12.4f %12.4f %8.2f %s\n", n, k, ts, tp, ts / tp, a == b ? "yes" : "NO");
    }
  }

  std::printf("\nlimit table, k = 2..k_max at 50 digits\n%6s %12s %12s %8s\n", "k_max", "serial [s]", "omp [s]",
              "speedup");
  for (int k_max : {20, 40, 80}) {
    const double ts = seconds([&] { corollary_check_serial(k_max, 50); });
    const double tp = seconds([&] { corollary_check(k_max, 50); });
    std::printf("%6d %12.4f %12.4f %8.2f\n", k_max, ts, tp, ts / tp);
  }
  return 0;
}
