#include "kfib/oracle.h"

#include <bit>
#include <cstdint>
#include <string>

namespace kfib::oracle {

namespace {

void check_budget(int n, int limit, const char* what) {
  require_length(n);
  if (n > limit) {
    throw BudgetExceeded(std::string(what) + ": n = " + std::to_string(n) +
                         " exceeds the brute-force budget of " + std::to_string(limit));
  }
}

OracleResult finish(int n, int k, const std::vector<std::uint64_t>& histogram) {
  OracleResult r;
  r.n = n;
  r.k = k;
  r.word_count = 0;
  r.total_ones = 0;
  r.distribution.reserve(histogram.size());
  for (std::size_t m = 0; m < histogram.size(); ++m) {
    BigNat c = static_cast<unsigned long>(histogram[m]);
    r.word_count += c;
    r.total_ones += c * static_cast<unsigned long>(m);
    r.distribution.push_back(std::move(c));
  }
  return r;
}

// Nonzero iff word has k consecutive ones.
inline std::uint32_t run_mask(std::uint32_t word, int k) {
  std::uint32_t m = word;
  for (int i = 1; i < k && m != 0; ++i) m &= word >> i;
  return m;
}

}  // namespace

OracleResult enumerate(int n, AvoidanceParams params) { return enumerate_parallel(n, params); }

OracleResult enumerate_serial(int n, AvoidanceParams params) {
  check_budget(n, kMaxEnumerateLength, "enumerate");
  const int k = params.k();
  std::vector<std::uint64_t> histogram(n + 1, 0);
  const std::uint64_t words = std::uint64_t{1} << n;
  for (std::uint64_t w = 0; w < words; ++w) {
    int run = 0;
    int ones = 0;
    bool ok = true;
    for (int bit = 0; bit < n; ++bit) {
      if ((w >> bit) & 1U) {
        ++ones;
        if (++run == k) {
          ok = false;
          break;
        }
      } else {
        run = 0;
      }
    }
    if (ok) ++histogram[ones];
  }
  return finish(n, k, histogram);
}

OracleResult enumerate_parallel(int n, AvoidanceParams params) {
  check_budget(n, kMaxEnumerateLength, "enumerate");
  const int k = params.k();
  std::vector<std::uint64_t> histogram(n + 1, 0);
  const std::int64_t words = std::int64_t{1} << n;

#pragma omp parallel
  {
    std::vector<std::uint64_t> local(n + 1, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t w = 0; w < words; ++w) {
      const auto word = static_cast<std::uint32_t>(w);
      if (run_mask(word, k) == 0) ++local[std::popcount(word)];
    }
#pragma omp critical
    for (int m = 0; m <= n; ++m) histogram[m] += local[m];
  }
  return finish(n, k, histogram);
}

std::vector<std::string> list_words(int n, AvoidanceParams params) {
  check_budget(n, kMaxListLength, "list_words");
  const int k = params.k();
  std::vector<std::string> out;
  const std::uint32_t words = std::uint32_t{1} << n;
  for (std::uint32_t w = 0; w < words; ++w) {
    if (run_mask(w, k) != 0) continue;
    std::string s(n, '0');
    for (int i = 0; i < n; ++i) {
      if ((w >> (n - 1 - i)) & 1U) s[i] = '1';
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace kfib::oracle
