#include "kfib/combinatorics.h"

#include <deque>
#include <string>
#include <utility>

namespace kfib {

namespace {

struct CountAndOnes {
  BigNat count;
  BigNat ones;
};

// Advances the run-length automaton n steps, tracking for every state the
// number of words ending there and the number of ones they carry.
CountAndOnes count_and_ones(long n, int k) {
  std::vector<BigNat> count(k), ones(k);
  std::vector<BigNat> next_count(k), next_ones(k);
  count[0] = 1;
  for (long step = 0; step < n; ++step) {
    next_count[0] = 0;
    next_ones[0] = 0;
    for (int j = 0; j < k; ++j) {
      next_count[0] += count[j];
      next_ones[0] += ones[j];
    }
    for (int j = 0; j + 1 < k; ++j) {
      next_count[j + 1] = count[j];
      next_ones[j + 1] = ones[j] + count[j];
    }
    std::swap(count, next_count);
    std::swap(ones, next_ones);
  }
  CountAndOnes out;
  for (int j = 0; j < k; ++j) {
    out.count += count[j];
    out.ones += ones[j];
  }
  return out;
}

}  // namespace

BigNat OnesDistribution::at(int m) const {
  if (m < 0 || m >= static_cast<int>(counts.size())) return 0;
  return counts[m];
}

BigNat OnesDistribution::total() const {
  BigNat s = 0;
  for (const auto& c : counts) s += c;
  return s;
}

BigNat OnesDistribution::weighted_total() const {
  BigNat s = 0;
  for (std::size_t m = 0; m < counts.size(); ++m) s += counts[m] * static_cast<unsigned long>(m);
  return s;
}

BigNat kstep_fibonacci(long n, AvoidanceParams params) {
  require_length(n);
  const long k = params.k();
  if (n <= k - 2) return 0;
  if (n == k - 1) return 1;

  // Sliding window over f_{i-k} .. f_{i-1}, with a running sum.
  std::deque<BigNat> window(k, BigNat(0));
  window.back() = 1;
  BigNat sum = 1;
  for (long i = k; i <= n; ++i) {
    BigNat next = sum;
    sum += next;
    sum -= window.front();
    window.pop_front();
    window.push_back(std::move(next));
  }
  return window.back();
}

BigNat count_words(long n, AvoidanceParams params) {
  require_length(n);
  return kstep_fibonacci(n + params.k(), params);
}

OnesDistribution ones_distribution(int n, AvoidanceParams params) {
  require_length(n);
  const int k = params.k();

  // state[j][m]: words ending in a run of exactly j ones, containing m ones.
  std::vector<std::vector<BigNat>> state(k, std::vector<BigNat>(n + 1));
  std::vector<std::vector<BigNat>> next(k, std::vector<BigNat>(n + 1));
  state[0][0] = 1;
  for (int len = 0; len < n; ++len) {
    for (auto& row : next)
      for (auto& v : row) v = 0;
    for (int j = 0; j < k; ++j) {
      for (int m = 0; m <= len; ++m) {
        const BigNat& c = state[j][m];
        if (c == 0) continue;
        next[0][m] += c;
        if (j + 1 < k) next[j + 1][m + 1] += c;
      }
    }
    std::swap(state, next);
  }

  OnesDistribution dist;
  dist.n = n;
  dist.k = k;
  dist.counts.assign(dist.max_ones() + 1, BigNat(0));
  for (int j = 0; j < k; ++j) {
    for (int m = 0; m <= n; ++m) {
      if (state[j][m] == 0) continue;
      // Unreachable by construction: at most n - floor(n/k) ones fit.
      if (m > dist.max_ones()) throw std::logic_error("ones count beyond admissible bound");
      dist.counts[m] += state[j][m];
    }
  }
  return dist;
}

BigNat popularity(long n, AvoidanceParams params) {
  require_length(n);
  return count_and_ones(n, params.k()).ones;
}

BigNat popularity_from_distribution(int n, AvoidanceParams params) {
  return ones_distribution(n, params).weighted_total();
}

ExactRational alpha(long n, AvoidanceParams params) {
  require_length(n);
  if (n == 0) {
    throw UndefinedValue("expected bit value is undefined at n = 0 (0/0)");
  }
  const CountAndOnes co = count_and_ones(n, params.k());
  return make_rational(co.ones, co.count * static_cast<unsigned long>(n));
}

}  // namespace kfib
