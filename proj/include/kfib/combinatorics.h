#pragma once

#include <vector>

#include "kfib/params.h"

namespace kfib {

/// Number of length-n words with exactly m ones, for m = 0 .. n - floor(n/k).
struct OnesDistribution {
  int n = 0;
  int k = 2;
  std::vector<BigNat> counts;

  /// Largest admissible number of ones, n - floor(n/k).
  int max_ones() const noexcept { return n - n / k; }

  /// a_{n,m}; zero for m outside [0, max_ones()].
  BigNat at(int m) const;

  BigNat total() const;
  BigNat weighted_total() const;
};

/// Miles' k-step Fibonacci number f_{n,k}: 0 for n <= k-2, 1 at n = k-1,
/// otherwise the sum of the previous k terms.
BigNat kstep_fibonacci(long n, AvoidanceParams params);

/// |B_n(1^k)| = f_{n+k,k}.
BigNat count_words(long n, AvoidanceParams params);

/// Distribution of the number of ones over all length-n avoiders, by a DP
/// over the trailing run length (0 .. k-1), each state holding a polynomial
/// in the ones marker.
OnesDistribution ones_distribution(int n, AvoidanceParams params);

/// Total number of 1s over all words of B_n(1^k), by the O(n k) pair
/// recurrence on per-state (count, ones-sum).
BigNat popularity(long n, AvoidanceParams params);

/// Same quantity as popularity(), computed as sum_m m * a_{n,m}.
BigNat popularity_from_distribution(int n, AvoidanceParams params);

/// Expected value of a random bit in a random avoider of length n:
/// v_{n,k} / (n |B_n(1^k)|). Throws UndefinedValue for n = 0.
ExactRational alpha(long n, AvoidanceParams params);

}  // namespace kfib
