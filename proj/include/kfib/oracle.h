#pragma once

#include <string>
#include <vector>

#include "kfib/params.h"

namespace kfib::oracle {

/// Largest length accepted by enumerate(): 2^24 words.
inline constexpr int kMaxEnumerateLength = 24;
/// Largest length accepted by list_words().
inline constexpr int kMaxListLength = 16;

/// Tallies gathered by exhaustive enumeration of all 2^n words.
struct OracleResult {
  int n = 0;
  int k = 2;
  BigNat word_count;
  BigNat total_ones;
  std::vector<BigNat> distribution;  // indexed by number of ones, 0..n

  friend bool operator==(const OracleResult&, const OracleResult&) = default;
};

/// Brute force over every length-n word. Uses the parallel kernel.
OracleResult enumerate(int n, AvoidanceParams params);

/// Reference kernel: one thread, scans each word bit by bit tracking the
/// current run of ones.
OracleResult enumerate_serial(int n, AvoidanceParams params);

/// OpenMP kernel: detects a run of k ones with a shifted-AND mask and
/// merges per-thread histograms.
OracleResult enumerate_parallel(int n, AvoidanceParams params);

/// All avoiders of length n as 0/1 strings, lexicographically sorted.
std::vector<std::string> list_words(int n, AvoidanceParams params);

}  // namespace kfib::oracle
