#pragma once

#include <string>

#include "kfib/verify.h"

namespace kfib::cli {

enum class Format { Plain, Csv, Json };

Format parse_format(const std::string& name);

/// A rendered command: text for stdout and the process exit code.
struct Output {
  std::string text;
  int exit_code = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

Output cmd_count(int k, long n, Format format);
Output cmd_popularity(int k, long n, Format format);
Output cmd_dist(int k, int n, Format format);
Output cmd_list(int k, int n, Format format);
Output cmd_table1(int k, int n_max, Format format);
Output cmd_limits(int k_min, int k_max, int digits, Format format);
Output cmd_alpha_series(int k, int n_max, int digits, Format format);
Output cmd_phi(int k, int digits, Format format);
Output cmd_roots(int k, Format format);
Output cmd_verify(verify::Level level, Format format);

/// Decimal form of an exact rational rounded to `digits` places, trailing
/// zeros dropped (0.5, 0.3125, 0.423076923076923).
std::string short_decimal(const ExactRational& x, int digits);

}  // namespace kfib::cli
