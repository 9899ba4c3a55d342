#include <doctest.h>

#include <string>

#include "kfib/combinatorics.h"
#include "kfib/oracle.h"

using namespace kfib;

namespace {

// Test-side brute force over strings, independent of both the DP and the
// library oracle's bit tricks.
struct Tally {
  long count = 0;
  long ones = 0;
};

Tally string_brute_force(int n, int k) {
  Tally t;
  const std::string run(k, '1');
  for (long w = 0; w < (1L << n); ++w) {
    std::string s;
    for (int i = n - 1; i >= 0; --i) s.push_back((w >> i) & 1 ? '1' : '0');
    if (s.find(run) != std::string::npos) continue;
    ++t.count;
    for (char c : s) t.ones += c == '1';
  }
  return t;
}

}  // namespace

TEST_CASE("k-step Fibonacci numbers") {
  CHECK(kstep_fibonacci(6, AvoidanceParams(2)) == 8);
  CHECK(kstep_fibonacci(1, AvoidanceParams(3)) == 0);
  CHECK(kstep_fibonacci(7, AvoidanceParams(3)) == 13);
  CHECK(kstep_fibonacci(2, AvoidanceParams(3)) == 1);
  CHECK(kstep_fibonacci(0, AvoidanceParams(2)) == 0);
  // Ordinary Fibonacci: F_30 = 832040.
  CHECK(kstep_fibonacci(30, AvoidanceParams(2)) == 832040);
  // Tribonacci with f_2 = 1: 0 0 1 1 2 4 7 13 24 44 81
  CHECK(kstep_fibonacci(10, AvoidanceParams(3)) == 81);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(AvoidanceParams(1), InvalidArgument);
  CHECK_THROWS_AS(AvoidanceParams(-3), InvalidArgument);
  CHECK_THROWS_AS(kstep_fibonacci(-1, AvoidanceParams(2)), InvalidArgument);
  CHECK_THROWS_AS(count_words(-1, AvoidanceParams(2)), InvalidArgument);
  CHECK_THROWS_AS(ones_distribution(-2, AvoidanceParams(2)), InvalidArgument);
}

TEST_CASE("count_words") {
  CHECK(count_words(4, AvoidanceParams(2)) == 8);
  CHECK(count_words(4, AvoidanceParams(3)) == 13);
  CHECK(count_words(0, AvoidanceParams(5)) == 1);

  const Tally t = string_brute_force(20, 4);
  CHECK(t.count == 547337);
  CHECK(count_words(20, AvoidanceParams(4)) == 547337);
}

TEST_CASE("large n does not overflow") {
  // f_{n,2} has about 0.69 n bits.
  const BigNat big = count_words(10000, AvoidanceParams(2));
  CHECK(mpz_sizeinbase(big.get_mpz_t(), 2) > 6900);
  CHECK(count_words(10000, AvoidanceParams(2)) ==
        count_words(9999, AvoidanceParams(2)) + count_words(9998, AvoidanceParams(2)));
}

TEST_CASE("ones_distribution") {
  CHECK(ones_distribution(4, AvoidanceParams(2)).counts == std::vector<BigNat>{1, 4, 3});
  CHECK(ones_distribution(5, AvoidanceParams(3)).counts == std::vector<BigNat>{1, 5, 10, 7, 1});
  CHECK(ones_distribution(0, AvoidanceParams(2)).counts == std::vector<BigNat>{1});

  SUBCASE("index range is n - floor(n/k)") {
    const OnesDistribution d = ones_distribution(9, AvoidanceParams(3));
    CHECK(d.max_ones() == 6);
    CHECK(d.counts.size() == 7);
    CHECK(d.at(6) == 10);
    CHECK(d.at(7) == 0);
    CHECK(d.at(-1) == 0);
  }
}

TEST_CASE("popularity and alpha") {
  CHECK(popularity(4, AvoidanceParams(2)) == 10);
  CHECK(popularity(4, AvoidanceParams(3)) == 22);
  CHECK(popularity(1, AvoidanceParams(2)) == 1);
  CHECK(popularity(0, AvoidanceParams(2)) == 0);

  CHECK(alpha(4, AvoidanceParams(2)) == ExactRational(5, 16));
  CHECK(alpha(1, AvoidanceParams(2)) == ExactRational(1, 2));
  CHECK_THROWS_AS(alpha(0, AvoidanceParams(2)), UndefinedValue);

  const Tally t12 = string_brute_force(12, 2);
  CHECK(t12.count == 377);
  CHECK(t12.ones == 1308);
  CHECK(alpha(12, AvoidanceParams(2)) == ExactRational(109, 377));
  CHECK(alpha(12, AvoidanceParams(3)) == ExactRational(1349, 3410));
}

TEST_CASE("agreement with brute force for n <= 20, k in 2..5") {
  for (int k = 2; k <= 5; ++k) {
    const AvoidanceParams p(k);
    for (int n = 0; n <= 20; ++n) {
      const auto o = oracle::enumerate(n, p);
      const OnesDistribution d = ones_distribution(n, p);
      CHECK(count_words(n, p) == o.word_count);
      CHECK(popularity(n, p) == o.total_ones);
      for (int m = 0; m <= n; ++m) CHECK(d.at(m) == o.distribution[m]);
    }
  }
}

TEST_CASE("distribution sums and the two popularity routes") {
  for (int k = 2; k <= 6; ++k) {
    const AvoidanceParams p(k);
    for (int n = 0; n <= 60; n += 3) {
      const OnesDistribution d = ones_distribution(n, p);
      CHECK(d.total() == count_words(n, p));
      CHECK(d.weighted_total() == popularity(n, p));
      CHECK(popularity_from_distribution(n, p) == popularity(n, p));
      CHECK(d.at(0) == 1);
      if (n >= 1) CHECK(d.at(1) == n);
      // Every index up to the bound is populated.
      for (const auto& c : d.counts) CHECK(c > 0);
    }
  }
}

TEST_CASE("monotone in k and bounded by 2^n") {
  for (int k = 2; k <= 8; ++k) {
    for (int n = 0; n <= 30; ++n) {
      const BigNat here = count_words(n, AvoidanceParams(k));
      const BigNat next = count_words(n, AvoidanceParams(k + 1));
      const BigNat all = BigNat(1) << n;
      CHECK(here <= next);
      CHECK(next <= all);
      CHECK((here == all) == (n < k));
    }
  }
}

TEST_CASE("alpha lies in (0, 1/2]") {
  const ExactRational half(1, 2);
  for (int k = 2; k <= 8; ++k) {
    const AvoidanceParams p(k);
    CHECK(alpha(1, p) == half);
    for (long n = 1; n <= 200; ++n) {
      const ExactRational a = alpha(n, p);
      CHECK(a > 0);
      CHECK(a <= half);
    }
  }
}
