#include <doctest.h>

#include <algorithm>

#include "kfib/verify.h"

using namespace kfib;

TEST_CASE("quick verification passes") {
  const auto results = verify::run_checks(verify::Level::Quick);
  CHECK(results.size() == 5);
  for (const auto& r : results) {
    INFO(r.id << ": " << r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("oracle check catches an off-by-one run bound") {
  // A DP that forbids runs of k+1 instead of k.
  auto mutated = [](int n, AvoidanceParams p) {
    OnesDistribution d = ones_distribution(n, AvoidanceParams(p.k() + 1));
    d.k = p.k();
    return d;
  };
  const auto r = verify::oracle_equivalence({2, 3}, 14, mutated);
  CHECK_FALSE(r.passed);
  CHECK(r.detail.find("mismatch") != std::string::npos);
}

TEST_CASE("checks report exceptions as failures") {
  // The reference limit table covers k = 2..13; k = 14 must fail cleanly.
  const auto r = verify::limit_table_reproduction(2, 14);
  CHECK_FALSE(r.passed);
}
