#include "kfib/verify.h"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "kfib/numerics.h"
#include "kfib/oracle.h"
#include "kfib/reference_data.h"
#include "kfib/roots.h"
#include "kfib/series.h"

namespace kfib::verify {

namespace {

template <class Body>
CheckResult timed(std::string id, std::string name, Body body) {
  CheckResult r{std::move(id), std::move(name), false, {}, 0.0};
  const auto start = std::chrono::steady_clock::now();
  try {
    std::ostringstream detail;
    r.passed = body(detail);
    r.detail = detail.str();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

bool triangle_matches(int k, const std::vector<std::vector<long>>& expected, std::ostream& detail) {
  const int columns = static_cast<int>(expected.front().size());
  for (int n = 1; n <= columns; ++n) {
    const OnesDistribution d = ones_distribution(n, AvoidanceParams(k));
    // Only the printed rows are compared; the k=3 triangle stops at m=5.
    const int rows = static_cast<int>(expected.size());
    for (int m = 0; m < rows; ++m) {
      const long want = expected[m][n - 1];
      if (d.at(m) != want) {
        detail << "k=" << k << " a(" << n << "," << m << ")=" << d.at(m) << " expected " << want;
        return false;
      }
      // Blank cells are exactly the indices past n - floor(n/k).
      if ((want == 0) != (m > d.max_ones())) {
        detail << "k=" << k << " cell (" << n << "," << m << ") presence mismatch";
        return false;
      }
    }
  }
  return true;
}

// |x - y| as a double, for rationals that are close.
double gap(const ExactRational& x, const ExactRational& y) { return ExactRational(abs(x - y)).get_d(); }

// floor(sqrt(5) * 10^digits), an independent route to sqrt(5).
BigInt scaled_sqrt5(int digits) {
  BigInt radicand;
  mpz_ui_pow_ui(radicand.get_mpz_t(), 10, 2 * static_cast<unsigned long>(digits));
  radicand *= 5;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  return root;
}

}  // namespace

CheckResult oracle_equivalence(const std::vector<int>& ks, int n_max, const DistributionFn& distribution) {
  return timed("AC1", "recurrences agree with brute-force enumeration", [&](std::ostream& detail) {
    for (int k : ks) {
      const AvoidanceParams p(k);
      for (int n = 0; n <= n_max; ++n) {
        const oracle::OracleResult o = oracle::enumerate(n, p);
        const OnesDistribution d = distribution(n, p);
        bool ok = count_words(n, p) == o.word_count && popularity(n, p) == o.total_ones;
        for (int m = 0; ok && m <= n; ++m) ok = d.at(m) == o.distribution[m];
        ok = ok && static_cast<int>(d.counts.size()) == d.max_ones() + 1;
        if (!ok) {
          detail << "mismatch at k=" << k << " n=" << n;
          return false;
        }
      }
    }
    detail << "k in {";
    for (std::size_t i = 0; i < ks.size(); ++i) detail << (i ? "," : "") << ks[i];
    detail << "}, n <= " << n_max;
    return true;
  });
}

CheckResult triangle_reproduction() {
  return timed("AC2", "triangle of a(n,m) for k=2,3 and n<=9", [&](std::ostream& detail) {
    if (!triangle_matches(2, reference::kTriangleK2, detail)) return false;
    if (!triangle_matches(3, reference::kTriangleK3, detail)) return false;
    detail << "all cells match";
    return true;
  });
}

CheckResult small_constants() {
  return timed("AC3", "length-4 counts and popularities", [&](std::ostream& detail) {
    const AvoidanceParams k2(2), k3(3);
    const bool ok = count_words(4, k2) == 8 && count_words(4, k3) == 13 && popularity(4, k2) == 10 &&
                    popularity(4, k3) == 22;
    const auto w2 = oracle::list_words(4, k2);
    const auto w3 = oracle::list_words(4, k3);
    const bool lists = std::equal(w2.begin(), w2.end(), reference::kWordsLength4K2.begin(),
                                  reference::kWordsLength4K2.end()) &&
                       std::equal(w3.begin(), w3.end(), reference::kWordsLength4K3.begin(),
                                  reference::kWordsLength4K3.end());
    detail << "|B_4(11)|=" << count_words(4, k2) << " |B_4(111)|=" << count_words(4, k3)
           << " v(4,2)=" << popularity(4, k2) << " v(4,3)=" << popularity(4, k3);
    return ok && lists;
  });
}

CheckResult limit_table_reproduction(int k_min, int k_max) {
  return timed("AC4", "15-digit limits for k=2..13", [&](std::ostream& detail) {
    for (int k = k_min; k <= k_max; ++k) {
      const std::string got = limit_decimal(AvoidanceParams(k), 15);
      const std::string_view want = reference::kLimitTable.at(k - 2);
      if (got != want) {
        detail << "k=" << k << " got " << got << " expected " << want;
        return false;
      }
    }
    detail << "k=" << k_min << ".." << k_max << " identical";
    return true;
  });
}

CheckResult series_consistency(int k_max, int n_max) {
  return timed("AC5", "series of P_k and T_k against exact counts", [&](std::ostream& detail) {
    for (int k = 2; k <= k_max; ++k) {
      const AvoidanceParams p(k);
      const SeriesExpansion pk = expand(pk_fraction(p), n_max);
      const SeriesExpansion tk = expand(tk_fraction(p), n_max);
      for (int n = 0; n <= n_max; ++n) {
        if (pk.coeffs[n] != popularity(n, p) || tk.coeffs[n] != count_words(n, p) * n) {
          detail << "mismatch at k=" << k << " n=" << n;
          return false;
        }
      }
    }
    detail << "k <= " << k_max << ", n <= " << n_max;
    return true;
  });
}

CheckResult functional_equation(int k_max, int max_n) {
  return timed("AC6", "closed form of F_k equals the functional-equation fixed point and the DP",
               [&](std::ostream& detail) {
                 for (int k = 2; k <= k_max; ++k) {
                   const AvoidanceParams p(k);
                   if (!check_functional_equation(p, max_n)) {
                     detail << "functional equation fails at k=" << k;
                     return false;
                   }
                   const BivariateTruncation closed = expand_closed_form(p, max_n);
                   for (int n = 0; n <= max_n; ++n) {
                     const OnesDistribution d = ones_distribution(n, p);
                     for (int m = 0; m <= n; ++m) {
                       if (closed.table[n][m] != d.at(m)) {
                         detail << "closed form differs from DP at k=" << k << " n=" << n << " m=" << m;
                         return false;
                       }
                     }
                   }
                 }
                 detail << "k=2.." << k_max << ", degree <= " << max_n;
                 return true;
               });
}

CheckResult root_structure(int k_min, int k_max) {
  return timed("AC7", "dominant root is phi_k, others in the annulus 3^(-1/k) < |r| < 1",
               [&](std::ostream& detail) {
                 double worst_phi = 0.0;
                 for (int k = k_min; k <= k_max; ++k) {
                   const AvoidanceParams p(k);
                   const ComplexRootSet set = all_roots(p);
                   const double ph = phi(p, 20).midpoint().get_d();
                   const auto top = set.roots.front().value;
                   worst_phi = std::max(worst_phi, std::abs(top - std::complex<double>(ph, 0.0)));
                   if (std::abs(top - std::complex<double>(ph, 0.0)) >= kRootAgreement) {
                     detail << "k=" << k << " largest root " << top.real() << "+" << top.imag() << "i vs phi " << ph;
                     return false;
                   }
                   const double inner = std::pow(3.0, -1.0 / k) - kRootAgreement;
                   for (std::size_t i = 1; i < set.roots.size(); ++i) {
                     const double r = std::abs(set.roots[i].value);
                     if (!(inner < r && r < 1.0 + kRootAgreement)) {
                       detail << "k=" << k << " root modulus " << r << " outside annulus";
                       return false;
                     }
                   }
                 }
                 detail << "max |largest root - phi| = " << worst_phi;
                 return true;
               });
}

CheckResult golden_ratio_case() {
  return timed("AC8", "k=2 agrees with (1+sqrt5)/2 and (5-sqrt5)/10", [&](std::ostream& detail) {
    constexpr int kDigits = 40;
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, kDigits);
    const BigInt s = scaled_sqrt5(kDigits);
    // sqrt5 in [s, s+1] / 10^40
    const RealEnclosure sqrt5(make_rational(s, scale), make_rational(s + 1, scale));
    const RealEnclosure golden = (RealEnclosure(ExactRational(1)) + sqrt5) * RealEnclosure(ExactRational(1, 2));
    const RealEnclosure closed = (RealEnclosure(ExactRational(5)) - sqrt5) * RealEnclosure(ExactRational(1, 10));

    const AvoidanceParams p(2);
    const RealEnclosure ph = phi(p, 15);
    const bool phi_ok = ph.overlaps(golden) && phi_decimal(p, 15) == *certified_decimal(golden, 15);
    const RealEnclosure lim = limit_value(p, 30);
    const bool lim_ok = lim.overlaps(closed) && gap(lim.midpoint(), closed.midpoint()) < 1e-30 &&
                        limit_decimal(p, 30) == *certified_decimal(closed, 30);
    detail << "phi_2=" << phi_decimal(p, 15) << " L_2=" << limit_decimal(p, 30);
    return phi_ok && lim_ok;
  });
}

CheckResult asymptotic_transfer() {
  return timed("AC9", "leading-term estimates converge to exact coefficients", [&](std::ostream& detail) {
    const long ns[] = {100, 200, 400, 800};
    const ExactRational bound(kAsymptoticRatioBound);
    bool ok = true;
    for (int k : {2, 3}) {
      const AvoidanceParams p(k);
      for (SeriesTarget t : {SeriesTarget::Popularity, SeriesTarget::TotalBits}) {
        // The total-bits estimate is exact up to exponentially small terms
        // (about 0.4 decimal digits per unit of n), so precision must scale with n.
        ExactRational prev = -1;
        detail << "k=" << k << (t == SeriesTarget::Popularity ? " P:" : " T:");
        for (long n : ns) {
          const BigNat exact = t == SeriesTarget::Popularity ? popularity(n, p) : BigNat(count_words(n, p) * n);
          const int digits = static_cast<int>(n / 2) + 20;
          const ExactRational ratio = asymptotic_coefficient(p, t, n, digits).value.midpoint() / ExactRational(exact);
          const ExactRational err = abs(ratio - 1);
          detail << " " << std::setprecision(3) << mpf_class(err, 64);
          ok = ok && (prev < 0 || err < prev);
          prev = err;
        }
        ok = ok && prev < bound;
        detail << ";";
      }
    }
    return ok;
  });
}

CheckResult convergence_to_limit() {
  return timed("AC10", "exact expected bit value converges to the limit", [&](std::ostream& detail) {
    const long ns[] = {50, 100, 200, 400, 800, 1600};
    bool ok = true;
    for (int k : {2, 3}) {
      const AvoidanceParams p(k);
      const ExactRational limit = limit_value(p, 30).midpoint();
      double prev = 1e300;
      detail << "k=" << k << ":";
      for (long n : ns) {
        const double err = gap(alpha(n, p), limit);
        detail << " " << err;
        ok = ok && err < prev;
        prev = err;
      }
      ok = ok && prev < kLimitGapBound;
      detail << "; ";
    }
    return ok;
  });
}

CheckResult limit_growth_in_k(int k_max) {
  return timed("AC11", "limit increases in k toward 1/2", [&](std::ostream& detail) {
    const auto table = corollary_check(k_max, 15);
    const ExactRational half(1, 2);
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (!(table[i].second.hi() < half)) {
        detail << "limit not below 1/2 at k=" << table[i].first;
        return false;
      }
      if (i > 0 && !(table[i - 1].second.hi() < table[i].second.lo())) {
        detail << "not increasing at k=" << table[i].first;
        return false;
      }
    }
    const RealEnclosure& last = table.back().second;
    detail << "L_" << k_max << " = " << round_decimal(last.midpoint(), 12);
    return last.lo() > ExactRational(kLimitAtFortyLowerBound);
  });
}

CheckResult enclosure_soundness(int queries, std::uint32_t seed) {
  return timed("AC12", "doubled-precision recomputation stays inside the widened original",
               [&](std::ostream& detail) {
                 std::mt19937 rng(seed);
                 std::uniform_int_distribution<int> pick_k(2, 40);
                 std::uniform_int_distribution<int> pick_digits(1, 30);
                 auto consistent = [](const RealEnclosure& coarse, const RealEnclosure& fine) {
                   const ExactRational w = coarse.width();
                   const RealEnclosure widened(coarse.lo() - w, coarse.hi() + w);
                   return coarse.overlaps(fine) && widened.contains(fine);
                 };
                 for (int q = 0; q < queries; ++q) {
                   const AvoidanceParams p(pick_k(rng));
                   const int d = pick_digits(rng);
                   if (!consistent(phi(p, d), phi(p, 2 * d)) ||
                       !consistent(limit_value(p, d), limit_value(p, 2 * d))) {
                     detail << "inconsistent at k=" << p.k() << " digits=" << d;
                     return false;
                   }
                 }
                 detail << queries << " random (k, digits) queries";
                 return true;
               });
}

CheckResult coprimality_spot_check(int k_max) {
  return timed("COPRIME", "g_k shares no root with either numerator", [&](std::ostream& detail) {
    double closest = 1e300;
    for (int k = 2; k <= k_max; ++k) {
      const AvoidanceParams p(k);
      const auto g_roots = durand_kerner(fibonacci_poly(p));
      for (const IntPolynomial& num : {pk_fraction(p).numerator, tk_fraction(p).numerator}) {
        // Each numerator is x times a polynomial with nonzero constant term.
        std::vector<BigInt> reduced(num.coeffs().begin() + 1, num.coeffs().end());
        const IntPolynomial q(std::move(reduced));
        std::vector<std::complex<double>> num_roots{0.0};
        if (q.degree() >= 1) {
          for (const auto& r : durand_kerner(q)) num_roots.push_back(r.value);
        }
        for (const auto& gr : g_roots)
          for (const auto& nr : num_roots) closest = std::min(closest, std::abs(gr.value - nr));
      }
    }
    detail << "closest pair distance " << closest;
    return closest > kCoprimeMinDistance;
  });
}

std::vector<CheckResult> run_checks(Level level) {
  std::vector<CheckResult> out;
  if (level == Level::Quick) {
    out.push_back(oracle_equivalence({2, 3}, 14));
    out.push_back(triangle_reproduction());
    out.push_back(small_constants());
    out.push_back(limit_table_reproduction());
    out.push_back(series_consistency(3, 50));
    return out;
  }
  out.push_back(oracle_equivalence({2, 3, 4, 5}, 18));
  out.push_back(triangle_reproduction());
  out.push_back(small_constants());
  out.push_back(limit_table_reproduction());
  out.push_back(series_consistency(6, 100));
  out.push_back(functional_equation(6, 30));
  out.push_back(root_structure());
  out.push_back(golden_ratio_case());
  out.push_back(asymptotic_transfer());
  out.push_back(convergence_to_limit());
  out.push_back(limit_growth_in_k());
  out.push_back(enclosure_soundness());
  out.push_back(coprimality_spot_check());
  return out;
}

}  // namespace kfib::verify
