#include "commands.h"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "kfib/combinatorics.h"
#include "kfib/numerics.h"
#include "kfib/oracle.h"
#include "kfib/roots.h"

namespace kfib::cli {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

void require_digits(int digits) {
  if (digits < 1) throw InvalidArgument("--digits must be >= 1");
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "plain") return Format::Plain;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw InvalidArgument("unknown format '" + name + "' (expected plain, csv or json)");
}

std::string short_decimal(const ExactRational& x, int digits) {
  std::string s = round_decimal(x, digits);
  if (s.find('.') == std::string::npos) return s;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.push_back('0');
  return s;
}

Output cmd_count(int k, long n, Format format) {
  const AvoidanceParams p(k);
  const BigNat count = count_words(n, p);
  const long index = n + k;
  const BigNat fib = kstep_fibonacci(index, p);
  const bool holds = count == fib;
  std::ostringstream os;
  switch (format) {
    case Format::Plain:
      os << "count      " << count << "\n"
         << "fibonacci  f(" << index << "," << k << ") = " << fib << "\n"
         << "identity   " << (holds ? "holds" : "FAILS") << "\n";
      break;
    case Format::Csv:
      os << "k,n,count,fibonacci_index,fibonacci,identity_holds\n"
         << k << "," << n << "," << count << "," << index << "," << fib << "," << (holds ? "true" : "false") << "\n";
      break;
    case Format::Json:
      os << dump({{"command", "count"},
                  {"k", k},
                  {"n", n},
                  {"count", count.get_str()},
                  {"fibonacci_index", index},
                  {"fibonacci", fib.get_str()},
                  {"identity_holds", holds}});
      break;
  }
  return {os.str(), holds ? kExitOk : kExitVerificationFailed};
}

Output cmd_popularity(int k, long n, Format format) {
  const BigNat v = popularity(n, AvoidanceParams(k));
  std::ostringstream os;
  switch (format) {
    case Format::Plain:
      os << v << "\n";
      break;
    case Format::Csv:
      os << "k,n,popularity\n" << k << "," << n << "," << v << "\n";
      break;
    case Format::Json:
      os << dump({{"command", "popularity"}, {"k", k}, {"n", n}, {"popularity", v.get_str()}});
      break;
  }
  return {os.str()};
}

Output cmd_dist(int k, int n, Format format) {
  const OnesDistribution d = ones_distribution(n, AvoidanceParams(k));
  std::ostringstream os;
  switch (format) {
    case Format::Plain:
      for (std::size_t m = 0; m < d.counts.size(); ++m) os << m << " " << d.counts[m] << "\n";
      break;
    case Format::Csv:
      os << "k,n,m,count\n";
      for (std::size_t m = 0; m < d.counts.size(); ++m) os << k << "," << n << "," << m << "," << d.counts[m] << "\n";
      break;
    case Format::Json: {
      json counts = json::array();
      for (const auto& c : d.counts) counts.push_back(c.get_str());
      os << dump({{"command", "dist"}, {"k", k}, {"n", n}, {"counts", counts}});
      break;
    }
  }
  return {os.str()};
}

Output cmd_list(int k, int n, Format format) {
  const auto words = oracle::list_words(n, AvoidanceParams(k));
  std::ostringstream os;
  switch (format) {
    case Format::Plain:
      for (const auto& w : words) os << (w.empty() ? "(empty)" : w) << "\n";
      break;
    case Format::Csv:
      os << "word\n";
      for (const auto& w : words) os << w << "\n";
      break;
    case Format::Json:
      os << dump({{"command", "list"}, {"k", k}, {"n", n}, {"words", words}});
      break;
  }
  return {os.str()};
}

Output cmd_table1(int k, int n_max, Format format) {
  const AvoidanceParams p(k);
  if (n_max < 1) throw InvalidArgument("--n-max must be >= 1");
  std::vector<OnesDistribution> columns;
  for (int n = 1; n <= n_max; ++n) columns.push_back(ones_distribution(n, p));
  const int rows = columns.back().max_ones() + 1;

  std::ostringstream os;
  switch (format) {
    case Format::Plain: {
      std::size_t width = 3;
      for (const auto& c : columns)
        for (const auto& v : c.counts) width = std::max(width, v.get_str().size() + 1);
      os << pad_left("m\\n", 4);
      for (int n = 1; n <= n_max; ++n) os << pad_left(std::to_string(n), width);
      os << "\n";
      for (int m = 0; m < rows; ++m) {
        std::string line = pad_left(std::to_string(m), 4);
        for (const auto& c : columns) line += pad_left(m <= c.max_ones() ? c.counts[m].get_str() : "", width);
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
      }
      break;
    }
    case Format::Csv:
      os << "k,n,m,count\n";
      for (const auto& c : columns)
        for (int m = 0; m <= c.max_ones(); ++m) os << k << "," << c.n << "," << m << "," << c.counts[m] << "\n";
      break;
    case Format::Json: {
      json cols = json::array();
      for (const auto& c : columns) {
        json counts = json::array();
        for (const auto& v : c.counts) counts.push_back(v.get_str());
        cols.push_back({{"n", c.n}, {"counts", counts}});
      }
      os << dump({{"command", "table1"}, {"k", k}, {"n_max", n_max}, {"columns", cols}});
      break;
    }
  }
  return {os.str()};
}

Output cmd_limits(int k_min, int k_max, int digits, Format format) {
  require_digits(digits);
  static_cast<void>(AvoidanceParams{k_min});
  if (k_max < k_min) throw InvalidArgument("--k-max must be >= --k-min");
  std::vector<std::string> values(k_max - k_min + 1);
#pragma omp parallel for schedule(dynamic)
  for (int k = k_min; k <= k_max; ++k) values[k - k_min] = limit_decimal(AvoidanceParams(k), digits);

  std::ostringstream os;
  switch (format) {
    case Format::Plain:
      os << " k  limit\n";
      for (int k = k_min; k <= k_max; ++k) os << pad_left(std::to_string(k), 2) << "  " << values[k - k_min] << "\n";
      break;
    case Format::Csv:
      os << "k,limit\n";
      for (int k = k_min; k <= k_max; ++k) os << k << "," << values[k - k_min] << "\n";
      break;
    case Format::Json: {
      json rows = json::array();
      for (int k = k_min; k <= k_max; ++k) rows.push_back({{"k", k}, {"limit", values[k - k_min]}});
      os << dump({{"command", "limits"}, {"digits", digits}, {"limits", rows}});
      break;
    }
  }
  return {os.str()};
}

Output cmd_alpha_series(int k, int n_max, int digits, Format format) {
  require_digits(digits);
  const AvoidanceParams p(k);
  if (n_max < 1) throw InvalidArgument("--n-max must be >= 1");
  const std::string limit = limit_decimal(p, digits);

  struct Row {
    long n;
    ExactRational a;
    std::string decimal;
  };
  std::vector<Row> rows;
  for (long n = 1; n <= n_max; ++n) {
    ExactRational a = alpha(n, p);
    rows.push_back({n, a, short_decimal(a, digits)});
  }

  std::ostringstream os;
  switch (format) {
    case Format::Plain:
      os << "# k=" << k << " limit=" << limit << "\n";
      for (const auto& r : rows) {
        const std::string frac = r.a.get_num().get_str() + "/" + r.a.get_den().get_str();
        os << pad_left(std::to_string(r.n), 5) << "  " << r.decimal << "  " << frac << "\n";
      }
      break;
    case Format::Csv:
      os << "k,n,alpha_num,alpha_den,alpha_decimal,limit_decimal\n";
      for (const auto& r : rows)
        os << k << "," << r.n << "," << r.a.get_num() << "," << r.a.get_den() << "," << r.decimal << "," << limit
           << "\n";
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : rows)
        arr.push_back({{"n", r.n},
                       {"alpha_num", r.a.get_num().get_str()},
                       {"alpha_den", r.a.get_den().get_str()},
                       {"alpha_decimal", r.decimal}});
      os << dump({{"command", "alpha-series"}, {"k", k}, {"limit_decimal", limit}, {"rows", arr}});
      break;
    }
  }
  return {os.str()};
}

Output cmd_phi(int k, int digits, Format format) {
  require_digits(digits);
  const AvoidanceParams p(k);
  const std::string ph = phi_decimal(p, digits);
  const std::string inv = inverse_phi_decimal(p, digits);
  std::ostringstream os;
  switch (format) {
    case Format::Plain:
      os << ph << "\n";
      break;
    case Format::Csv:
      os << "k,digits,phi,inverse_phi\n" << k << "," << digits << "," << ph << "," << inv << "\n";
      break;
    case Format::Json:
      os << dump({{"command", "phi"}, {"k", k}, {"digits", digits}, {"phi", ph}, {"inverse_phi", inv}});
      break;
  }
  return {os.str()};
}

Output cmd_roots(int k, Format format) {
  const ComplexRootSet set = all_roots(AvoidanceParams(k));
  std::ostringstream os;
  switch (format) {
    case Format::Plain:
    case Format::Csv: {
      const char* sep = format == Format::Csv ? "," : "  ";
      os << "re" << sep << "im" << sep << "modulus" << sep << "residual" << sep << "error_radius\n";
      for (const auto& r : set.roots)
        os << fmt_double(r.value.real()) << sep << fmt_double(r.value.imag()) << sep << fmt_double(std::abs(r.value))
           << sep << fmt_double(r.residual) << sep << fmt_double(r.error_radius) << "\n";
      break;
    }
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : set.roots)
        arr.push_back({{"re", r.value.real()},
                       {"im", r.value.imag()},
                       {"modulus", std::abs(r.value)},
                       {"residual", r.residual},
                       {"error_radius", r.error_radius}});
      os << dump({{"command", "roots"}, {"k", k}, {"roots", arr}});
      break;
    }
  }
  return {os.str()};
}

Output cmd_verify(verify::Level level, Format format) {
  const auto results = verify::run_checks(level);
  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  std::ostringstream os;
  switch (format) {
    case Format::Plain:
      for (const auto& r : results)
        os << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << r.name << "  [" << r.detail << "]\n";
      os << (all ? "all checks passed" : "verification FAILED") << "\n";
      break;
    case Format::Csv:
      os << "id,passed,name\n";
      for (const auto& r : results) os << r.id << "," << (r.passed ? "true" : "false") << ",\"" << r.name << "\"\n";
      break;
    case Format::Json: {
      json checks = json::array();
      for (const auto& r : results)
        checks.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      os << dump({{"command", "verify"},
                  {"level", level == verify::Level::Quick ? "quick" : "full"},
                  {"passed", all},
                  {"checks", checks}});
      break;
    }
  }
  return {os.str(), all ? kExitOk : kExitVerificationFailed};
}

}  // namespace kfib::cli
