// kfib: statistics of binary words avoiding k consecutive 1s.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "commands.h"

using namespace kfib;

int main(int argc, char** argv) {
  CLI::App app{"Exact and asymptotic statistics of binary words avoiding k consecutive 1s"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "plain";
  std::string out_path;
  int k = 2, k_min = 2, k_max = 13, digits = 15, n_max = 9;
  long n = 0;
  std::string level = "quick";

  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  auto add_k = [&](CLI::App* sub) { sub->add_option("--k", k, "Forbidden run length (>= 2)")->required(); };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", n, "Word length")->required(); };
  auto add_digits = [&](CLI::App* sub) {
    sub->add_option("--digits", digits, "Decimal digits")->capture_default_str();
  };

  auto* count = app.add_subcommand("count", "Number of avoiders of length n, with the k-step Fibonacci identity");
  add_k(count);
  add_n(count);
  auto* pop = app.add_subcommand("popularity", "Total number of 1s over all avoiders of length n");
  add_k(pop);
  add_n(pop);
  auto* dist = app.add_subcommand("dist", "Avoiders of length n by number of 1s");
  add_k(dist);
  add_n(dist);
  auto* list = app.add_subcommand("list", "List all avoiders of length n (n <= 16)");
  add_k(list);
  add_n(list);
  auto* table1 = app.add_subcommand("table1", "Triangle of counts by length and number of 1s");
  add_k(table1);
  table1->add_option("--n-max", n_max, "Largest length")->capture_default_str();
  auto* limits = app.add_subcommand("limits", "Limit of the expected bit value for a range of k");
  limits->add_option("--k-min", k_min)->capture_default_str();
  limits->add_option("--k-max", k_max)->capture_default_str();
  add_digits(limits);
  auto* series = app.add_subcommand("alpha-series", "Exact expected bit value for n = 1..n-max (plot data)");
  add_k(series);
  series->add_option("--n-max", n_max, "Largest length")->capture_default_str();
  add_digits(series);
  auto* phi = app.add_subcommand("phi", "Generalized golden ratio phi_k");
  add_k(phi);
  add_digits(phi);
  auto* roots = app.add_subcommand("roots", "All complex roots of x^k - x^(k-1) - ... - 1");
  add_k(roots);
  auto* verify = app.add_subcommand("verify", "Run the verification harness");
  verify->add_option("level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  cli::Output out;
  try {
    const cli::Format format = cli::parse_format(format_name);
    if (*count) out = cli::cmd_count(k, n, format);
    else if (*pop) out = cli::cmd_popularity(k, n, format);
    else if (*dist) out = cli::cmd_dist(k, static_cast<int>(n), format);
    else if (*list) out = cli::cmd_list(k, static_cast<int>(n), format);
    else if (*table1) out = cli::cmd_table1(k, n_max, format);
    else if (*limits) out = cli::cmd_limits(k_min, k_max, digits, format);
    else if (*series) out = cli::cmd_alpha_series(k, n_max, digits, format);
    else if (*phi) out = cli::cmd_phi(k, digits, format);
    else if (*roots) out = cli::cmd_roots(k, format);
    else if (*verify) out = cli::cmd_verify(level == "full" ? verify::Level::Full : verify::Level::Quick, format);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const UndefinedValue& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitVerificationFailed;
  }

  if (out_path.empty()) {
    std::cout << out.text;
  } else {
    std::ofstream file(out_path);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << "\n";
      return cli::kExitUsage;
    }
    file << out.text;
  }
  return out.exit_code;
}
