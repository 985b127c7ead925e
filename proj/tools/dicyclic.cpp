// dicyclic: exact convergence analysis of the asymmetric and symmetric random
// walks on the dicyclic group.
//
//   dicyclic analyze --n 7,9 --walk asym,sym --k-max auto --format csv
//   dicyclic mixing-time --n 9,11,13,15 --epsilon 0.25
//   dicyclic verify [--grid-points 100000] [--n-max 9]
//   dicyclic dump-irreps --n 3

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dicyclic/cli.hpp"
#include "dicyclic/verify.hpp"

namespace {

using namespace dicyclic;

struct RawArgs {
  std::vector<std::int64_t> n_list;
  std::string k_max = "auto";
  std::vector<std::string> walks{"asym", "sym"};
  double epsilon = 0.25;
  std::string format = "csv";
  std::string output;
  bool no_bounds = false;
  std::int64_t seed = 0;  // reserved; every computation is exact
};

cli::SweepConfig to_config(const RawArgs& a) {
  cli::SweepConfig c;
  c.n_list = a.n_list;
  if (a.k_max != "auto") {
    try {
      std::size_t used = 0;
      c.k_max = std::stoll(a.k_max, &used);
      if (used != a.k_max.size()) throw std::invalid_argument(a.k_max);
    } catch (const std::logic_error&) {
      throw cli::UsageError("--k-max must be a positive integer or 'auto', got '" + a.k_max + "'");
    }
  }
  c.walks.clear();
  for (const auto& w : a.walks) {
    try {
      c.walks.push_back(parse_walk(w));
    } catch (const std::invalid_argument& e) {
      throw cli::UsageError(e.what());
    }
  }
  c.epsilon = a.epsilon;
  c.format = cli::parse_format(a.format);
  c.bounds = !a.no_bounds;
  return c;
}

void add_sweep_options(CLI::App* cmd, RawArgs& a, bool with_k_max) {
  cmd->add_option("--n", a.n_list, "comma-separated list of n (group Dic_n of order 4n)")->delimiter(',')->required();
  if (with_k_max) {
    cmd->add_option("--k-max", a.k_max, "largest step count, or 'auto' for 3 n^2")->capture_default_str();
    cmd->add_option("--walk", a.walks, "walks to run: asym, sym")->delimiter(',')->capture_default_str();
    cmd->add_flag("--no-bounds", a.no_bounds, "omit bound columns (allows even n)");
  }
  cmd->add_option("--epsilon", a.epsilon, "mixing threshold on total variation")->capture_default_str();
  cmd->add_option("--format", a.format, "csv or json")->capture_default_str();
  cmd->add_option("--output", a.output, "write to this file instead of stdout");
  cmd->add_option("--seed", a.seed, "reserved, unused");
}

// Runs `body` against stdout or the --output file.
template <typename Body>
int with_output(const std::string& path, Body&& body) {
  if (path.empty()) return body(std::cout);
  std::ofstream file(path);
  if (!file) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return cli::kExitUsage;
  }
  return body(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact convergence analysis of random walks on the dicyclic group Dic_n"};
  app.require_subcommand(1);

  RawArgs analyze_args, mixing_args;
  auto* analyze = app.add_subcommand("analyze", "tv distance and closed-form bounds per (n, walk, k)");
  add_sweep_options(analyze, analyze_args, true);

  auto* mixing = app.add_subcommand("mixing-time", "mixing times of both walks and their ratio");
  add_sweep_options(mixing, mixing_args, false);

  verify::Options verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "run the full self-check suite");
  verify_cmd->add_option("--grid-points", verify_opts.grid_points, "grid size for the cosine certificates")
      ->capture_default_str();
  verify_cmd->add_option("--n-max", verify_opts.n_max, "largest n for exhaustive group checks")->capture_default_str();
  verify_cmd->add_option("--gcd-limit", verify_opts.gcd_limit, "scan odd n up to this value")->capture_default_str();
  verify_cmd->add_option("--inject-upper-scale", verify_opts.upper_scale, "scale upper bounds (fault injection)")
      ->group("");

  std::int64_t dump_n = 0;
  auto* dump = app.add_subcommand("dump-irreps", "irreducible representations at the generators, as JSON");
  dump->add_option("--n", dump_n, "group parameter n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    if (*analyze) {
      const auto config = to_config(analyze_args);
      return with_output(analyze_args.output, [&](std::ostream& out) { return cli::cmd_analyze(config, out, std::cerr); });
    }
    if (*mixing) {
      const auto config = to_config(mixing_args);
      return with_output(mixing_args.output, [&](std::ostream& out) { return cli::cmd_mixing_time(config, out, std::cerr); });
    }
    if (*verify_cmd) return verify::cmd_verify(verify_opts, std::cout, std::cerr);
    if (*dump) return cli::cmd_dump_irreps(dump_n, std::cout, std::cerr);
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitCheckFailed;
  }
  return cli::kExitUsage;
}
