#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace subsidy;
using namespace subsidy::cli;

namespace {

/// Runs `command` writing to --out (or stdout).
template <typename F>
int with_output(const std::string& path, F command) {
  if (path.empty()) return command(std::cout);
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  return command(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair allocation of chores and goods with subsidies"};
  app.require_subcommand(1);

  std::string algorithm = "moving-knife-round-best";
  std::string mode;
  std::string out;
  std::string family = "uniform";
  std::string n_range = "2..8";
  std::string m_range = "1..12";
  std::uint64_t seed = 1;
  bool decimal = false;

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run one algorithm on an instance file and check its bound");
  solve_cmd->add_option("file", solve.file, "Instance file")->required();
  solve_cmd->add_option("--algorithm", algorithm,
                        "load-balance | weighted-load-balance | moving-knife-round-best | bid-and-take | efs");
  solve_cmd->add_option("--mode", mode, "Override the instance mode (chores | goods)");
  solve_cmd->add_flag("--decimal", decimal, "Also print decimal approximations");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Seeded random sweep, one CSV row per trial");
  bench_cmd->add_option("--algorithm", algorithm);
  bench_cmd->add_option("--mode", mode);
  bench_cmd->add_option("--family", family, "uniform | bimodal | identical | weighted");
  bench_cmd->add_option("--n", n_range, "Agents, a..b");
  bench_cmd->add_option("--m", m_range, "Items, a..b");
  bench_cmd->add_option("--trials", bench.trials);
  bench_cmd->add_option("--seed", seed);
  bench_cmd->add_option("--out", out, "CSV path (default stdout)");

  GenerateOptions gen;
  auto* gen_cmd = app.add_subcommand("generate", "Write an instance in canonical form");
  gen_cmd->add_option("--family", family, "uniform | bimodal | identical | weighted | lb-prop | lb-efs");
  gen_cmd->add_option("--mode", mode);
  gen_cmd->add_option("--n", gen.n);
  gen_cmd->add_option("--m", gen.m);
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--out", out);

  OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact minimum subsidy by enumeration");
  oracle_cmd->add_option("file", oracle.file)->required();
  oracle_cmd->add_option("--cap", oracle.cap, "Largest n^m to enumerate");
  oracle_cmd->add_flag("--efs", oracle.efs, "Minimise envy-free subsidies instead (chores)");
  oracle_cmd->add_flag("--decimal", decimal);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check fairness properties of a given allocation");
  verify_cmd->add_option("file", verify.file)->required();
  verify_cmd->add_option("allocation", verify.allocation, "{\"bundles\": [[0-based items], ...]}")->required();
  verify_cmd->add_flag("--decimal", decimal);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*solve_cmd) {
      solve.algorithm = parse_algorithm(algorithm);
      if (!mode.empty()) solve.mode = parse_mode(mode);
      solve.decimal = decimal;
      return cmd_solve(solve, std::cout);
    }
    if (*bench_cmd) {
      bench.algorithm = parse_algorithm(algorithm);
      if (!mode.empty()) bench.mode = parse_mode(mode);
      bench.family = parse_family(family);
      bench.n = parse_range(n_range);
      bench.m = parse_range(m_range);
      bench.seed = seed;
      return with_output(out, [&](std::ostream& os) { return cmd_bench(bench, os); });
    }
    if (*gen_cmd) {
      gen.family = family;
      if (!mode.empty()) gen.mode = parse_mode(mode);
      gen.seed = seed;
      return with_output(out, [&](std::ostream& os) { return cmd_generate(gen, os); });
    }
    if (*oracle_cmd) {
      oracle.decimal = decimal;
      return cmd_oracle(oracle, std::cout);
    }
    if (*verify_cmd) {
      verify.decimal = decimal;
      return cmd_verify(verify, std::cout);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
