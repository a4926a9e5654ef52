#pragma once

// Subcommand implementations, kept out of main.cpp so the tests can drive
// them with string streams.

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "subsidy/subsidy.hpp"

namespace subsidy::cli {

enum class Algorithm { LoadBalance, WeightedLoadBalance, MovingKnifeRoundBest, BidAndTake, Efs };

inline const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::LoadBalance: return "load-balance";
    case Algorithm::WeightedLoadBalance: return "weighted-load-balance";
    case Algorithm::MovingKnifeRoundBest: return "moving-knife-round-best";
    case Algorithm::BidAndTake: return "bid-and-take";
    case Algorithm::Efs: return "efs";
  }
  return "?";
}

inline Algorithm parse_algorithm(const std::string& text) {
  for (Algorithm a : {Algorithm::LoadBalance, Algorithm::WeightedLoadBalance, Algorithm::MovingKnifeRoundBest,
                      Algorithm::BidAndTake, Algorithm::Efs})
    if (text == to_string(a)) return a;
  throw Error(ErrorKind::Parse, "unknown algorithm '" + text + "'");
}

enum Exit : int { kPass = 0, kViolation = 1, kUsage = 2 };

/// Inclusive range written "a..b" or just "a".
struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

inline Range parse_range(const std::string& text) {
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorKind::Parse, "bad range '" + text + "'");
    return std::stoul(s);
  };
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = number(text);
  } else {
    r.lo = number(text.substr(0, dots));
    r.hi = number(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw Error(ErrorKind::Parse, "empty range '" + text + "'");
  return r;
}

/// What one algorithm run produced, with the bound it is held to.
struct Run {
  Allocation allocation;
  SubsidyVector subsidies;
  Rational bound;
  std::optional<Rational> ido_total;  // moving knife only: subsidy before lifting
};

inline Rational quarter_bound(std::size_t n) { return Rational(static_cast<std::int64_t>(n), 4); }

inline Run run_algorithm(Algorithm a, const Instance& inst) {
  const std::size_t n = inst.agents();
  Run run;
  switch (a) {
    case Algorithm::LoadBalance:
    case Algorithm::WeightedLoadBalance: {
      auto [alloc, trace] = a == Algorithm::LoadBalance ? load_balance(inst) : weighted_load_balance(inst);
      run.allocation = std::move(alloc);
      run.subsidies = min_subsidy_vector(inst, run.allocation);
      run.bound = identical_subsidy_bound(n);
      break;
    }
    case Algorithm::MovingKnifeRoundBest: {
      if (!inst.uniform_weights())
        throw Error(ErrorKind::InvalidArgument, "moving-knife-round-best needs uniform weights");
      const IdoCertificate cert = to_ido(inst);
      const auto [cuts, frac] = moving_knife(cert.transformed);
      const RoundingOutcome rounded = round_best(cuts, cert.transformed);
      run.ido_total = rounded.subsidies.total();
      run.allocation = lift_allocation(rounded.allocation, cert, inst);
      run.subsidies = min_subsidy_vector(inst, run.allocation);
      run.bound = quarter_bound(n);
      break;
    }
    case Algorithm::BidAndTake: {
      const auto [frac, trace] = fractional_bid_and_take(inst);
      RoundingOutcome rounded = round_largest_fraction(frac, inst);
      run.allocation = std::move(rounded.allocation);
      run.subsidies = std::move(rounded.subsidies);
      run.bound = weighted_general_bound(n);
      break;
    }
    case Algorithm::Efs: {
      EfsResult r = efs_solve(inst);
      run.allocation = std::move(r.allocation);
      run.subsidies = std::move(r.subsidies);
      run.bound = Rational(static_cast<std::int64_t>(n) - 1);
      break;
    }
  }
  return run;
}

struct Printer {
  bool decimal = false;

  std::string operator()(const Rational& x) const {
    return decimal && !x.is_integer() ? x.str() + " (" + x.decimal() + ")" : x.str();
  }
};

inline void print_allocation(std::ostream& out, const Allocation& alloc) {
  out << "allocation:\n";
  for (AgentId i = 0; i < alloc.agents(); ++i) {
    out << "  agent " << i + 1 << ":";
    if (alloc.bundles[i].empty()) out << " -";
    for (ItemId e : alloc.bundles[i]) out << " e" << e + 1;
    out << "\n";
  }
}

inline void print_subsidies(std::ostream& out, const SubsidyVector& s, const Printer& p) {
  out << "subsidies:";
  for (const auto& x : s.values) out << " " << p(x);
  out << "\ntotal: " << p(s.total()) << "\n";
}

struct SolveOptions {
  std::string file;
  Algorithm algorithm = Algorithm::MovingKnifeRoundBest;
  std::optional<Mode> mode;
  bool decimal = false;
};

inline int cmd_solve(const SolveOptions& o, std::ostream& out) {
  Instance inst = load_instance(o.file);
  if (o.mode) inst.mode = *o.mode;
  const Run run = run_algorithm(o.algorithm, inst);
  const Printer p{o.decimal};
  out << "algorithm: " << to_string(o.algorithm) << "\n";
  out << "instance: " << inst.agents() << " agents, " << inst.items() << " items, " << to_string(inst.mode) << "\n";
  print_allocation(out, run.allocation);
  print_subsidies(out, run.subsidies, p);
  if (run.ido_total) out << "ido total: " << p(*run.ido_total) << "\n";
  out << "bound: " << p(run.bound) << "\n";
  bool ok = run.subsidies.total() <= run.bound;
  if (run.ido_total) ok = ok && *run.ido_total <= run.bound;
  if (o.algorithm == Algorithm::Efs) {
    const bool efs = fairness_report(inst, run.allocation, run.subsidies).efs.value_or(false);
    out << "envy-free with subsidies: " << (efs ? "yes" : "no") << "\n";
    ok = ok && efs;
  }
  out << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kPass : kViolation;
}

struct BenchOptions {
  Algorithm algorithm = Algorithm::MovingKnifeRoundBest;
  Mode mode = Mode::Chores;
  Family family = Family::UniformRational;
  Range n{2, 8};
  Range m{1, 12};
  std::size_t trials = 100;
  std::uint64_t seed = 1;
};

inline constexpr const char* kBenchHeader =
    "seed,n,m,family,algorithm,total_subsidy,bound,tight_ratio,props,prop1,propx,ef1,efs";

/// Shape of trial t: n and m drawn from the ranges with a generator seeded by
/// the trial seed, so every row can be reproduced on its own.
inline std::pair<std::size_t, std::size_t> trial_shape(const BenchOptions& o, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t n = o.n.lo + detail::draw(rng, o.n.hi - o.n.lo);
  const std::size_t m = o.m.lo + detail::draw(rng, o.m.hi - o.m.lo);
  return {n, m};
}

/// Writes the CSV and returns kViolation if any row breaks its bound.
inline int cmd_bench(const BenchOptions& o, std::ostream& out) {
  out << kBenchHeader << "\n";
  bool ok = true;
  auto flag = [](bool b) { return b ? "1" : "0"; };
  for (std::size_t t = 0; t < o.trials; ++t) {
    const std::uint64_t seed = o.seed + t;
    const auto [n, m] = trial_shape(o, seed);
    const Instance inst = gen_random(n, m, seed, o.family, o.mode);
    const Run run = run_algorithm(o.algorithm, inst);
    const Rational total = run.subsidies.total();
    const FairnessReport f = fairness_report(inst, run.allocation, run.subsidies);
    std::string ratio;
    if (!run.bound.is_zero())
      ratio = (total / run.bound).str();
    else
      ratio = total.is_zero() ? "0" : "inf";
    const bool within = total <= run.bound && (!run.ido_total || *run.ido_total <= run.bound);
    ok = ok && within;
    out << seed << "," << n << "," << m << "," << to_string(o.family) << "," << to_string(o.algorithm) << ","
        << total << "," << run.bound << "," << ratio << "," << flag(f.props) << "," << flag(f.prop1) << ","
        << flag(f.propx) << "," << flag(f.ef1) << "," << flag(f.efs.value_or(false)) << "\n";
  }
  return ok ? kPass : kViolation;
}

struct GenerateOptions {
  std::string family = "uniform";  // any Family name, or lb-prop / lb-efs
  Mode mode = Mode::Chores;
  std::size_t n = 4;
  std::size_t m = 8;
  std::uint64_t seed = 1;
};

inline Instance generate(const GenerateOptions& o) {
  if (o.family == "lb-prop") return gen_lower_bound_prop(o.n, o.mode);
  if (o.family == "lb-efs") return gen_lower_bound_efs(o.n);
  return gen_random(o.n, o.m, o.seed, parse_family(o.family), o.mode);
}

inline int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  out << write_instance(generate(o)) << "\n";
  return kPass;
}

struct OracleOptions {
  std::string file;
  std::uint64_t cap = kDefaultOracleCap;
  bool efs = false;
  bool decimal = false;
};

inline int cmd_oracle(const OracleOptions& o, std::ostream& out) {
  const Instance inst = load_instance(o.file);
  const Printer p{o.decimal};
  if (o.efs) {
    out << "minimum envy-free subsidy: " << p(oracle_min_total_efs_subsidy(inst, o.cap)) << "\n";
    return kPass;
  }
  const auto [best, witness] = oracle_min_total_subsidy(inst, o.cap);
  out << "minimum total subsidy: " << p(best) << "\n";
  print_allocation(out, witness);
  return kPass;
}

struct VerifyOptions {
  std::string file;
  std::string allocation;
  bool decimal = false;
};

inline int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const Instance inst = load_instance(o.file);
  const Allocation alloc = parse_allocation(read_text_file(o.allocation));
  if (alloc.agents() != inst.agents())
    throw Error(ErrorKind::DimensionMismatch, "allocation has " + std::to_string(alloc.agents()) +
                                                  " bundles for " + std::to_string(inst.agents()) + " agents");
  if (!alloc.is_partition(inst.items())) throw Error(ErrorKind::InvalidArgument, "allocation is not a partition");
  const SubsidyVector s = min_subsidy_vector(inst, alloc);
  const FairnessReport f = fairness_report(inst, alloc, s);
  const Printer p{o.decimal};
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  print_allocation(out, alloc);
  print_subsidies(out, s, p);
  out << "prop: " << yn(f.prop) << "\nprop1: " << yn(f.prop1) << "\npropx: " << yn(f.propx) << "\nef: " << yn(f.ef)
      << "\nef1: " << yn(f.ef1) << "\n";
  return kPass;
}

}  // namespace subsidy::cli
