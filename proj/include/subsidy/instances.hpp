#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "subsidy/core.hpp"

namespace subsidy {

enum class Family { UniformRational, Bimodal, IdenticalUniform, WeightedDirichletLike };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::UniformRational: return "uniform";
    case Family::Bimodal: return "bimodal";
    case Family::IdenticalUniform: return "identical";
    case Family::WeightedDirichletLike: return "weighted";
  }
  return "?";
}

inline Family parse_family(std::string_view text) {
  for (Family f : {Family::UniformRational, Family::Bimodal, Family::IdenticalUniform, Family::WeightedDirichletLike})
    if (text == to_string(f)) return f;
  throw Error(ErrorKind::Parse, "unknown family '" + std::string(text) + "'");
}

namespace detail {

inline Matrix unit_matrix(std::size_t n, std::size_t m) {
  return Matrix(n, Row(m, Rational(1)));
}

inline void require_two_agents(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "lower-bound families need n >= 2");
}

/// Uniform draw from {0..bound}; rejection sampling keeps it identical on
/// every platform (std::uniform_int_distribution is implementation-defined).
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t span = bound + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return x % span;
}

inline Rational grid_value(std::uint64_t k) { return Rational(static_cast<std::int64_t>(k), 1000); }

}  // namespace detail

/// floor(n/2) items of cost (value) 1 for n identical agents. Needs total
/// subsidy n/4 (n even) or (n^2-1)/(4n) (n odd) in every allocation.
inline Instance gen_lower_bound_prop(std::size_t n, Mode mode = Mode::Chores) {
  detail::require_two_agents(n);
  return make_instance(mode, detail::unit_matrix(n, n / 2));
}

/// n-1 unit chores for n identical agents; envy-freeness needs n-1 in total.
inline Instance gen_lower_bound_efs(std::size_t n) {
  detail::require_two_agents(n);
  return make_instance(Mode::Chores, detail::unit_matrix(n, n - 1));
}

/// Random instance on the k/1000 grid, deterministic in (n, m, seed, family).
inline Instance gen_random(std::size_t n, std::size_t m, std::uint64_t seed, Family family,
                           Mode mode = Mode::Chores) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "need at least one agent");
  std::mt19937_64 rng(seed);
  auto entry = [&] {
    if (family == Family::Bimodal) {
      const bool high = detail::draw(rng, 1) == 1;
      return detail::grid_value(high ? 900 + detail::draw(rng, 100) : detail::draw(rng, 100));
    }
    return detail::grid_value(detail::draw(rng, 1000));
  };

  Matrix matrix(n, Row(m));
  if (family == Family::IdenticalUniform) {
    for (auto& x : matrix.front()) x = entry();
    for (std::size_t i = 1; i < n; ++i) matrix[i] = matrix.front();
  } else {
    for (auto& row : matrix)
      for (auto& x : row) x = entry();
  }

  Row weights;
  if (family == Family::WeightedDirichletLike) {
    std::vector<std::int64_t> g(n);
    std::int64_t sum = 0;
    for (auto& x : g) sum += x = static_cast<std::int64_t>(1 + detail::draw(rng, 999));
    for (auto x : g) weights.emplace_back(x, sum);
  }
  return make_instance(mode, std::move(matrix), std::move(weights));
}

// ---- canonical file format ----

namespace detail {

inline Rational json_rational(const nlohmann::ordered_json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) return Rational::parse(j.dump());
  throw Error(ErrorKind::Parse, "expected a rational, got " + j.dump());
}

inline Row json_row(const nlohmann::ordered_json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, std::string(what) + " must be an array");
  Row row;
  for (const auto& x : j) row.push_back(json_rational(x));
  return row;
}

}  // namespace detail

inline nlohmann::ordered_json instance_to_json(const Instance& inst) {
  nlohmann::ordered_json j;
  j["mode"] = to_string(inst.mode);
  if (!inst.uniform_weights()) {
    auto& w = j["weights"] = nlohmann::ordered_json::array();
    for (const auto& x : inst.weights) w.push_back(x.str());
  }
  auto& costs = j["costs"] = nlohmann::ordered_json::array();
  for (const auto& row : inst.matrix) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& x : row) r.push_back(x.str());
    costs.push_back(std::move(r));
  }
  return j;
}

/// Canonical compact text: keys in the order mode, weights, costs.
inline std::string write_instance(const Instance& inst) { return instance_to_json(inst).dump(); }

inline Instance instance_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "instance must be an object");
  if (!j.contains("mode") || !j["mode"].is_string()) throw Error(ErrorKind::Parse, "missing \"mode\"");
  if (!j.contains("costs") || !j["costs"].is_array()) throw Error(ErrorKind::Parse, "missing \"costs\"");
  Matrix matrix;
  for (const auto& row : j["costs"]) matrix.push_back(detail::json_row(row, "costs row"));
  Row weights;
  if (j.contains("weights")) weights = detail::json_row(j["weights"], "weights");
  return make_instance(parse_mode(j["mode"].get<std::string>()), std::move(matrix), std::move(weights));
}

inline Instance parse_instance(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return instance_from_json(j);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Instance load_instance(const std::string& path) { return parse_instance(read_text_file(path)); }

/// Allocations as {"bundles": [[items of agent 1], ...]} with 0-based items.
inline nlohmann::ordered_json allocation_to_json(const Allocation& alloc) {
  nlohmann::ordered_json j;
  j["bundles"] = alloc.bundles;
  return j;
}

inline Allocation parse_allocation(std::string_view text) {
  try {
    const auto j = nlohmann::ordered_json::parse(text);
    if (!j.is_object() || !j.contains("bundles")) throw Error(ErrorKind::Parse, "missing \"bundles\"");
    Allocation alloc{j["bundles"].get<std::vector<std::vector<ItemId>>>()};
    return alloc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

}  // namespace subsidy
