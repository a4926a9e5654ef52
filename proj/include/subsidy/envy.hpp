#pragma once

#include <utility>
#include <vector>

#include "subsidy/core.hpp"
#include "subsidy/matching.hpp"

namespace subsidy {

enum class CostBasis { Original, Constructed };

/// Complete digraph on agents; weight[i][j] = c_i(X_i) - c_i(X_j).
struct EnvyGraph {
  Matrix weight;
  CostBasis basis = CostBasis::Original;

  std::size_t agents() const { return weight.size(); }
};

/// Builds the envy graph of `alloc` under an explicit n x m cost matrix.
inline EnvyGraph make_envy_graph(const Matrix& cost, const Allocation& alloc, CostBasis basis = CostBasis::Original) {
  const std::size_t n = alloc.agents();
  Matrix of(n, Row(n));  // of[i][j] = c_i(X_j)
  for (AgentId i = 0; i < n; ++i)
    for (AgentId j = 0; j < n; ++j)
      for (ItemId e : alloc.bundles[j]) of[i][j] += cost[i][e];
  EnvyGraph g{Matrix(n, Row(n)), basis};
  for (AgentId i = 0; i < n; ++i)
    for (AgentId j = 0; j < n; ++j) g.weight[i][j] = of[i][i] - of[i][j];
  return g;
}

inline EnvyGraph make_envy_graph(const Instance& inst, const Allocation& alloc) {
  return make_envy_graph(inst.matrix, alloc, CostBasis::Original);
}

namespace detail {

/// Longest walk weights from every vertex by Bellman-Ford style relaxation,
/// starting from the empty path (0). Returns false if an n-th pass still
/// improves, i.e. a positive cycle exists.
template <typename T>
bool longest_paths(const std::vector<std::vector<T>>& w, std::vector<T>& best) {
  const std::size_t n = w.size();
  best.assign(n, T{});
  for (std::size_t pass = 0; pass < n; ++pass) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        T via = w[i][j] + best[j];
        if (best[i] < via) {
          best[i] = std::move(via);
          changed = true;
        }
      }
    if (!changed) return true;
  }
  return false;
}

}  // namespace detail

inline bool has_positive_cycle(const EnvyGraph& g) {
  Row best;
  return !detail::longest_paths(g.weight, best);
}

/// s_i = weight of the heaviest path leaving i (the empty path counts, so
/// s_i >= 0). Throws PositiveCycle when the allocation is not envy-freeable.
inline SubsidyVector max_path_subsidies(const EnvyGraph& g) {
  SubsidyVector s;
  if (!detail::longest_paths(g.weight, s.values))
    throw Error(ErrorKind::PositiveCycle, "envy graph has a positive-weight cycle");
  return s;
}

/// Per-round perfect matchings of the bounded-subsidy allocation. Items are
/// numbered 0..m-1 for real items and m.. for zero-cost padding.
struct MatchingRounds {
  std::size_t real_items = 0;
  std::size_t dummies = 0;
  std::vector<std::vector<ItemId>> rounds;  // rounds[t][i] = item agent i got in round t

  std::size_t count() const { return rounds.size(); }
  bool is_dummy(ItemId e) const { return e >= real_items; }
};

/// Padded cost: zero for dummy items.
inline Rational padded_cost(const Instance& inst, AgentId i, ItemId e) {
  return e < inst.items() ? inst.at(i, e) : Rational(0);
}

/// ceil(m/n) rounds; each round is a minimum-weight matching of all agents into
/// the items still unallocated (lexicographic tie-break). The allocation is
/// EF1 and envy-freeable. Dummy items are dropped from the returned bundles.
inline std::pair<Allocation, MatchingRounds> bounded_subsidy_allocate(const Instance& inst) {
  if (inst.mode != Mode::Chores) throw Error(ErrorKind::WrongMode, "bounded-subsidy allocation is for chores");
  const std::size_t n = inst.agents();
  const std::size_t m = inst.items();
  const std::size_t rounds = (m + n - 1) / n;
  MatchingRounds mr;
  mr.real_items = m;
  mr.dummies = rounds * n - m;

  std::vector<ItemId> pool(rounds * n);
  for (ItemId e = 0; e < pool.size(); ++e) pool[e] = e;
  Allocation alloc = Allocation::empty(n);
  for (std::size_t t = 0; t < rounds; ++t) {
    Matrix w(n, Row(pool.size()));
    for (AgentId i = 0; i < n; ++i)
      for (std::size_t k = 0; k < pool.size(); ++k) w[i][k] = padded_cost(inst, i, pool[k]);
    const auto match = min_weight_perfect_matching(w);
    std::vector<ItemId> got(n);
    std::vector<bool> used(pool.size(), false);
    for (AgentId i = 0; i < n; ++i) {
      got[i] = pool[match.column[i]];
      used[match.column[i]] = true;
      if (got[i] < m) alloc.bundles[i].push_back(got[i]);
    }
    std::vector<ItemId> rest;
    for (std::size_t k = 0; k < pool.size(); ++k)
      if (!used[k]) rest.push_back(pool[k]);
    pool = std::move(rest);
    mr.rounds.push_back(std::move(got));
  }
  alloc.normalize();
  return {std::move(alloc), std::move(mr)};
}

/// Constructed costs: agent i keeps her own items at c_i, and sees agent j's
/// round-t item at min(c_i(e_j^t), c_i(e_i^{t+1})) for t before the last round
/// (unchanged in the last round). Never above c, equal on own items.
inline Matrix constructed_costs(const Instance& inst, const MatchingRounds& rounds) {
  const std::size_t n = inst.agents();
  const std::size_t T = rounds.count();
  Matrix bar = inst.matrix;
  for (AgentId i = 0; i < n; ++i)
    for (std::size_t t = 0; t < T; ++t)
      for (AgentId j = 0; j < n; ++j) {
        const ItemId e = rounds.rounds[t][j];
        if (j == i || rounds.is_dummy(e) || t + 1 == T) continue;
        bar[i][e] = min(inst.at(i, e), padded_cost(inst, i, rounds.rounds[t + 1][i]));
      }
  return bar;
}

struct EfsResult {
  Allocation allocation;
  SubsidyVector subsidies;
  MatchingRounds rounds;
  Matrix constructed;
};

/// EF1 allocation plus subsidies, at most 1 per agent and n-1 in total, that
/// make it envy-free under the original costs.
inline EfsResult efs_solve(const Instance& inst) {
  auto [alloc, rounds] = bounded_subsidy_allocate(inst);
  Matrix bar = constructed_costs(inst, rounds);
  SubsidyVector s = max_path_subsidies(make_envy_graph(bar, alloc, CostBasis::Constructed));
  return {std::move(alloc), std::move(s), std::move(rounds), std::move(bar)};
}

}  // namespace subsidy
