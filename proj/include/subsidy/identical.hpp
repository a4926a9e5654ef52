#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "subsidy/core.hpp"

namespace subsidy {

struct LoadBalanceTrace {
  std::vector<ItemId> order;                  // items in the order they were assigned
  std::vector<AgentId> recipient;             // recipient[k] received order[k]
  std::vector<std::optional<ItemId>> last;    // last item each agent received
};

namespace detail {

inline void require_identical_chores(const Instance& inst, const char* who) {
  if (inst.mode != Mode::Chores) throw Error(ErrorKind::WrongMode, std::string(who) + " allocates chores only");
  if (!inst.identical_rows()) throw Error(ErrorKind::NotIdentical, std::string(who) + " needs identical cost rows");
}

inline std::vector<ItemId> by_decreasing_cost(const Row& cost) {
  std::vector<ItemId> order(cost.size());
  std::iota(order.begin(), order.end(), ItemId{0});
  std::stable_sort(order.begin(), order.end(), [&](ItemId a, ItemId b) { return cost[a] > cost[b]; });
  return order;
}

/// Greedy assignment in decreasing cost order to the agent maximizing
/// share_i - c(X_i), lowest index on ties.
inline std::pair<Allocation, LoadBalanceTrace> greedy_by_slack(const Instance& inst) {
  const std::size_t n = inst.agents();
  const Row& cost = inst.matrix.front();
  Row slack(n);
  for (AgentId i = 0; i < n; ++i) slack[i] = proportional_share(inst, i);

  LoadBalanceTrace trace;
  trace.order = by_decreasing_cost(cost);
  trace.last.assign(n, std::nullopt);
  Allocation alloc = Allocation::empty(n);
  for (ItemId e : trace.order) {
    AgentId pick = 0;
    for (AgentId i = 1; i < n; ++i)
      if (slack[i] > slack[pick]) pick = i;
    slack[pick] -= cost[e];
    alloc.bundles[pick].push_back(e);
    trace.recipient.push_back(pick);
    trace.last[pick] = e;
  }
  alloc.normalize();
  return {std::move(alloc), std::move(trace)};
}

}  // namespace detail

/// Load balancing for identical costs: items by decreasing cost, each to the
/// currently cheapest bundle. The result is PROPX.
inline std::pair<Allocation, LoadBalanceTrace> load_balance(const Instance& inst) {
  detail::require_identical_chores(inst, "load_balance");
  if (!inst.uniform_weights())
    throw Error(ErrorKind::InvalidArgument, "load_balance is unweighted; use weighted_load_balance");
  // With equal shares, max slack is min bundle cost.
  return detail::greedy_by_slack(inst);
}

/// Weighted load balancing: each item to the agent with the largest slack
/// WPROP_i - c(X_i). The result is WPROPX.
inline std::pair<Allocation, LoadBalanceTrace> weighted_load_balance(const Instance& inst) {
  detail::require_identical_chores(inst, "weighted_load_balance");
  return detail::greedy_by_slack(inst);
}

/// Tight bound on the total subsidy for identical agents:
/// n/4 for even n, (n^2-1)/(4n) for odd n.
inline Rational identical_subsidy_bound(std::size_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  if (n % 2 == 0) return Rational(nn, 4);
  return Rational(nn * nn - 1, 4 * nn);
}

}  // namespace subsidy
