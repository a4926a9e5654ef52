#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "subsidy/core.hpp"
#include "subsidy/rounding.hpp"
#include "subsidy/verify.hpp"

namespace subsidy {

struct Deactivation {
  AgentId agent = 0;
  ItemId item = 0;
  Rational fraction;  // share of `item` taken in the step that filled her up
};

struct RoundTrace {
  std::vector<ItemId> order;               // item processing order
  std::vector<Deactivation> deactivations; // in the order they happened
  std::vector<AgentId> still_active;       // agents active at termination
};

namespace detail {

/// c/total, read as 0 when the total is 0.
inline Rational relative(const Rational& c, const Rational& total) {
  return total.is_zero() ? Rational(0) : c / total;
}

}  // namespace detail

/// Fractional bid-and-take. Items are handed out in index order; each one
/// flows continuously to the active agent with the smallest c_i(e)/c_i(M)
/// (chores) or largest v_i(e)/v_i(M) (goods), lowest index on ties, until the
/// item is gone or the agent reaches her weighted share and drops out. In goods
/// mode the last active agent takes everything left. Output is fractionally
/// weighted-proportional with at most n-1 fractional items.
inline std::pair<FracAllocation, RoundTrace> fractional_bid_and_take(const Instance& inst) {
  const std::size_t n = inst.agents();
  const std::size_t m = inst.items();
  const bool chores = inst.mode == Mode::Chores;

  Row total(n), share(n), have(n);
  for (AgentId i = 0; i < n; ++i) {
    total[i] = inst.row_total(i);
    share[i] = proportional_share(inst, i);
    if (chores && total[i].is_zero())
      throw Error(ErrorKind::DegenerateAgent, "agent " + std::to_string(i + 1) + " has zero total cost");
  }

  FracAllocation frac{Matrix(n, Row(m)), Provenance::BidAndTake};
  RoundTrace trace;
  trace.order.resize(m);
  std::iota(trace.order.begin(), trace.order.end(), ItemId{0});
  std::vector<bool> active(n, true);
  std::size_t active_count = n;
  Row remaining(m, Rational(1));

  auto dump_rest_on = [&](AgentId last, ItemId from) {
    for (ItemId e = from; e < m; ++e) {
      if (remaining[e].is_zero()) continue;
      frac.x[last][e] += remaining[e];
      have[last] += remaining[e] * inst.at(last, e);
      remaining[e] = Rational(0);
    }
  };

  for (ItemId j = 0; j < m;) {
    if (active_count == 0) throw std::logic_error("fractional_bid_and_take: every agent is full");
    std::optional<AgentId> pick;
    for (AgentId i = 0; i < n; ++i) {
      if (!active[i]) continue;
      if (!pick) {
        pick = i;
        continue;
      }
      const Rational mine = detail::relative(inst.at(i, j), total[i]);
      const Rational theirs = detail::relative(inst.at(*pick, j), total[*pick]);
      const bool better = chores ? mine < theirs : mine > theirs;
      if (better) pick = i;
    }
    const AgentId i = *pick;
    const Rational& c = inst.at(i, j);
    if (have[i] + remaining[j] * c > share[i]) {
      const Rational x = (share[i] - have[i]) / c;
      frac.x[i][j] += x;
      have[i] = share[i];
      remaining[j] -= x;
      active[i] = false;
      --active_count;
      trace.deactivations.push_back({i, j, x});
      if (!chores && active_count == 1) {
        AgentId last = 0;
        while (!active[last]) ++last;
        dump_rest_on(last, j);
        break;
      }
    } else {
      frac.x[i][j] += remaining[j];
      have[i] += remaining[j] * c;
      remaining[j] = Rational(0);
      ++j;
    }
  }
  for (AgentId i = 0; i < n; ++i)
    if (active[i]) trace.still_active.push_back(i);
  return {std::move(frac), std::move(trace)};
}

/// Rounds every fractional item to its largest holder (lowest index on ties).
/// Total subsidy is at most (n-1)/2.
inline RoundingOutcome round_largest_fraction(const FracAllocation& frac, const Instance& inst) {
  RoundingOutcome out;
  out.scheme = RoundingScheme::LargestFraction;
  out.allocation = Allocation::empty(inst.agents());
  for (ItemId e = 0; e < inst.items(); ++e) {
    const auto k = frac.holders(e);
    if (k.empty()) throw Error(ErrorKind::InvalidArgument, "item " + std::to_string(e + 1) + " has no holder");
    AgentId best = k.front();
    for (AgentId i : k)
      if (frac.x[i][e] > frac.x[best][e]) best = i;
    out.allocation.bundles[best].push_back(e);
    if (k.size() >= 2) {
      FractionalGroup g;
      g.item = e;
      g.sharers = k;
      for (AgentId i : k) g.shares.push_back(frac.x[i][e]);
      g.recipient = best;
      out.groups.push_back(std::move(g));
    }
  }
  out.subsidies = min_subsidy_vector(inst, out.allocation);
  return out;
}

/// Charge (|k(e)|-1)/|k(e)| per fractional item; covers the rounding subsidy.
inline Rational largest_fraction_charge(const FractionalGroup& g) {
  const auto k = static_cast<std::int64_t>(g.sharers.size());
  return Rational(k - 1, k);
}

inline Rational weighted_general_bound(std::size_t n) {
  return Rational(static_cast<std::int64_t>(n) - 1, 2);
}

}  // namespace subsidy
