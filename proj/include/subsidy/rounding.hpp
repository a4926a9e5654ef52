#pragma once

#include <utility>
#include <vector>

#include "subsidy/core.hpp"
#include "subsidy/verify.hpp"

namespace subsidy {

enum class RoundingScheme { Up, Down, Threshold, LargestFraction };

inline const char* to_string(RoundingScheme s) {
  switch (s) {
    case RoundingScheme::Up: return "up";
    case RoundingScheme::Down: return "down";
    case RoundingScheme::Threshold: return "threshold";
    case RoundingScheme::LargestFraction: return "largest-fraction";
  }
  return "?";
}

/// One fractional item of a moving-knife allocation. `sharers` are the agents
/// holding a positive share, in picking order; an item cut k times has k+1
/// sharers.
struct FractionalGroup {
  ItemId item = 0;
  std::vector<AgentId> sharers;
  Row shares;  // aligned with sharers, sums to 1
  AgentId recipient = 0;

  /// 0/1 indicator: 1 iff the item went to its earliest sharer.
  bool to_earliest() const { return recipient == sharers.front(); }
};

struct RoundingOutcome {
  Allocation allocation;
  SubsidyVector subsidies;
  RoundingScheme scheme = RoundingScheme::Up;
  std::vector<FractionalGroup> groups;

  std::vector<int> indicator() const {
    std::vector<int> x;
    for (const auto& g : groups) x.push_back(g.to_earliest() ? 1 : 0);
    return x;
  }
};

/// Fractional items of a cut sequence, each with its sharers in pick order.
inline std::vector<FractionalGroup> fractional_groups(const CutSequence& cuts) {
  const FracAllocation frac = cuts.fractions();
  std::vector<FractionalGroup> groups;
  for (ItemId e = 0; e < cuts.m; ++e) {
    FractionalGroup g;
    g.item = e;
    for (AgentId a : cuts.order)
      if (frac.x[a][e].sign() > 0) {
        g.sharers.push_back(a);
        g.shares.push_back(frac.x[a][e]);
      }
    if (g.sharers.size() >= 2) groups.push_back(std::move(g));
  }
  return groups;
}

namespace detail {

template <typename Choose>
RoundingOutcome round_cuts(const CutSequence& cuts, const Instance& inst, RoundingScheme scheme, Choose choose) {
  const FracAllocation frac = cuts.fractions();
  RoundingOutcome out;
  out.scheme = scheme;
  out.allocation = Allocation::empty(inst.agents());
  out.groups = fractional_groups(cuts);
  std::size_t next_group = 0;
  for (ItemId e = 0; e < inst.items(); ++e) {
    if (next_group < out.groups.size() && out.groups[next_group].item == e) {
      FractionalGroup& g = out.groups[next_group++];
      g.recipient = g.sharers[choose(g)];
      out.allocation.bundles[g.recipient].push_back(e);
      continue;
    }
    for (AgentId i = 0; i < inst.agents(); ++i)
      if (frac.x[i][e].sign() > 0) out.allocation.bundles[i].push_back(e);
  }
  out.subsidies = min_subsidy_vector(inst, out.allocation);
  return out;
}

inline std::size_t largest_share(const FractionalGroup& g) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < g.shares.size(); ++k)
    if (g.shares[k] > g.shares[best]) best = k;
  return best;
}

}  // namespace detail

/// Chores: every fractional item goes to its earliest sharer.
inline RoundingOutcome round_up(const CutSequence& cuts, const Instance& inst) {
  if (inst.mode != Mode::Chores) throw Error(ErrorKind::WrongMode, "up rounding is for chores");
  return detail::round_cuts(cuts, inst, RoundingScheme::Up, [](const FractionalGroup&) { return std::size_t{0}; });
}

/// Goods: every fractional item goes to its latest sharer.
inline RoundingOutcome round_down(const CutSequence& cuts, const Instance& inst) {
  if (inst.mode != Mode::Goods) throw Error(ErrorKind::WrongMode, "down rounding is for goods");
  return detail::round_cuts(cuts, inst, RoundingScheme::Down,
                            [](const FractionalGroup& g) { return g.sharers.size() - 1; });
}

/// Every fractional item goes to its largest-share holder, earliest on ties
/// (so a single cut at exactly 1/2 rounds to the earlier agent).
inline RoundingOutcome round_threshold(const CutSequence& cuts, const Instance& inst) {
  return detail::round_cuts(cuts, inst, RoundingScheme::Threshold, detail::largest_share);
}

/// The cheaper of {up (chores) | down (goods)} and threshold rounding;
/// threshold wins ties. Total subsidy is at most n/4.
inline RoundingOutcome round_best(const CutSequence& cuts, const Instance& inst) {
  RoundingOutcome directional = inst.mode == Mode::Chores ? round_up(cuts, inst) : round_down(cuts, inst);
  RoundingOutcome threshold = round_threshold(cuts, inst);
  return directional.subsidies.total() < threshold.subsidies.total() ? std::move(directional) : std::move(threshold);
}

/// Money charged to a fractional item under threshold rounding:
/// min(first share, last share) + 1/2 per cut beyond the first.
inline Rational threshold_charge(const FractionalGroup& g) {
  const auto extra = static_cast<std::int64_t>(g.sharers.size()) - 2;
  return min(g.shares.front(), g.shares.back()) + Rational(extra, 2);
}

/// Per-agent upper bounds on the subsidy of directional rounding (up for
/// chores, down for goods), in terms of the shares only. For chores an agent
/// gains the rest of the item closing her interval and loses her share of the
/// item opening it, so s <= max(gain - loss, 0); goods mirror this.
inline Row directional_subsidy_bounds(const CutSequence& cuts, const Instance& inst) {
  Row gain(inst.agents()), loss(inst.agents());
  for (const auto& g : fractional_groups(cuts)) {
    const std::size_t keep = inst.mode == Mode::Chores ? 0 : g.sharers.size() - 1;
    for (std::size_t k = 0; k < g.sharers.size(); ++k) {
      if (k == keep)
        gain[g.sharers[k]] += Rational(1) - g.shares[k];
      else
        loss[g.sharers[k]] += g.shares[k];
    }
  }
  Row bound(inst.agents());
  for (AgentId a = 0; a < inst.agents(); ++a) {
    const Rational d = inst.mode == Mode::Chores ? gain[a] - loss[a] : loss[a] - gain[a];
    bound[a] = d.sign() > 0 ? d : Rational(0);
  }
  return bound;
}

}  // namespace subsidy
