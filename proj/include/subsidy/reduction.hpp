#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "subsidy/core.hpp"

namespace subsidy {

/// Per-agent rank permutations: rank[i][k] is the original index of agent i's
/// k-th item in the identical-ordering instance (most costly / most valuable
/// first, ties by original index).
struct IdoCertificate {
  std::vector<std::vector<ItemId>> rank;
  Instance transformed;
};

inline bool is_ido(const Instance& inst) {
  for (const Row& row : inst.matrix)
    for (std::size_t e = 1; e < row.size(); ++e)
      if (row[e - 1] < row[e]) return false;
  return true;
}

/// Sorts every row non-increasingly. Row totals are preserved.
inline IdoCertificate to_ido(const Instance& inst) {
  IdoCertificate cert;
  cert.transformed = inst;
  const std::size_t m = inst.items();
  for (AgentId i = 0; i < inst.agents(); ++i) {
    std::vector<ItemId> perm(m);
    std::iota(perm.begin(), perm.end(), ItemId{0});
    const Row& row = inst.matrix[i];
    std::stable_sort(perm.begin(), perm.end(), [&](ItemId a, ItemId b) { return row[a] > row[b]; });
    for (std::size_t k = 0; k < m; ++k) cert.transformed.matrix[i][k] = row[perm[k]];
    cert.rank.push_back(std::move(perm));
  }
  return cert;
}

/// Maps an allocation of the transformed instance back to the original one.
///
/// Chores go through ranks m..1 and the holder of each rank takes her
/// cheapest remaining original item; goods go through ranks 1..m and the
/// holder takes her most valuable one. Lowest index on ties. Each pick is no
/// worse for her than the rank it replaces, so every agent's lifted bundle
/// dominates her transformed bundle.
inline Allocation lift_allocation(const Allocation& ido_alloc, const IdoCertificate& /*cert*/, const Instance& inst) {
  const std::size_t m = inst.items();
  const auto holder = ido_alloc.owners(m);
  std::vector<bool> taken(m, false);
  Allocation out = Allocation::empty(inst.agents());
  const bool chores = inst.mode == Mode::Chores;
  for (std::size_t k = 0; k < m; ++k) {
    const AgentId i = holder[chores ? m - 1 - k : k];
    std::optional<ItemId> best;
    for (ItemId e = 0; e < m; ++e) {
      if (taken[e]) continue;
      if (!best) {
        best = e;
        continue;
      }
      const bool better = chores ? inst.at(i, e) < inst.at(i, *best) : inst.at(i, e) > inst.at(i, *best);
      if (better) best = e;
    }
    taken[*best] = true;
    out.bundles[i].push_back(*best);
  }
  out.normalize();
  return out;
}

}  // namespace subsidy
