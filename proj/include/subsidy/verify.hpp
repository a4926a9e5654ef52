#pragma once

#include <optional>
#include <vector>

#include "subsidy/core.hpp"

namespace subsidy {

/// Per-agent minimum payment making (alloc, s) weighted-proportional:
/// chores s_i = max(c_i(X_i) - share_i, 0), goods s_i = max(share_i - v_i(X_i), 0).
inline SubsidyVector min_subsidy_vector(const Instance& inst, const Allocation& alloc) {
  SubsidyVector s;
  s.values.reserve(inst.agents());
  for (AgentId i = 0; i < inst.agents(); ++i) {
    const Rational share = proportional_share(inst, i);
    const Rational have = bundle_value(inst, i, alloc.bundles[i]);
    const Rational gap = inst.mode == Mode::Chores ? have - share : share - have;
    s.values.push_back(gap.sign() > 0 ? gap : Rational(0));
  }
  return s;
}

struct FairnessReport {
  bool prop = true;   // weighted share when weights are non-uniform
  bool prop1 = true;
  bool propx = true;
  bool props = true;  // only meaningful with a subsidy vector
  bool ef = true;
  bool ef1 = true;
  std::optional<bool> efs;  // set iff a subsidy vector was supplied
  Row shares;
  Row values;    // c_i(X_i) or v_i(X_i)
  Row deficits;  // min_subsidy_vector entries
};

namespace detail {

inline bool within_share(Mode mode, const Rational& value, const Rational& share) {
  return mode == Mode::Chores ? value <= share : value >= share;
}

}  // namespace detail

/// Evaluates every fairness predicate exactly. Chores relaxations remove an
/// item from the agent's own bundle; goods relaxations add one from outside.
inline FairnessReport fairness_report(const Instance& inst, const Allocation& alloc,
                                      const std::optional<SubsidyVector>& s = std::nullopt) {
  const std::size_t n = inst.agents();
  const std::size_t m = inst.items();
  const bool chores = inst.mode == Mode::Chores;
  const auto owner = alloc.owners(m);

  FairnessReport r;
  r.deficits = min_subsidy_vector(inst, alloc).values;
  // cross[i][j] = agent i's evaluation of bundle j
  Matrix cross(n, Row(n));
  for (AgentId i = 0; i < n; ++i)
    for (AgentId j = 0; j < n; ++j) cross[i][j] = bundle_value(inst, i, alloc.bundles[j]);

  for (AgentId i = 0; i < n; ++i) {
    const Rational share = proportional_share(inst, i);
    const Rational& own = cross[i][i];
    r.shares.push_back(share);
    r.values.push_back(own);

    const bool prop_i = detail::within_share(inst.mode, own, share);
    r.prop = r.prop && prop_i;

    bool one = prop_i;
    bool any = true;
    if (chores) {
      for (ItemId e : alloc.bundles[i]) {
        const bool ok = own - inst.at(i, e) <= share;
        one = one || ok;
        any = any && ok;
      }
    } else {
      for (ItemId e = 0; e < m; ++e) {
        if (owner[e] == i) continue;
        const bool ok = own + inst.at(i, e) >= share;
        one = one || ok;
        any = any && ok;
      }
    }
    r.prop1 = r.prop1 && one;
    r.propx = r.propx && any;

    if (s) r.props = r.props && detail::within_share(inst.mode, chores ? own - s->values[i] : own + s->values[i], share);

    for (AgentId j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool ef_ij = chores ? own <= cross[i][j] : own >= cross[i][j];
      r.ef = r.ef && ef_ij;
      bool ef1_ij = ef_ij;
      if (!ef1_ij) {
        if (chores) {
          for (ItemId e : alloc.bundles[i]) ef1_ij = ef1_ij || own - inst.at(i, e) <= cross[i][j];
        } else {
          for (ItemId e : alloc.bundles[j]) ef1_ij = ef1_ij || own >= cross[i][j] - inst.at(i, e);
        }
      }
      r.ef1 = r.ef1 && ef1_ij;
    }
  }

  if (s) {
    bool efs = true;
    for (AgentId i = 0; i < n; ++i)
      for (AgentId j = 0; j < n; ++j) {
        if (i == j) continue;
        efs = efs && (chores ? cross[i][i] - s->values[i] <= cross[i][j] - s->values[j]
                             : cross[i][i] + s->values[i] >= cross[i][j] + s->values[j]);
      }
    r.efs = efs;
  } else {
    r.props = r.prop;
  }
  return r;
}

inline bool is_prop1(const Instance& inst, const Allocation& alloc) { return fairness_report(inst, alloc).prop1; }
inline bool is_propx(const Instance& inst, const Allocation& alloc) { return fairness_report(inst, alloc).propx; }
inline bool is_ef1(const Instance& inst, const Allocation& alloc) { return fairness_report(inst, alloc).ef1; }

}  // namespace subsidy
