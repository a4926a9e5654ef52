#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "subsidy/core.hpp"
#include "subsidy/reduction.hpp"

namespace subsidy {

/// Agent i's cost/value of the interval (l, r] of the item line (0, m],
/// where item e (0-based) occupies (e, e+1] and partial items count pro rata.
inline Rational interval_value(const Instance& inst, AgentId i, const Rational& l, const Rational& r) {
  const Rational m(static_cast<std::int64_t>(inst.items()));
  if (l.sign() < 0 || l > r || r > m)
    throw Error(ErrorKind::OutOfRange, "interval (" + l.str() + ", " + r.str() + "] outside (0, " + m.str() + "]");
  Rational total;
  if (l == r) return total;
  const auto first = static_cast<ItemId>(l.floor().get_ui());
  const auto last = static_cast<ItemId>(r.ceil().get_ui());
  for (ItemId e = first; e < last; ++e) {
    const Rational lo = max(l, Rational(static_cast<std::int64_t>(e)));
    const Rational hi = min(r, Rational(static_cast<std::int64_t>(e + 1)));
    if (lo < hi) total += (hi - lo) * inst.at(i, e);
  }
  return total;
}

namespace detail {

/// max { r <= m : value(l, r) <= budget }, solved item by item.
inline Rational farthest_within(const Instance& inst, AgentId i, const Rational& l, const Rational& budget) {
  const std::size_t m = inst.items();
  Rational used;
  Rational pos = l;
  for (auto e = static_cast<ItemId>(l.floor().get_ui()); e < m; ++e) {
    const Rational end(static_cast<std::int64_t>(e + 1));
    if (end <= pos) continue;
    const Rational piece = (end - pos) * inst.at(i, e);
    if (used + piece > budget) return pos + (budget - used) / inst.at(i, e);
    used += piece;
    pos = end;
  }
  return Rational(static_cast<std::int64_t>(m));
}

/// min { r : value(l, r) >= target }, or nullopt when the rest falls short.
inline std::optional<Rational> nearest_reaching(const Instance& inst, AgentId i, const Rational& l,
                                                const Rational& target) {
  if (target.sign() <= 0) return l;
  const std::size_t m = inst.items();
  Rational got;
  Rational pos = l;
  for (auto e = static_cast<ItemId>(l.floor().get_ui()); e < m; ++e) {
    const Rational end(static_cast<std::int64_t>(e + 1));
    if (end <= pos) continue;
    const Rational& v = inst.at(i, e);
    const Rational piece = (end - pos) * v;
    if (v.sign() > 0 && got + piece >= target) return pos + (target - got) / v;
    got += piece;
    pos = end;
  }
  return std::nullopt;
}

}  // namespace detail

/// Moving knife over an identical-ordering instance.
///
/// Chores: each remaining agent i marks r_i = max{r : c_i(l, r) <= PROP_i};
/// the agent with the largest mark (lowest index on ties) takes (l, r_i].
/// Goods: r_i = min{r : v_i(l, r) >= PROP_i}; the smallest mark wins, and the
/// final agent takes the remainder. The result is fractionally proportional
/// with at most n-1 cut points.
inline std::pair<CutSequence, FracAllocation> moving_knife(const Instance& inst) {
  if (!is_ido(inst)) throw Error(ErrorKind::NotIdo, "moving_knife needs an identical-ordering instance");
  const std::size_t n = inst.agents();
  const Rational m(static_cast<std::int64_t>(inst.items()));

  // Unweighted proportional shares, c_i(M)/n.
  Row share(n);
  for (AgentId i = 0; i < n; ++i) share[i] = inst.row_total(i) / Rational(static_cast<std::int64_t>(n));

  std::vector<bool> done(n, false);
  CutSequence cuts;
  cuts.m = inst.items();
  Row ends;
  Rational l;

  auto take = [&](AgentId who, const Rational& r) {
    cuts.order.push_back(who);
    ends.push_back(r);
    done[who] = true;
    l = r;
  };

  for (std::size_t left = n; left > 0; --left) {
    if (left == 1 || (inst.mode == Mode::Chores && l == m)) break;
    std::optional<AgentId> pick;
    Rational pick_r;
    for (AgentId i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (inst.mode == Mode::Chores) {
        const Rational r = detail::farthest_within(inst, i, l, share[i]);
        if (!pick || r > pick_r) pick = i, pick_r = r;
      } else {
        const auto r = detail::nearest_reaching(inst, i, l, share[i]);
        if (r && (!pick || *r < pick_r)) pick = i, pick_r = *r;
      }
    }
    if (!pick) throw std::logic_error("moving_knife: no agent can reach her share");
    take(*pick, pick_r);
  }
  // The last agent takes the rest; in chores mode any agents left once the
  // knife hit m get empty intervals.
  for (AgentId i = 0; i < n; ++i)
    if (!done[i]) take(i, m);

  cuts.cuts.assign(ends.begin(), ends.end() - 1);
  FracAllocation frac = cuts.fractions();
  return {std::move(cuts), std::move(frac)};
}

}  // namespace subsidy
