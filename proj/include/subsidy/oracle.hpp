#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "subsidy/core.hpp"
#include "subsidy/envy.hpp"

namespace subsidy {

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

/// Throws TooLarge unless n^m <= cap.
inline void check_oracle_size(const Instance& inst, std::uint64_t cap) {
  const std::uint64_t n = inst.agents();
  std::uint64_t count = 1;
  for (std::size_t e = 0; e < inst.items(); ++e) {
    if (n != 0 && count > cap / n) {
      throw Error(ErrorKind::TooLarge, std::to_string(n) + "^" + std::to_string(inst.items()) +
                                           " allocations exceed the cap of " + std::to_string(cap));
    }
    count *= n;
  }
  if (count > cap) throw Error(ErrorKind::TooLarge, "allocation count exceeds the cap");
}

namespace detail {

/// Instance data in some exact number type T: entry[i][e] and share[i] are
/// the originals multiplied by `scale`.
template <typename T>
struct Scaled {
  std::vector<std::vector<T>> entry;
  std::vector<T> share;
  Rational scale{1};
};

inline Scaled<Rational> scale_rational(const Instance& inst) {
  Scaled<Rational> s;
  s.entry = inst.matrix;
  for (AgentId i = 0; i < inst.agents(); ++i) s.share.push_back(proportional_share(inst, i));
  return s;
}

/// Multiplies through by lcm(entry denominators) * lcm(weight denominators)
/// when every partial sum then fits comfortably in 64 bits.
inline std::optional<Scaled<std::int64_t>> scale_int(const Instance& inst) {
  mpz_class d = 1, w = 1;
  for (const auto& row : inst.matrix)
    for (const auto& x : row) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.denominator().get_mpz_t());
  for (const auto& x : inst.weights) mpz_lcm(w.get_mpz_t(), w.get_mpz_t(), x.denominator().get_mpz_t());
  const mpz_class k = d * w;
  // entries are in [0,1], so every sum is at most m * k
  const mpz_class limit = mpz_class(1) << 60;
  if (k * mpz_class(static_cast<unsigned long>(inst.items() + 1)) >= limit) return std::nullopt;

  Scaled<std::int64_t> s;
  s.scale = Rational(mpq_class(k));
  auto as_int = [&](const Rational& x) {
    const mpz_class v = x.numerator() * (k / x.denominator());
    return static_cast<std::int64_t>(v.get_si());
  };
  for (AgentId i = 0; i < inst.agents(); ++i) {
    std::vector<std::int64_t> row;
    for (const auto& x : inst.matrix[i]) row.push_back(as_int(x));
    s.entry.push_back(std::move(row));
    s.share.push_back(as_int(proportional_share(inst, i)));
  }
  return s;
}

inline Rational to_rational(const Rational& x) { return x; }
inline Rational to_rational(std::int64_t x) { return Rational(x); }

template <typename T>
T positive_part(const T& x) {
  return x > T{} ? x : T{};
}

/// Depth-first search over item -> agent maps with branch and bound.
template <typename T>
class SubsidySearch {
 public:
  SubsidySearch(const Scaled<T>& s, Mode mode, std::vector<ItemId> order)
      : s_(s), chores_(mode == Mode::Chores), order_(std::move(order)), n_(s.entry.size()) {
    load_.assign(n_, T{});
    owner_.assign(order_.size(), 0);
    // rest_[k][i]: agent i's value for order_[k..]
    rest_.assign(order_.size() + 1, std::vector<T>(n_, T{}));
    for (std::size_t k = order_.size(); k-- > 0;)
      for (AgentId i = 0; i < n_; ++i) rest_[k][i] = rest_[k + 1][i] + s_.entry[i][order_[k]];
  }

  void run() { dfs(0); }

  const std::optional<T>& best() const { return best_; }
  const std::vector<AgentId>& witness() const { return witness_; }

 private:
  T bound(std::size_t k) const {
    T total{};
    for (AgentId i = 0; i < n_; ++i)
      total += chores_ ? positive_part(T(load_[i] - s_.share[i]))
                       : positive_part(T(s_.share[i] - load_[i] - rest_[k][i]));
    return total;
  }

  void dfs(std::size_t k) {
    if (best_ && *best_ == T{}) return;
    const T lb = bound(k);
    if (best_ && !(lb < *best_)) return;
    if (k == order_.size()) {
      best_ = lb;
      witness_ = owner_;
      return;
    }
    const ItemId e = order_[k];
    for (AgentId i = 0; i < n_; ++i) {
      owner_[k] = i;
      load_[i] += s_.entry[i][e];
      dfs(k + 1);
      load_[i] -= s_.entry[i][e];
    }
  }

  const Scaled<T>& s_;
  bool chores_;
  std::vector<ItemId> order_;
  std::size_t n_;
  std::vector<T> load_;
  std::vector<AgentId> owner_;
  std::vector<std::vector<T>> rest_;
  std::optional<T> best_;
  std::vector<AgentId> witness_;
};

template <typename T>
std::pair<Rational, Allocation> min_total_subsidy(const Instance& inst, const Scaled<T>& s) {
  const std::size_t m = inst.items();
  // Heavy items first tightens the bound early.
  std::vector<ItemId> order(m);
  std::vector<Rational> weight(m);
  for (ItemId e = 0; e < m; ++e) {
    order[e] = e;
    for (AgentId i = 0; i < inst.agents(); ++i) weight[e] = max(weight[e], inst.at(i, e));
  }
  std::stable_sort(order.begin(), order.end(), [&](ItemId a, ItemId b) { return weight[a] > weight[b]; });

  SubsidySearch<T> search(s, inst.mode, order);
  search.run();
  std::vector<AgentId> owner(m);
  for (std::size_t k = 0; k < m; ++k) owner[order[k]] = search.witness()[k];
  Allocation alloc = Allocation::from_owners(owner, inst.agents());
  return {to_rational(*search.best()) / s.scale, std::move(alloc)};
}

/// Sum of max-path subsidies of an allocation given c_i(X_j) for all i, j, or
/// nullopt when the envy graph has a positive cycle.
template <typename T>
std::optional<T> envy_subsidy_total(const std::vector<std::vector<T>>& of) {
  const std::size_t n = of.size();
  std::vector<std::vector<T>> w(n, std::vector<T>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i][j] = of[i][i] - of[i][j];
  std::vector<T> l;
  if (!longest_paths(w, l)) return std::nullopt;
  T total{};
  for (const auto& x : l) total += x;
  return total;
}

template <typename T>
Rational min_total_efs_subsidy(const Instance& inst, const Scaled<T>& s) {
  const std::size_t n = inst.agents();
  const std::size_t m = inst.items();
  std::vector<std::vector<T>> of(n, std::vector<T>(n, T{}));  // of[i][j] = c_i(X_j)
  std::optional<T> best;
  auto dfs = [&](auto&& self, ItemId e) -> void {
    if (best && *best == T{}) return;
    if (e == m) {
      const auto total = envy_subsidy_total(of);
      if (total && (!best || *total < *best)) best = total;
      return;
    }
    for (AgentId j = 0; j < n; ++j) {
      for (AgentId i = 0; i < n; ++i) of[i][j] += s.entry[i][e];
      self(self, e + 1);
      for (AgentId i = 0; i < n; ++i) of[i][j] -= s.entry[i][e];
    }
  };
  dfs(dfs, 0);
  // Some allocation (e.g. welfare-optimal) is always envy-freeable.
  return to_rational(*best) / s.scale;
}

}  // namespace detail

/// Exact minimum of the total proportional subsidy over all n^m allocations,
/// with a minimising allocation.
inline std::pair<Rational, Allocation> oracle_min_total_subsidy(const Instance& inst,
                                                               std::uint64_t cap = kDefaultOracleCap) {
  check_oracle_size(inst, cap);
  if (auto fast = detail::scale_int(inst)) return detail::min_total_subsidy(inst, *fast);
  return detail::min_total_subsidy(inst, detail::scale_rational(inst));
}

/// Exact minimum total subsidy, over all envy-freeable allocations, of the
/// max-path subsidies that make it envy-free. Chores only.
inline Rational oracle_min_total_efs_subsidy(const Instance& inst, std::uint64_t cap = kDefaultOracleCap) {
  if (inst.mode != Mode::Chores) throw Error(ErrorKind::WrongMode, "the envy-freeness oracle is for chores");
  check_oracle_size(inst, cap);
  if (auto fast = detail::scale_int(inst)) return detail::min_total_efs_subsidy(inst, *fast);
  return detail::min_total_efs_subsidy(inst, detail::scale_rational(inst));
}

}  // namespace subsidy
