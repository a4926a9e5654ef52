#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subsidy/error.hpp"
#include "subsidy/rational.hpp"

namespace subsidy {

using AgentId = std::size_t;
using ItemId = std::size_t;
using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

enum class Mode { Chores, Goods };

inline const char* to_string(Mode mode) { return mode == Mode::Chores ? "chores" : "goods"; }

inline Mode parse_mode(std::string_view text) {
  if (text == "chores") return Mode::Chores;
  if (text == "goods") return Mode::Goods;
  throw Error(ErrorKind::Parse, "unknown mode '" + std::string(text) + "'");
}

/// A fair-division instance. `matrix[i][e]` is agent i's cost (chores) or
/// value (goods) for item e. Construct through make_instance() or
/// validate_instance() so the invariants below hold:
///   - every entry in [0,1]
///   - weights strictly positive, summing to exactly 1 (uniform 1/n if unweighted)
struct Instance {
  Mode mode = Mode::Chores;
  Matrix matrix;
  Row weights;

  std::size_t agents() const { return matrix.size(); }
  std::size_t items() const { return matrix.empty() ? 0 : matrix.front().size(); }

  const Rational& at(AgentId i, ItemId e) const { return matrix[i][e]; }

  Rational row_total(AgentId i) const {
    Rational total;
    for (const auto& c : matrix[i]) total += c;
    return total;
  }

  bool uniform_weights() const {
    const Rational uniform(1, static_cast<std::int64_t>(agents()));
    return std::all_of(weights.begin(), weights.end(), [&](const Rational& w) { return w == uniform; });
  }

  bool identical_rows() const {
    return std::all_of(matrix.begin(), matrix.end(), [&](const Row& r) { return r == matrix.front(); });
  }
};

/// Checks every Instance invariant; returns the instance unchanged on success.
inline Instance validate_instance(Instance raw) {
  const std::size_t n = raw.matrix.size();
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "instance needs at least one agent");
  const std::size_t m = raw.matrix.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    if (raw.matrix[i].size() != m)
      throw Error(ErrorKind::DimensionMismatch, "row " + std::to_string(i + 1) + " has " +
                                                    std::to_string(raw.matrix[i].size()) + " entries, expected " +
                                                    std::to_string(m));
    for (std::size_t e = 0; e < m; ++e) {
      const Rational& c = raw.matrix[i][e];
      if (c.sign() < 0 || c > Rational(1))
        throw Error(ErrorKind::OutOfRange, "entry (" + std::to_string(i + 1) + "," + std::to_string(e + 1) +
                                               ") = " + c.str() + " is outside [0,1]");
    }
  }
  if (raw.weights.empty()) raw.weights.assign(n, Rational(1, static_cast<std::int64_t>(n)));
  if (raw.weights.size() != n)
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(raw.weights.size()) + " weights for " + std::to_string(n) + " agents");
  Rational sum;
  for (std::size_t i = 0; i < n; ++i) {
    if (raw.weights[i].sign() <= 0)
      throw Error(ErrorKind::NonPositiveWeight, "weight of agent " + std::to_string(i + 1) + " is " +
                                                    raw.weights[i].str());
    sum += raw.weights[i];
  }
  if (sum != Rational(1)) throw Error(ErrorKind::BadWeights, "weights sum to " + sum.str() + ", expected 1");
  return raw;
}

inline Instance make_instance(Mode mode, Matrix matrix, Row weights = {}) {
  return validate_instance(Instance{mode, std::move(matrix), std::move(weights)});
}

/// w_i * (agent i's row total). Equals c_i(M)/n for unweighted instances.
inline Rational proportional_share(const Instance& inst, AgentId i) {
  return inst.weights[i] * inst.row_total(i);
}

inline Rational bundle_value(const Instance& inst, AgentId i, std::span<const ItemId> items) {
  Rational total;
  for (ItemId e : items) total += inst.at(i, e);
  return total;
}

/// Fraction-weighted value of a row of shares x_e in [0,1].
inline Rational bundle_value(const Instance& inst, AgentId i, std::span<const Rational> fractions) {
  Rational total;
  for (ItemId e = 0; e < fractions.size(); ++e)
    if (!fractions[e].is_zero()) total += fractions[e] * inst.at(i, e);
  return total;
}

/// Integral allocation: bundles[i] holds agent i's items, sorted ascending.
struct Allocation {
  std::vector<std::vector<ItemId>> bundles;

  static Allocation empty(std::size_t n) { return Allocation{std::vector<std::vector<ItemId>>(n)}; }

  static Allocation from_owners(std::span<const AgentId> owner, std::size_t n) {
    Allocation a = empty(n);
    for (ItemId e = 0; e < owner.size(); ++e) a.bundles.at(owner[e]).push_back(e);
    return a;
  }

  std::size_t agents() const { return bundles.size(); }

  /// owner[e] for each of the m items. Throws unless this partitions {0..m-1}.
  std::vector<AgentId> owners(std::size_t m) const {
    constexpr AgentId unset = static_cast<AgentId>(-1);
    std::vector<AgentId> owner(m, unset);
    for (AgentId i = 0; i < bundles.size(); ++i)
      for (ItemId e : bundles[i]) {
        if (e >= m) throw Error(ErrorKind::InvalidArgument, "item " + std::to_string(e + 1) + " out of range");
        if (owner[e] != unset)
          throw Error(ErrorKind::InvalidArgument, "item " + std::to_string(e + 1) + " allocated twice");
        owner[e] = i;
      }
    for (ItemId e = 0; e < m; ++e)
      if (owner[e] == unset) throw Error(ErrorKind::InvalidArgument, "item " + std::to_string(e + 1) + " unallocated");
    return owner;
  }

  bool is_partition(std::size_t m) const {
    try {
      owners(m);
      return true;
    } catch (const Error&) {
      return false;
    }
  }

  void normalize() {
    for (auto& b : bundles) std::sort(b.begin(), b.end());
  }

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

/// Nonnegative per-agent payments.
struct SubsidyVector {
  Row values;

  Rational total() const {
    Rational t;
    for (const auto& s : values) t += s;
    return t;
  }

  friend bool operator==(const SubsidyVector&, const SubsidyVector&) = default;
};

enum class Provenance { MovingKnife, BidAndTake, Other };

/// n x m matrix of shares with exactly unit column sums.
struct FracAllocation {
  Matrix x;
  Provenance provenance = Provenance::Other;

  std::size_t agents() const { return x.size(); }
  std::size_t items() const { return x.empty() ? 0 : x.front().size(); }

  /// k(e): agents holding a positive share of item e, ascending by id.
  std::vector<AgentId> holders(ItemId e) const {
    std::vector<AgentId> k;
    for (AgentId i = 0; i < x.size(); ++i)
      if (x[i][e].sign() > 0) k.push_back(i);
    return k;
  }

  bool is_fractional(ItemId e) const { return holders(e).size() >= 2; }

  std::vector<ItemId> fractional_items() const {
    std::vector<ItemId> out;
    for (ItemId e = 0; e < items(); ++e)
      if (is_fractional(e)) out.push_back(e);
    return out;
  }

  bool columns_sum_to_one() const {
    for (ItemId e = 0; e < items(); ++e) {
      Rational s;
      for (const auto& row : x) s += row[e];
      if (s != Rational(1)) return false;
    }
    return true;
  }
};

/// Moving-knife output over the item line (0, m]. Item e (0-based) occupies
/// (e, e+1]. The agent picking k-th owns (cut[k-1], cut[k]] with cut[-1] = 0
/// and cut[n-1] = m.
struct CutSequence {
  Row cuts;                    // n-1 nondecreasing positions in [0, m]
  std::vector<AgentId> order;  // order[k] = agent owning the k-th interval
  std::size_t m = 0;

  std::size_t agents() const { return order.size(); }

  Rational left(std::size_t k) const { return k == 0 ? Rational(0) : cuts[k - 1]; }
  Rational right(std::size_t k) const {
    return k + 1 == order.size() ? Rational(static_cast<std::int64_t>(m)) : cuts[k];
  }

  /// The induced fractional allocation; both views agree by construction.
  FracAllocation fractions() const {
    const std::size_t n = order.size();
    FracAllocation frac{Matrix(n, Row(m)), Provenance::MovingKnife};
    for (std::size_t k = 0; k < n; ++k) {
      const Rational l = left(k), r = right(k);
      if (l >= r) continue;
      const auto first = static_cast<std::size_t>(l.floor().get_ui());
      const auto last = static_cast<std::size_t>(r.ceil().get_ui());
      for (std::size_t e = first; e < last && e < m; ++e) {
        const Rational lo = max(l, Rational(static_cast<std::int64_t>(e)));
        const Rational hi = min(r, Rational(static_cast<std::int64_t>(e + 1)));
        if (lo < hi) frac.x[order[k]][e] = hi - lo;
      }
    }
    return frac;
  }
};

}  // namespace subsidy
