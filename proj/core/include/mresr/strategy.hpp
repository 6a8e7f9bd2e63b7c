#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mresr/assignment.hpp"
#include "mresr/qbf.hpp"

namespace mresr {

/// Explicit function table for one universal u: every complete assignment
/// of `support` maps to 0, 1 or *. Row r assigns support[k] the k-th bit of r.
class StrategyTable {
public:
  static constexpr std::size_t kMaxSupport = 20;

  /// Constant-* table for variable 0.
  StrategyTable() : rows_{TriVal::Star} {}
  /// `support` is sorted and deduplicated; rows must have 2^|support|
  /// entries in the order of the sorted support.
  StrategyTable(Var u, std::vector<Var> support, std::vector<TriVal> rows);

  static StrategyTable constant(Var u, TriVal value);
  static StrategyTable from_function(Var u, std::vector<Var> support,
                                     const std::function<TriVal(const PartialAssignment&)>& f);

  Var u() const noexcept { return u_; }
  const std::vector<Var>& support() const noexcept { return support_; }
  const std::vector<TriVal>& rows() const noexcept { return rows_; }
  TriVal at(std::size_t row) const { return rows_.at(row); }

  /// Throws PreconditionError if some support variable is unset in `eps`.
  TriVal eval(const PartialAssignment& eps) const;

  /// Same function over a superset of the support.
  StrategyTable extend(std::vector<Var> support) const;
  /// Drops support variables the table does not depend on.
  StrategyTable minimized() const;

  /// `u <u> support <v...>` followed by one `<bits> -> <value>` row per line,
  /// bit k of the string is support[k].
  std::string dump() const;

  bool operator==(const StrategyTable&) const = default;

private:
  Var u_ = 0;
  std::vector<Var> support_;
  std::vector<TriVal> rows_;
};

/// Equality as functions, comparing over the union of the supports.
bool same_function(const StrategyTable& a, const StrategyTable& b);

/// No complete assignment of the union support yields 0 in one and 1 in the
/// other. Throws PreconditionError when the universals differ.
bool strat_consistent(const StrategyTable& a, const StrategyTable& b);

/// Pointwise join over the union support; throws on inconsistent inputs.
StrategyTable strat_union(const StrategyTable& a, const StrategyTable& b);

/// x = 1 -> hi, x = 0 -> lo. The operands need not be consistent; x joins
/// the support even if neither branch reads it.
StrategyTable strat_ifelse(const StrategyTable& hi, const StrategyTable& lo, Var x);
/// As above, additionally requiring x existential and left of u in `q`.
StrategyTable strat_ifelse(const StrategyTable& hi, const StrategyTable& lo, Var x, const Qbf& q);

/// Sorted union of two sorted variable lists.
std::vector<Var> merge_support(const std::vector<Var>& a, const std::vector<Var>& b);

} // namespace mresr
