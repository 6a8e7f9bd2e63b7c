#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mresr {

/// Dense positive variable id, as in DIMACS.
using Var = std::uint32_t;

class Literal {
public:
  constexpr Literal(Var var, bool negated = false) noexcept : var_(var), negated_(negated) {}

  /// Builds from a signed DIMACS integer; 0 is rejected by the caller.
  static constexpr Literal from_dimacs(int lit) noexcept {
    return lit < 0 ? Literal(static_cast<Var>(-lit), true) : Literal(static_cast<Var>(lit), false);
  }

  constexpr int to_dimacs() const noexcept {
    return negated_ ? -static_cast<int>(var_) : static_cast<int>(var_);
  }

  constexpr Var var() const noexcept { return var_; }
  constexpr bool negated() const noexcept { return negated_; }
  constexpr bool positive() const noexcept { return !negated_; }
  constexpr Literal operator~() const noexcept { return Literal(var_, !negated_); }

  constexpr auto operator<=>(const Literal&) const = default;

private:
  Var var_;
  bool negated_;
};

/// Result of resolving two clauses on a pivot.
enum class ResolveStatus { Ok, PivotMissing, Tautology };

/// Ordered, duplicate-free, non-tautological disjunction of literals.
class Clause {
public:
  Clause() = default;

  /// Drops repeated literals (first occurrence wins). Throws
  /// PreconditionError when a variable occurs with both signs.
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<int> dimacs);

  static std::optional<Clause> try_make(std::vector<Literal> literals);

  std::span<const Literal> literals() const noexcept { return lits_; }
  std::size_t width() const noexcept { return lits_.size(); }
  bool empty() const noexcept { return lits_.empty(); }

  bool contains(Literal lit) const noexcept;
  bool contains_var(Var v) const noexcept;
  /// Polarity of `v` in the clause: true for positive, false for negative.
  std::optional<bool> polarity(Var v) const noexcept;
  std::vector<Var> vars() const;

  /// Set equality, ignoring literal order.
  bool same_literals(const Clause& other) const;
  /// Canonical copy with literals sorted by (var, sign).
  Clause sorted() const;

  /// DIMACS body, e.g. "1 -3 0".
  std::string to_dimacs() const;

  bool operator==(const Clause&) const = default;

private:
  std::vector<Literal> lits_;
};

/// res(pos, neg, x): requires x in `pos` and ~x in `neg`. On success the
/// resolvent keeps pos's literals first, then neg's, in order.
struct Resolvent {
  ResolveStatus status;
  Clause clause;
};

Resolvent resolve(const Clause& pos, const Clause& neg, Var pivot);

} // namespace mresr
