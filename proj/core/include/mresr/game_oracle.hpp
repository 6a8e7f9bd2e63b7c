#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mresr/qbf.hpp"
#include "mresr/strategy.hpp"
#include "mresr/tgraph.hpp"

namespace mresr {

/// Winning moves of the universal player, per universal u and per complete
/// assignment of L_Q(u), assuming earlier universals play their canonical
/// (lowest winning) move.
class CountermodelOracle {
public:
  static constexpr std::uint8_t kZeroWins = 1;
  static constexpr std::uint8_t kOneWins = 2;

  /// Bitmask of kZeroWins / kOneWins; `eps` must set all of L_Q(u).
  std::uint8_t winning_moves(Var u, const PartialAssignment& eps) const;
  /// The lowest winning move per assignment, as a table over L_Q(u).
  StrategyTable canonical(Var u) const;
  /// Canonical strategies as decision-tree graphs, one per universal.
  std::map<Var, TGraph> canonical_graphs() const;

private:
  friend std::optional<CountermodelOracle> brute_force_countermodel(const Qbf& q);

  std::map<Var, std::vector<Var>> support_;
  std::map<Var, std::vector<std::uint8_t>> moves_;
};

/// Game-tree evaluation. Returns the universal player's winning moves when
/// the QBF is false and nothing when it is true. At most 16 variables.
std::optional<CountermodelOracle> brute_force_countermodel(const Qbf& q);

/// Decision tree over the table's support (leaves shared by value).
TGraph tgraph_from_table(const StrategyTable& t);

} // namespace mresr
