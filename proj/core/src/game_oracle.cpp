#include "mresr/game_oracle.hpp"

#include <algorithm>

#include "mresr/error.hpp"

namespace mresr {

namespace {

constexpr std::size_t kMaxVars = 16;

enum class Status { False, True, Open };

Status matrix_status(const Qbf& q, const PartialAssignment& alpha) {
  bool all_sat = true;
  for (const Clause& c : q.matrix()) {
    bool sat = false, open = false;
    for (Literal l : c.literals()) {
      if (alpha.satisfies(l)) {
        sat = true;
        break;
      }
      if (!alpha.falsifies(l))
        open = true;
    }
    if (!sat && !open)
      return Status::False;
    all_sat = all_sat && sat;
  }
  return all_sat ? Status::True : Status::Open;
}

class Game {
public:
  explicit Game(const Qbf& q) : q_(q) {
    for (const auto& b : q.blocks())
      for (Var v : b.vars)
        order_.push_back(v);
  }

  std::size_t position_after(Var v) const {
    return static_cast<std::size_t>(std::find(order_.begin(), order_.end(), v) - order_.begin()) +
           1;
  }

  // True iff the universal player wins from `pos` given the current values.
  bool forall_wins(std::size_t pos, PartialAssignment& alpha) const {
    Status s = matrix_status(q_, alpha);
    if (s != Status::Open)
      return s == Status::False;
    if (pos == order_.size())
      return false; // unreachable: a complete assignment is never open
    Var v = order_[pos];
    bool universal = q_.is_universal(v);
    for (bool val : {false, true}) {
      alpha.set(v, val);
      bool w = forall_wins(pos + 1, alpha);
      alpha.clear(v);
      if (universal && w)
        return true;
      if (!universal && !w)
        return false;
    }
    return !universal;
  }

private:
  const Qbf& q_;
  std::vector<Var> order_;
};

} // namespace

std::uint8_t CountermodelOracle::winning_moves(Var u, const PartialAssignment& eps) const {
  const auto& sup = support_.at(u);
  std::size_t row = 0;
  for (std::size_t k = 0; k < sup.size(); ++k) {
    TriVal v = eps[sup[k]];
    if (!is_set(v))
      throw PreconditionError("assignment leaves " + std::to_string(sup[k]) + " unset");
    if (v == TriVal::One)
      row |= std::size_t{1} << k;
  }
  return moves_.at(u)[row];
}

StrategyTable CountermodelOracle::canonical(Var u) const {
  const auto& m = moves_.at(u);
  std::vector<TriVal> rows(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    rows[r] = (m[r] & kZeroWins) ? TriVal::Zero : TriVal::One;
  return StrategyTable(u, support_.at(u), std::move(rows));
}

std::map<Var, TGraph> CountermodelOracle::canonical_graphs() const {
  std::map<Var, TGraph> out;
  for (const auto& [u, sup] : support_)
    out.emplace(u, tgraph_from_table(canonical(u)));
  return out;
}

std::optional<CountermodelOracle> brute_force_countermodel(const Qbf& q) {
  std::size_t nvars = 0;
  for (const auto& b : q.blocks())
    nvars += b.vars.size();
  if (nvars > kMaxVars)
    throw ResourceLimitError("game-tree oracle limited to " + std::to_string(kMaxVars) +
                             " variables, formula has " + std::to_string(nvars));
  Game game(q);
  PartialAssignment empty;
  if (!game.forall_wins(0, empty))
    return std::nullopt;

  CountermodelOracle oracle;
  for (Var u : q.universals()) {
    std::vector<Var> sup = q.left_existentials(u);
    std::vector<std::uint8_t> moves(std::size_t{1} << sup.size(), 0);
    for (std::size_t row = 0; row < moves.size(); ++row) {
      PartialAssignment alpha = assignment_from_bits(sup, row);
      for (Var w : q.universals()) {
        if (w == u)
          break;
        TriVal v = oracle.canonical(w).eval(alpha);
        alpha.set(w, v);
      }
      for (bool val : {false, true}) {
        alpha.set(u, val);
        if (game.forall_wins(game.position_after(u), alpha))
          moves[row] |= val ? CountermodelOracle::kOneWins : CountermodelOracle::kZeroWins;
      }
    }
    oracle.support_[u] = std::move(sup);
    oracle.moves_[u] = std::move(moves);
  }
  return oracle;
}

TGraph tgraph_from_table(const StrategyTable& t) {
  const auto& sup = t.support();
  std::map<std::size_t, TNode> nodes;
  std::size_t next = 0;
  std::map<TriVal, std::size_t> leaves;
  for (TriVal v : {TriVal::Zero, TriVal::One, TriVal::Star}) {
    leaves[v] = next;
    nodes[next++] = TNode{TNode::Kind::Leaf, v, 0, 0, 0};
  }
  // Builds the subtree deciding support[k..] with lower bits fixed by `prefix`.
  auto build = [&](auto&& self, std::size_t k, std::size_t prefix) -> std::size_t {
    if (k == sup.size())
      return leaves.at(t.at(prefix));
    std::size_t lo = self(self, k + 1, prefix);
    std::size_t hi = self(self, k + 1, prefix | (std::size_t{1} << k));
    if (lo == hi)
      return lo;
    std::size_t id = next++;
    nodes[id] = TNode{TNode::Kind::IfElse, TriVal::Star, sup[k], hi, lo};
    return id;
  };
  std::size_t root = build(build, 0, 0);
  std::map<std::size_t, TNode> reachable;
  std::vector<std::size_t> todo{root};
  while (!todo.empty()) {
    std::size_t id = todo.back();
    todo.pop_back();
    if (!reachable.emplace(id, nodes.at(id)).second)
      continue;
    if (nodes[id].kind != TNode::Kind::Leaf) {
      todo.push_back(nodes[id].a);
      todo.push_back(nodes[id].b);
    }
  }
  return TGraph::from_nodes(t.u(), std::move(reachable), root);
}

} // namespace mresr
