#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mresr/assignment.hpp"
#include "mresr/strategy.hpp"

namespace mresr {

/// T-graph node: a leaf value, an if-else on an existential variable
/// (`a` on x = 1, `b` on x = 0), or a # node joining children `a` and `b`.
struct TNode {
  enum class Kind { Leaf, IfElse, Hash };

  Kind kind = Kind::Leaf;
  TriVal value = TriVal::Star;
  Var var = 0;
  std::size_t a = 0;
  std::size_t b = 0;

  bool operator==(const TNode&) const = default;
};

/// Strategy DAG for one universal. Node ids are the proof lines that created
/// them; graphs built in the same proof share nodes by id.
class TGraph {
public:
  TGraph() { nodes_[0] = TNode{}; }

  static TGraph leaf(Var u, TriVal value, std::size_t id);
  /// x = 1 follows `hi`, x = 0 follows `lo`.
  static TGraph if_else(Var x, const TGraph& hi, const TGraph& lo, std::size_t id);
  static TGraph hash(const TGraph& a, const TGraph& b, std::size_t id);
  /// Builds from explicit nodes; throws PreconditionError on dangling
  /// children, cycles or a missing root.
  static TGraph from_nodes(Var u, std::map<std::size_t, TNode> nodes, std::size_t root);

  Var u() const noexcept { return u_; }
  std::size_t root() const noexcept { return root_; }
  const TNode& root_node() const { return nodes_.at(root_); }
  const TNode& node(std::size_t id) const { return nodes_.at(id); }
  const std::map<std::size_t, TNode>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool trivial() const {
    return root_node().kind == TNode::Kind::Leaf && root_node().value == TriVal::Star;
  }

  /// Sorted, distinct if-else variables.
  std::vector<Var> support() const;
  /// Node ids with children before parents, root last.
  std::vector<std::size_t> topological() const;

  /// `id LEAF v`, `id ITE x hi lo` or `id HASH a b`, one per line, root last.
  std::string dump() const;

  bool operator==(const TGraph&) const = default;

private:
  static TGraph combine(const TGraph& a, const TGraph& b, std::size_t id, TNode root);

  Var u_ = 0;
  std::size_t root_ = 0;
  std::map<std::size_t, TNode> nodes_;
};

/// Evaluates with # nodes joining their children. Throws PreconditionError
/// on an unset if-else variable or a 0/1 clash at a # node.
TriVal tg_eval(const TGraph& t, const PartialAssignment& eps);

/// Function table over the if-else support (at most 20 variables, else
/// ResourceLimitError).
StrategyTable tg_table(const TGraph& t);

/// Structural equality of the parts reachable from the roots, ignoring ids.
bool tg_isomorphic(const TGraph& a, const TGraph& b);

/// Strategy file: per universal a header `u <var> <nodes>` followed by the
/// graph dump.
std::string dump_strategies(const std::map<Var, TGraph>& graphs);
std::map<Var, TGraph> parse_strategies(std::string_view text);

} // namespace mresr
