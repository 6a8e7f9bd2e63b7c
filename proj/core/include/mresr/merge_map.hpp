#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mresr/assignment.hpp"
#include "mresr/qbf.hpp"
#include "mresr/strategy.hpp"

namespace mresr {

/// Merge-map node. Leaves carry a value; branches test an existential
/// variable, following `hi` when it is 1 and `lo` when it is 0.
struct MergeNode {
  bool leaf = true;
  TriVal value = TriVal::Star;
  Var var = 0;
  std::size_t lo = 0;
  std::size_t hi = 0;

  bool operator==(const MergeNode&) const = default;
};

/// Deterministic branching program for one universal. Node ids are the
/// line indices that created them, so maps built within one proof share
/// nodes with equal tags.
class MergeMap {
public:
  MergeMap() { nodes_[0] = MergeNode{}; }

  static MergeMap leaf(Var u, TriVal value, std::size_t tag);

  Var u() const noexcept { return u_; }
  std::size_t root() const noexcept { return root_; }
  const MergeNode& root_node() const { return nodes_.at(root_); }
  const std::map<std::size_t, MergeNode>& nodes() const noexcept { return nodes_; }
  /// Root is the * leaf.
  bool trivial() const { return root_node().leaf && root_node().value == TriVal::Star; }
  /// Sorted, distinct branch variables.
  std::vector<Var> branch_vars() const;

  /// One node per line, `id LEAF v` or `id BRANCH x lo hi`, children first.
  std::string dump() const;

  bool operator==(const MergeMap&) const = default;

private:
  friend MergeMap mm_merge(const MergeMap&, const MergeMap&, std::size_t, Var);

  Var u_ = 0;
  std::size_t root_ = 0;
  std::map<std::size_t, MergeNode> nodes_;
};

/// Follows the path selected by `eps`; throws PreconditionError if a branch
/// variable on the path is unset.
TriVal mm_eval(const MergeMap& m, const PartialAssignment& eps);

/// Function table over the branch variables.
StrategyTable mm_table(const MergeMap& m);

/// Structural isomorphism of the parts reachable from the roots.
bool mm_isomorphic(const MergeMap& a, const MergeMap& b);

/// Isomorphic operands give the first; a trivial operand gives the other.
/// Otherwise throws PreconditionError (the resolution is blocked).
MergeMap mm_select(const MergeMap& a, const MergeMap& b);

/// New root Branch(x, lo = a, hi = b) tagged `tag`; nodes with equal tags
/// are shared. Throws PreconditionError if the operands disagree on a
/// shared tag or `tag` is already used.
MergeMap mm_merge(const MergeMap& a, const MergeMap& b, std::size_t tag, Var x);
/// As above, also requiring x existential and left of u.
MergeMap mm_merge(const MergeMap& a, const MergeMap& b, std::size_t tag, Var x, const Qbf& q);

} // namespace mresr
