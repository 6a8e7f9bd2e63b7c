#include "mresr/merge_map.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace mresr {

MergeMap MergeMap::leaf(Var u, TriVal value, std::size_t tag) {
  MergeMap m;
  m.nodes_.clear();
  m.u_ = u;
  m.root_ = tag;
  m.nodes_[tag] = MergeNode{true, value, 0, 0, 0};
  return m;
}

std::vector<Var> MergeMap::branch_vars() const {
  std::vector<Var> out;
  for (const auto& [id, n] : nodes_)
    if (!n.leaf)
      out.push_back(n.var);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string MergeMap::dump() const {
  std::string out;
  std::map<std::size_t, bool> done;
  std::function<void(std::size_t)> visit = [&](std::size_t id) {
    if (done[id])
      return;
    done[id] = true;
    const MergeNode& n = nodes_.at(id);
    if (n.leaf) {
      out += std::to_string(id) + " LEAF " + to_char(n.value) + "\n";
      return;
    }
    visit(n.lo);
    visit(n.hi);
    out += std::to_string(id) + " BRANCH " + std::to_string(n.var) + " " +
           std::to_string(n.lo) + " " + std::to_string(n.hi) + "\n";
  };
  visit(root_);
  return out;
}

TriVal mm_eval(const MergeMap& m, const PartialAssignment& eps) {
  const MergeNode* n = &m.root_node();
  while (!n->leaf) {
    TriVal v = eps[n->var];
    if (!is_set(v))
      throw PreconditionError("merge map branches on unset variable " + std::to_string(n->var));
    n = &m.nodes().at(v == TriVal::One ? n->hi : n->lo);
  }
  return n->value;
}

StrategyTable mm_table(const MergeMap& m) {
  return StrategyTable::from_function(m.u(), m.branch_vars(),
                                      [&](const PartialAssignment& e) { return mm_eval(m, e); });
}

namespace {

using CanonKey = std::tuple<bool, int, Var, int, int>;

class Canonizer {
public:
  int canon(const MergeMap& m, std::size_t id, std::map<std::size_t, int>& memo) {
    if (auto it = memo.find(id); it != memo.end())
      return it->second;
    const MergeNode& n = m.nodes().at(id);
    CanonKey key = n.leaf ? CanonKey{true, static_cast<int>(n.value), 0, -1, -1}
                          : CanonKey{false, -1, n.var, canon(m, n.lo, memo), canon(m, n.hi, memo)};
    auto [it, inserted] = table_.emplace(key, static_cast<int>(table_.size()));
    memo[id] = it->second;
    return it->second;
  }

private:
  std::map<CanonKey, int> table_;
};

} // namespace

bool mm_isomorphic(const MergeMap& a, const MergeMap& b) {
  if (a.u() != b.u())
    return false;
  Canonizer c;
  std::map<std::size_t, int> ma, mb;
  return c.canon(a, a.root(), ma) == c.canon(b, b.root(), mb);
}

MergeMap mm_select(const MergeMap& a, const MergeMap& b) {
  if (b.trivial())
    return a;
  if (a.trivial())
    return b;
  if (mm_isomorphic(a, b))
    return a;
  throw PreconditionError("select blocked: merge maps for universal " + std::to_string(a.u()) +
                          " are neither isomorphic nor trivial");
}

MergeMap mm_merge(const MergeMap& a, const MergeMap& b, std::size_t tag, Var x) {
  if (a.u() != b.u())
    throw PreconditionError("merge of maps for different universals");
  MergeMap m;
  m.u_ = a.u();
  m.nodes_ = a.nodes_;
  for (const auto& [id, n] : b.nodes_) {
    auto [it, inserted] = m.nodes_.emplace(id, n);
    if (!inserted && !(it->second == n))
      throw PreconditionError("merge operands disagree on node " + std::to_string(id));
  }
  if (m.nodes_.count(tag))
    throw PreconditionError("merge tag " + std::to_string(tag) + " already in use");
  m.nodes_[tag] = MergeNode{false, TriVal::Star, x, a.root_, b.root_};
  m.root_ = tag;
  return m;
}

MergeMap mm_merge(const MergeMap& a, const MergeMap& b, std::size_t tag, Var x, const Qbf& q) {
  if (!q.is_existential(x))
    throw PreconditionError("merge variable " + std::to_string(x) + " is not existential");
  if (!q.order().left_of(x, a.u()))
    throw PreconditionError("merge variable " + std::to_string(x) + " is not left of " +
                            std::to_string(a.u()));
  return mm_merge(a, b, tag, x);
}

} // namespace mresr
