#include "mresr/tgraph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

#include "mresr/error.hpp"

namespace mresr {

TGraph TGraph::leaf(Var u, TriVal value, std::size_t id) {
  TGraph t;
  t.nodes_.clear();
  t.u_ = u;
  t.root_ = id;
  t.nodes_[id] = TNode{TNode::Kind::Leaf, value, 0, 0, 0};
  return t;
}

TGraph TGraph::combine(const TGraph& a, const TGraph& b, std::size_t id, TNode root) {
  if (a.u_ != b.u_)
    throw PreconditionError("combining graphs for different universals");
  TGraph t;
  t.u_ = a.u_;
  t.nodes_ = a.nodes_;
  for (const auto& [nid, n] : b.nodes_) {
    auto [it, inserted] = t.nodes_.emplace(nid, n);
    if (!inserted && !(it->second == n))
      throw PreconditionError("operands disagree on node " + std::to_string(nid));
  }
  if (t.nodes_.count(id))
    throw PreconditionError("node id " + std::to_string(id) + " already in use");
  t.nodes_[id] = root;
  t.root_ = id;
  return t;
}

TGraph TGraph::if_else(Var x, const TGraph& hi, const TGraph& lo, std::size_t id) {
  return combine(hi, lo, id, TNode{TNode::Kind::IfElse, TriVal::Star, x, hi.root_, lo.root_});
}

TGraph TGraph::hash(const TGraph& a, const TGraph& b, std::size_t id) {
  return combine(a, b, id, TNode{TNode::Kind::Hash, TriVal::Star, 0, a.root_, b.root_});
}

TGraph TGraph::from_nodes(Var u, std::map<std::size_t, TNode> nodes, std::size_t root) {
  TGraph t;
  t.u_ = u;
  t.root_ = root;
  t.nodes_ = std::move(nodes);
  if (!t.nodes_.count(root))
    throw PreconditionError("root " + std::to_string(root) + " is not a node");
  for (const auto& [id, n] : t.nodes_)
    if (n.kind != TNode::Kind::Leaf && (!t.nodes_.count(n.a) || !t.nodes_.count(n.b)))
      throw PreconditionError("node " + std::to_string(id) + " has a dangling child");
  t.topological(); // rejects cycles
  return t;
}

std::vector<Var> TGraph::support() const {
  std::vector<Var> out;
  for (std::size_t id : topological()) {
    const TNode& n = nodes_.at(id);
    if (n.kind == TNode::Kind::IfElse)
      out.push_back(n.var);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> TGraph::topological() const {
  std::vector<std::size_t> order;
  std::map<std::size_t, int> state; // 1 = on stack, 2 = done
  std::vector<std::pair<std::size_t, bool>> stack{{root_, false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      state[id] = 2;
      order.push_back(id);
      continue;
    }
    int& s = state[id];
    if (s == 2)
      continue;
    if (s == 1)
      throw PreconditionError("cycle through node " + std::to_string(id));
    s = 1;
    stack.push_back({id, true});
    const TNode& n = nodes_.at(id);
    if (n.kind != TNode::Kind::Leaf)
      for (std::size_t c : {n.b, n.a}) {
        auto it = state.find(c);
        if (it != state.end() && it->second == 1)
          throw PreconditionError("cycle through node " + std::to_string(c));
        if (it == state.end() || it->second != 2)
          stack.push_back({c, false});
      }
  }
  return order;
}

std::string TGraph::dump() const {
  std::string out;
  for (std::size_t id : topological()) {
    const TNode& n = nodes_.at(id);
    out += std::to_string(id);
    switch (n.kind) {
    case TNode::Kind::Leaf:
      out += std::string(" LEAF ") + to_char(n.value);
      break;
    case TNode::Kind::IfElse:
      out += " ITE " + std::to_string(n.var) + " " + std::to_string(n.a) + " " +
             std::to_string(n.b);
      break;
    case TNode::Kind::Hash:
      out += " HASH " + std::to_string(n.a) + " " + std::to_string(n.b);
      break;
    }
    out += "\n";
  }
  return out;
}

namespace {

TriVal eval_node(const TGraph& t, std::size_t id, const PartialAssignment& eps,
                 std::map<std::size_t, TriVal>& memo) {
  if (auto it = memo.find(id); it != memo.end())
    return it->second;
  const TNode& n = t.node(id);
  TriVal r = TriVal::Star;
  switch (n.kind) {
  case TNode::Kind::Leaf:
    r = n.value;
    break;
  case TNode::Kind::IfElse: {
    TriVal x = eps[n.var];
    if (!is_set(x))
      throw PreconditionError("T-graph branches on unset variable " + std::to_string(n.var));
    r = eval_node(t, x == TriVal::One ? n.a : n.b, eps, memo);
    break;
  }
  case TNode::Kind::Hash: {
    auto j = try_join(eval_node(t, n.a, eps, memo), eval_node(t, n.b, eps, memo));
    if (!j)
      throw PreconditionError("0/1 clash at # node " + std::to_string(id));
    r = *j;
    break;
  }
  }
  memo[id] = r;
  return r;
}

} // namespace

TriVal tg_eval(const TGraph& t, const PartialAssignment& eps) {
  std::map<std::size_t, TriVal> memo;
  return eval_node(t, t.root(), eps, memo);
}

StrategyTable tg_table(const TGraph& t) {
  auto support = t.support();
  if (support.size() > StrategyTable::kMaxSupport)
    throw ResourceLimitError("T-graph support of " + std::to_string(support.size()) +
                             " variables exceeds the table cap");
  return StrategyTable::from_function(t.u(), std::move(support),
                                      [&](const PartialAssignment& e) { return tg_eval(t, e); });
}

bool tg_isomorphic(const TGraph& a, const TGraph& b) {
  if (a.u() != b.u())
    return false;
  using Key = std::tuple<int, int, Var, int, int>;
  std::map<Key, int> table;
  auto canon = [&](const TGraph& t) {
    std::map<std::size_t, int> memo;
    for (std::size_t id : t.topological()) {
      const TNode& n = t.node(id);
      Key k = n.kind == TNode::Kind::Leaf
                  ? Key{0, static_cast<int>(n.value), 0, -1, -1}
                  : Key{static_cast<int>(n.kind), -1, n.var, memo.at(n.a), memo.at(n.b)};
      memo[id] = table.emplace(k, static_cast<int>(table.size())).first->second;
    }
    return memo.at(t.root());
  };
  return canon(a) == canon(b);
}

std::string dump_strategies(const std::map<Var, TGraph>& graphs) {
  std::string out;
  for (const auto& [u, t] : graphs) {
    out += "u " + std::to_string(u) + " " + std::to_string(t.topological().size()) + "\n";
    out += t.dump();
  }
  return out;
}

std::map<Var, TGraph> parse_strategies(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::map<Var, TGraph> out;
  std::string line;
  std::size_t lineno = 0;
  auto next = [&](std::vector<std::string>& toks) {
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream ss(line);
      toks.clear();
      for (std::string t; ss >> t;)
        toks.push_back(t);
      if (!toks.empty() && toks[0][0] != 'c')
        return true;
    }
    return false;
  };
  auto num = [&](const std::string& s) -> std::size_t {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || s.empty() || s[0] == '-')
      throw ParseError(lineno, "expected a non-negative integer, got '" + s + "'");
    return static_cast<std::size_t>(v);
  };

  std::vector<std::string> toks;
  while (next(toks)) {
    if (toks[0] != "u" || toks.size() != 3)
      throw ParseError(lineno, "expected 'u <var> <nodes>'");
    Var u = static_cast<Var>(num(toks[1]));
    std::size_t count = num(toks[2]);
    if (count == 0)
      throw ParseError(lineno, "graph needs at least one node");
    std::map<std::size_t, TNode> nodes;
    std::size_t root = 0;
    for (std::size_t c = 0; c < count; ++c) {
      if (!next(toks))
        throw ParseError(lineno, "graph for universal " + std::to_string(u) + " is truncated");
      std::size_t id = num(toks[0]);
      TNode n;
      if (toks.size() == 3 && toks[1] == "LEAF" && toks[2].size() == 1 &&
          trival_from_char(toks[2][0])) {
        n = TNode{TNode::Kind::Leaf, *trival_from_char(toks[2][0]), 0, 0, 0};
      } else if (toks.size() == 5 && toks[1] == "ITE") {
        n = TNode{TNode::Kind::IfElse, TriVal::Star, static_cast<Var>(num(toks[2])),
                  num(toks[3]), num(toks[4])};
      } else if (toks.size() == 4 && toks[1] == "HASH") {
        n = TNode{TNode::Kind::Hash, TriVal::Star, 0, num(toks[2]), num(toks[3])};
      } else {
        throw ParseError(lineno, "malformed node line");
      }
      if (n.kind != TNode::Kind::Leaf && (!nodes.count(n.a) || !nodes.count(n.b)))
        throw ParseError(lineno, "node " + std::to_string(id) + " refers to a later node");
      if (!nodes.emplace(id, n).second)
        throw ParseError(lineno, "duplicate node id " + std::to_string(id));
      root = id;
    }
    if (!out.emplace(u, TGraph::from_nodes(u, std::move(nodes), root)).second)
      throw ParseError(lineno, "duplicate strategy for universal " + std::to_string(u));
  }
  return out;
}

} // namespace mresr
