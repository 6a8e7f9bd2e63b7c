#include "mresr/search.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mresr/convert.hpp"
#include "mresr/error.hpp"
#include "mresr/strategy.hpp"

namespace mresr {

namespace {

constexpr std::size_t kMaxExistentials = 12;

// Semantic content of a line: sorted clause plus minimized tables.
struct Item {
  Clause clause;
  std::vector<StrategyTable> tables; // in q.universals() order

  bool operator<(const Item& o) const {
    auto key = [](const Item& it) {
      std::vector<int> k;
      for (Literal l : it.clause.literals())
        k.push_back(l.to_dimacs());
      k.push_back(0);
      for (const auto& t : it.tables) {
        for (Var v : t.support())
          k.push_back(static_cast<int>(v));
        k.push_back(-1);
        for (TriVal r : t.rows())
          k.push_back(static_cast<int>(r));
        k.push_back(-2);
      }
      return k;
    };
    return key(*this) < key(o);
  }
};

struct Step {
  Rule rule;
  std::size_t item;
};

class Searcher {
public:
  Searcher(const Qbf& q, const SearchOptions& opts) : q_(q), opts_(opts) {
    for (std::size_t c = 0; c < q.matrix().size(); ++c) {
      Item it;
      const Clause& mc = q.matrix()[c];
      it.clause = existential_subclause(q, mc).sorted();
      for (Var u : q.universals())
        it.tables.push_back(StrategyTable::constant(u, falsifying_u_literal(q, mc, u)));
      axioms_.push_back(intern(std::move(it)));
    }
  }

  std::optional<std::vector<Rule>> run(SearchStats* stats) {
    for (std::size_t len = 1; len <= opts_.max_lines; ++len) {
      limit_ = len;
      failed_.clear();
      lines_.clear();
      used_.clear();
      if (stats)
        stats->depth_reached = len;
      bool found = dfs();
      if (stats)
        stats->nodes = nodes_;
      if (found) {
        std::vector<Rule> rules;
        for (const auto& s : lines_)
          rules.push_back(s.rule);
        return rules;
      }
    }
    return std::nullopt;
  }

private:
  std::size_t intern(Item it) {
    auto [pos, inserted] = index_.emplace(std::move(it), items_.size());
    if (inserted)
      items_.push_back(&pos->first);
    return pos->second;
  }

  const Item& item(std::size_t id) const { return *items_[id]; }

  std::size_t unused_count() const {
    return static_cast<std::size_t>(std::count(used_.begin(), used_.end(), 0));
  }

  bool present(std::size_t id) const {
    return std::any_of(lines_.begin(), lines_.end(), [id](const Step& s) { return s.item == id; });
  }

  std::vector<std::size_t> state_key() const {
    std::vector<std::size_t> key;
    for (std::size_t i = 0; i < lines_.size(); ++i)
      key.push_back(lines_[i].item * 2 + (used_[i] ? 1 : 0));
    std::sort(key.begin(), key.end());
    return key;
  }

  // Candidate resolutions among current lines, narrowest resolvent first.
  std::vector<Step> resolutions() {
    std::vector<std::pair<std::size_t, Step>> out;
    const auto& us = q_.universals();
    for (std::size_t j = 0; j < lines_.size(); ++j)
      for (std::size_t k = 0; k < lines_.size(); ++k) {
        if (j == k)
          continue;
        const Item& a = item(lines_[j].item);
        const Item& b = item(lines_[k].item);
        for (Literal l : a.clause.literals()) {
          if (l.negated() || !b.clause.contains(~l))
            continue;
          auto res = resolve(a.clause, b.clause, l.var());
          if (res.status != ResolveStatus::Ok)
            continue;
          Item it;
          it.clause = res.clause.sorted();
          bool ok = true;
          for (std::size_t ui = 0; ui < us.size() && ok; ++ui) {
            if (q_.order().left_of(l.var(), us[ui])) {
              it.tables.push_back(
                  strat_ifelse(b.tables[ui], a.tables[ui], l.var()).minimized());
            } else if (strat_consistent(a.tables[ui], b.tables[ui])) {
              it.tables.push_back(strat_union(a.tables[ui], b.tables[ui]).minimized());
            } else {
              ok = false;
            }
          }
          if (!ok)
            continue;
          std::size_t id = intern(std::move(it));
          if (present(id))
            continue;
          out.push_back({item(id).clause.width(), Step{Rule::resolution(j + 1, k + 1, l.var()), id}});
        }
      }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Step> steps;
    for (auto& [w, s] : out)
      steps.push_back(s);
    return steps;
  }

  void push(const Step& s) {
    if (!s.rule.is_axiom()) {
      ++used_[s.rule.j - 1];
      ++used_[s.rule.k - 1];
    }
    lines_.push_back(s);
    used_.push_back(0);
  }

  void pop() {
    const Step s = lines_.back();
    lines_.pop_back();
    used_.pop_back();
    if (!s.rule.is_axiom()) {
      --used_[s.rule.j - 1];
      --used_[s.rule.k - 1];
    }
  }

  bool dfs() {
    if (++nodes_ > opts_.node_budget)
      throw ResourceLimitError("proof search exceeded its budget of " +
                               std::to_string(opts_.node_budget) + " nodes");
    if (!lines_.empty() && item(lines_.back().item).clause.empty() && unused_count() == 1)
      return true;
    const std::size_t remaining = limit_ - lines_.size();
    if (remaining == 0)
      return false;
    // Each new line lowers the number of unused lines by at most one and
    // the finished proof leaves exactly one (the empty clause).
    std::size_t unused = unused_count();
    if (unused > remaining + 1)
      return false;
    auto key = state_key();
    if (failed_.count(key))
      return false;

    // A new axiom raises the unused count, so it is only worth adding while
    // the remaining lines can still absorb it.
    if (unused + 1 <= remaining)
      for (std::size_t c = 0; c < axioms_.size(); ++c) {
        if (present(axioms_[c]))
          continue;
        push(Step{Rule::axiom(c + 1), axioms_[c]});
        bool found = dfs();
        if (found)
          return true;
        pop();
      }
    for (const Step& s : resolutions()) {
      push(s);
      bool found = dfs();
      if (found)
        return true;
      pop();
    }
    failed_.insert(std::move(key));
    return false;
  }

  const Qbf& q_;
  SearchOptions opts_;
  std::map<Item, std::size_t> index_;
  std::vector<const Item*> items_;
  std::vector<std::size_t> axioms_;
  std::vector<Step> lines_;
  std::vector<int> used_;
  std::set<std::vector<std::size_t>> failed_;
  std::size_t limit_ = 0;
  std::uint64_t nodes_ = 0;
};

} // namespace

std::optional<MResTProof> bounded_search(const Qbf& q, const SearchOptions& opts,
                                         SearchStats* stats) {
  if (q.existentials().size() > kMaxExistentials)
    throw PreconditionError("proof search supports at most " + std::to_string(kMaxExistentials) +
                            " existentials");
  Searcher s(q, opts);
  auto rules = s.run(stats);
  if (!rules)
    return std::nullopt;
  RuleScript script;
  for (const Rule& r : *rules)
    script.push_back({r, std::nullopt});
  MResTProof proof = script_to_mrest(q, script);
  if (!check_mrest(q, proof).valid())
    throw Error("internal: search produced a proof that does not check");
  return proof;
}

} // namespace mresr
