#include "mresr/mrest.hpp"

#include <optional>

#include "mresr/error.hpp"

namespace mresr {

namespace {

LineStatus fail(Reason r, std::string detail) { return {false, r, std::move(detail)}; }

std::map<Var, TGraph> star_graphs(const Qbf& q, std::size_t id) {
  std::map<Var, TGraph> g;
  for (Var u : q.universals())
    g.emplace(u, TGraph::leaf(u, TriVal::Star, id));
  return g;
}

bool refs_ok(const Rule& r, std::size_t i) {
  return r.j >= 1 && r.j < i && r.k >= 1 && r.k < i;
}

} // namespace

MResTProof replay_mrest(const Qbf& q, const RuleScript& script) {
  MResTProof proof;
  proof.reserve(script.size());
  for (std::size_t i = 1; i <= script.size(); ++i) {
    const ScriptLine& sl = script[i - 1];
    MResTLine line;
    line.rule = sl.rule;
    if (sl.rule.is_axiom()) {
      if (sl.rule.index >= 1 && sl.rule.index <= q.matrix().size()) {
        const Clause& c = q.matrix()[sl.rule.index - 1];
        line.clause = existential_subclause(q, c);
        for (Var u : q.universals())
          line.graphs.emplace(u, TGraph::leaf(u, falsifying_u_literal(q, c, u), i));
      } else {
        line.graphs = star_graphs(q, i);
      }
    } else if (refs_ok(sl.rule, i) && q.is_existential(sl.rule.pivot)) {
      const MResTLine& pj = proof[sl.rule.j - 1];
      const MResTLine& pk = proof[sl.rule.k - 1];
      auto res = resolve(pj.clause, pk.clause, sl.rule.pivot);
      if (res.status == ResolveStatus::Ok)
        line.clause = res.clause;
      for (Var u : q.universals()) {
        try {
          line.graphs.emplace(u, q.order().left_of(sl.rule.pivot, u)
                                     ? TGraph::if_else(sl.rule.pivot, pk.graphs.at(u),
                                                       pj.graphs.at(u), i)
                                     : TGraph::hash(pj.graphs.at(u), pk.graphs.at(u), i));
        } catch (const std::exception&) {
          line.graphs.emplace(u, TGraph::leaf(u, TriVal::Star, i));
        }
      }
    } else {
      line.graphs = star_graphs(q, i);
    }
    if (sl.clause)
      line.clause = *sl.clause;
    proof.push_back(std::move(line));
  }
  return proof;
}

namespace {

LineStatus check_axiom(const Qbf& q, const MResTLine& line) {
  const Rule& r = line.rule;
  if (r.index < 1 || r.index > q.matrix().size())
    return fail(Reason::BadAxiom, "no matrix clause " + std::to_string(r.index));
  const Clause& c = q.matrix()[r.index - 1];
  if (!line.clause.same_literals(existential_subclause(q, c)))
    return fail(Reason::BadAxiom,
                "clause is not the existential part of matrix clause " + std::to_string(r.index));
  for (Var u : q.universals()) {
    const TGraph& t = line.graphs.at(u);
    if (t.root_node().kind != TNode::Kind::Leaf)
      return fail(Reason::WrongNodeKind, "axiom graph for " + std::to_string(u) +
                                             " must be a single leaf");
    if (t.topological().size() != 1)
      return fail(Reason::BadGraph, "axiom graph for " + std::to_string(u) + " has extra nodes");
    if (t.root_node().value != falsifying_u_literal(q, c, u))
      return fail(Reason::BadAxiom, "leaf for " + std::to_string(u) +
                                        " is not the falsifying literal of clause " +
                                        std::to_string(r.index));
  }
  return {};
}

LineStatus check_resolution(const Qbf& q, const MResTProof& proof, std::size_t i) {
  const MResTLine& line = proof[i - 1];
  const Rule& r = line.rule;
  const Var x = r.pivot;
  if (!refs_ok(r, i))
    return fail(Reason::BadReference, "premises must precede line " + std::to_string(i));
  if (!q.quantified(x))
    return fail(Reason::BadResolvent, "pivot " + std::to_string(x) + " is not quantified");
  if (q.is_universal(x))
    return fail(Reason::PivotUniversal, "pivot " + std::to_string(x) + " is universal");
  const MResTLine& pj = proof[r.j - 1];
  const MResTLine& pk = proof[r.k - 1];
  auto res = resolve(pj.clause, pk.clause, x);
  if (res.status == ResolveStatus::PivotMissing)
    return fail(Reason::BadResolvent, "pivot " + std::to_string(x) + " must be positive in line " +
                                          std::to_string(r.j) + " and negative in line " +
                                          std::to_string(r.k));
  if (res.status == ResolveStatus::Tautology)
    return fail(Reason::TautologicalResolvent, "resolvent is tautological");
  if (!line.clause.same_literals(res.clause))
    return fail(Reason::BadResolvent, "clause is not the resolvent of lines " +
                                          std::to_string(r.j) + " and " + std::to_string(r.k));

  std::optional<LineStatus> unknown;
  for (Var u : q.universals()) {
    const TGraph& t = line.graphs.at(u);
    const TGraph& tj = pj.graphs.at(u);
    const TGraph& tk = pk.graphs.at(u);
    const bool left = q.order().left_of(x, u);
    const auto want = left ? TNode::Kind::IfElse : TNode::Kind::Hash;
    const TNode& root = t.root_node();
    if (root.kind != want)
      return fail(Reason::WrongNodeKind,
                  "graph for " + std::to_string(u) + " needs a" +
                      (left ? "n if-else" : " #") + " root for pivot " + std::to_string(x));
    std::optional<TGraph> expected;
    try {
      expected = left ? TGraph::if_else(x, tk, tj, t.root()) : TGraph::hash(tj, tk, t.root());
    } catch (const PreconditionError& e) {
      return fail(Reason::BadGraph, e.what());
    }
    if (!tg_isomorphic(t, *expected))
      return fail(Reason::BadGraph, "graph for " + std::to_string(u) +
                                        " does not combine the premise graphs");
    if (left)
      continue;
    try {
      if (!strat_consistent(tg_table(tj), tg_table(tk)))
        return fail(Reason::InconsistentUnion,
                    "strategies for " + std::to_string(u) + " of lines " + std::to_string(r.j) +
                        " and " + std::to_string(r.k) + " are inconsistent");
    } catch (const ResourceLimitError& e) {
      if (!unknown)
        unknown = fail(Reason::Unverifiable, e.what());
    } catch (const PreconditionError& e) {
      return fail(Reason::BadGraph, e.what());
    }
  }
  if (unknown)
    return *unknown;
  return {};
}

} // namespace

CheckReport check_mrest(const Qbf& q, const MResTProof& proof) {
  CheckReport rep;
  rep.stats.size = proof.size();
  std::set<std::pair<Var, std::size_t>> nodes;
  bool unknown = false;
  for (std::size_t i = 1; i <= proof.size(); ++i) {
    const MResTLine& line = proof[i - 1];
    rep.stats.max_width = std::max(rep.stats.max_width, line.clause.width());
    for (const auto& [u, t] : line.graphs)
      for (const auto& [id, n] : t.nodes())
        nodes.emplace(u, id);

    LineStatus st;
    bool complete = true;
    for (Var u : q.universals())
      complete = complete && line.graphs.count(u);
    if (!line.rule.is_axiom() && refs_ok(line.rule, i))
      for (Var u : q.universals())
        complete = complete && proof[line.rule.j - 1].graphs.count(u) &&
                   proof[line.rule.k - 1].graphs.count(u);
    if (!complete)
      st = fail(Reason::BadGraph, "missing strategy graph for some universal");
    else if (line.rule.is_axiom())
      st = check_axiom(q, line);
    else
      st = check_resolution(q, proof, i);

    if (!st.ok) {
      if (st.reason == Reason::Unverifiable) {
        unknown = true;
      } else if (rep.failing_line == 0) {
        rep.failing_line = i;
        rep.reason = st.reason;
        rep.detail = st.detail;
      }
    }
    rep.lines.push_back(std::move(st));
  }
  rep.stats.node_count = nodes.size();
  std::set<Var> ex(q.existentials().begin(), q.existentials().end());
  rep.stats.regular = regularity(proof, ex);

  if (rep.failing_line != 0) {
    rep.verdict = Verdict::Invalid;
  } else if (proof.empty() || !proof.back().clause.empty()) {
    rep.verdict = Verdict::Invalid;
    rep.reason = Reason::NotRefutation;
    rep.detail = "last line is not the empty clause";
  } else if (unknown) {
    rep.verdict = Verdict::Unknown;
    for (std::size_t i = 0; i < rep.lines.size(); ++i)
      if (rep.lines[i].reason == Reason::Unverifiable) {
        rep.failing_line = i + 1;
        rep.reason = Reason::Unverifiable;
        rep.detail = rep.lines[i].detail;
        break;
      }
  } else {
    rep.verdict = Verdict::Valid;
  }
  return rep;
}

RuleScript to_script(const MResTProof& proof, bool with_clauses) {
  RuleScript s;
  s.reserve(proof.size());
  for (const auto& line : proof)
    s.push_back({line.rule, with_clauses ? std::optional<Clause>(line.clause) : std::nullopt});
  return s;
}

bool regularity(const MResTProof& proof, const std::set<Var>& s) {
  std::vector<Rule> rules;
  rules.reserve(proof.size());
  for (const auto& line : proof)
    rules.push_back(line.rule);
  return is_regular(rules, s);
}

std::map<Var, TGraph> extract_countermodel(const Qbf& q, const MResTProof& proof) {
  CheckReport rep = check_mrest(q, proof);
  if (!rep.valid())
    throw PreconditionError("countermodel extraction needs a valid refutation (" +
                            std::string(reason_name(rep.reason)) + ")");
  return proof.back().graphs;
}

} // namespace mresr
