#include "mresr/mres.hpp"

#include <set>
#include <sstream>

#include "mresr/error.hpp"

namespace mresr {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;)
    out.push_back(t);
  return out;
}

std::size_t to_index(const std::string& tok, std::size_t lineno) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size() || tok.empty() || tok[0] == '-' || v == 0)
    throw ParseError(lineno, "expected a positive integer, got '" + tok + "'");
  return static_cast<std::size_t>(v);
}

} // namespace

std::vector<MResRule> parse_mrs(std::istream& in) {
  std::vector<MResRule> rules;
  std::optional<std::size_t> declared;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens(line);
    if (toks.empty() || toks[0][0] == 'c')
      continue;
    if (toks[0] == "p") {
      if (declared)
        throw ParseError(lineno, "duplicate header");
      if (toks.size() != 3 || toks[1] != "mrs")
        throw ParseError(lineno, "malformed header, expected 'p mrs <lines>'");
      declared = toks[2] == "0" ? 0 : to_index(toks[2], lineno);
      continue;
    }
    if (!declared)
      throw ParseError(lineno, "content before 'p mrs' header");
    MResRule r;
    if (toks[0] == "A") {
      if (toks.size() != 2)
        throw ParseError(lineno, "axiom line must be 'A <idx>'");
      r.rule = Rule::axiom(to_index(toks[1], lineno));
    } else if (toks[0] == "R") {
      if (toks.size() < 4)
        throw ParseError(lineno, "resolution line needs 'R <j> <k> <pivot>'");
      r.rule = Rule::resolution(to_index(toks[1], lineno), to_index(toks[2], lineno),
                                static_cast<Var>(to_index(toks[3], lineno)));
      for (std::size_t t = 4; t < toks.size(); ++t) {
        auto colon = toks[t].find(':');
        if (colon == std::string::npos || colon + 2 != toks[t].size())
          throw ParseError(lineno, "bad choice '" + toks[t] + "', expected <u>:S or <u>:M");
        Var u = static_cast<Var>(to_index(toks[t].substr(0, colon), lineno));
        char c = toks[t][colon + 1];
        if (c != 'S' && c != 'M')
          throw ParseError(lineno, "bad choice '" + toks[t] + "', expected <u>:S or <u>:M");
        if (!r.choices.emplace(u, c == 'M' ? Choice::Merge : Choice::Select).second)
          throw ParseError(lineno, "duplicate choice for universal " + std::to_string(u));
      }
    } else {
      throw ParseError(lineno, "unknown line kind '" + toks[0] + "'");
    }
    rules.push_back(std::move(r));
  }
  if (!declared)
    throw ParseError(lineno, "missing 'p mrs' header");
  if (*declared != rules.size())
    throw ParseError(lineno, "header declares " + std::to_string(*declared) + " lines, found " +
                                 std::to_string(rules.size()));
  return rules;
}

std::vector<MResRule> parse_mrs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_mrs(in);
}

std::string to_mrs(const std::vector<MResRule>& rules) {
  std::string out = "p mrs " + std::to_string(rules.size()) + "\n";
  for (const auto& r : rules) {
    if (r.rule.is_axiom()) {
      out += "A " + std::to_string(r.rule.index) + "\n";
      continue;
    }
    out += "R " + std::to_string(r.rule.j) + " " + std::to_string(r.rule.k) + " " +
           std::to_string(r.rule.pivot);
    for (auto [u, c] : r.choices)
      out += " " + std::to_string(u) + (c == Choice::Merge ? ":M" : ":S");
    out += "\n";
  }
  return out;
}

namespace {

struct Derived {
  LineStatus status;
  MResLine line;
};

LineStatus fail(Reason r, std::string detail) { return {false, r, std::move(detail)}; }

std::map<Var, MergeMap> trivial_maps(const Qbf& q, std::size_t tag) {
  std::map<Var, MergeMap> maps;
  for (Var u : q.universals())
    maps.emplace(u, MergeMap::leaf(u, TriVal::Star, tag));
  return maps;
}

// The line that rule `r` yields at 1-based position `i` given earlier lines.
Derived derive(const Qbf& q, const MResProof& prior, const MResRule& r, std::size_t i) {
  Derived d;
  d.line.rule = r;
  const Rule& rule = r.rule;
  if (rule.is_axiom()) {
    if (rule.index < 1 || rule.index > q.matrix().size()) {
      d.status = fail(Reason::BadAxiom, "no matrix clause " + std::to_string(rule.index));
      d.line.maps = trivial_maps(q, i);
      return d;
    }
    const Clause& c = q.matrix()[rule.index - 1];
    d.line.clause = existential_subclause(q, c);
    for (Var u : q.universals())
      d.line.maps.emplace(u, MergeMap::leaf(u, falsifying_u_literal(q, c, u), i));
    return d;
  }

  d.line.maps = trivial_maps(q, i);
  if (rule.j < 1 || rule.j >= i || rule.k < 1 || rule.k >= i) {
    d.status = fail(Reason::BadReference, "premises must precede line " + std::to_string(i));
    return d;
  }
  if (!q.quantified(rule.pivot)) {
    d.status = fail(Reason::BadResolvent, "pivot " + std::to_string(rule.pivot) +
                                              " is not quantified");
    return d;
  }
  if (q.is_universal(rule.pivot)) {
    d.status = fail(Reason::PivotUniversal, "pivot " + std::to_string(rule.pivot) +
                                                " is universal");
    return d;
  }
  const MResLine& a = prior[rule.j - 1];
  const MResLine& b = prior[rule.k - 1];
  auto res = resolve(a.clause, b.clause, rule.pivot);
  if (res.status == ResolveStatus::PivotMissing) {
    d.status = fail(Reason::BadResolvent, "pivot " + std::to_string(rule.pivot) +
                                              " must be positive in line " +
                                              std::to_string(rule.j) + " and negative in line " +
                                              std::to_string(rule.k));
    return d;
  }
  if (res.status == ResolveStatus::Tautology) {
    d.status = fail(Reason::TautologicalResolvent, "resolvent is tautological");
    return d;
  }
  d.line.clause = res.clause;

  for (const auto& [u, c] : r.choices)
    if (!q.is_universal(u)) {
      d.status = fail(Reason::BadMerge, "choice given for non-universal " + std::to_string(u));
      return d;
    }

  for (Var u : q.universals())
    if (!a.maps.count(u) || !b.maps.count(u)) {
      d.status = fail(Reason::BadGraph, "premise lacks a merge map for " + std::to_string(u));
      return d;
    }

  for (Var u : q.universals()) {
    const MergeMap& ma = a.maps.at(u);
    const MergeMap& mb = b.maps.at(u);
    if (r.choice(u) == Choice::Merge) {
      if (!q.order().left_of(rule.pivot, u)) {
        if (d.status.ok)
          d.status = fail(Reason::BadMerge, "merge on pivot " + std::to_string(rule.pivot) +
                                                " which is right of " + std::to_string(u));
        d.line.maps[u] = ma;
        continue;
      }
      try {
        d.line.maps[u] = mm_merge(ma, mb, i, rule.pivot);
      } catch (const PreconditionError& e) {
        if (d.status.ok)
          d.status = fail(Reason::BadMerge, e.what());
      }
      continue;
    }
    try {
      d.line.maps[u] = mm_select(ma, mb);
    } catch (const PreconditionError&) {
      if (d.status.ok)
        d.status = fail(Reason::BlockedSelect,
                        "select blocked for universal " + std::to_string(u) +
                            ": merge maps of lines " + std::to_string(rule.j) + " and " +
                            std::to_string(rule.k) + " are not isomorphic");
      d.line.maps[u] = ma;
    }
  }
  return d;
}

} // namespace

MResProof replay_mres(const Qbf& q, const std::vector<MResRule>& rules) {
  MResProof proof;
  proof.reserve(rules.size());
  for (std::size_t i = 1; i <= rules.size(); ++i)
    proof.push_back(derive(q, proof, rules[i - 1], i).line);
  return proof;
}

CheckReport check_mres(const Qbf& q, const MResProof& proof) {
  CheckReport rep;
  rep.stats.size = proof.size();
  std::vector<Rule> rules;
  std::set<std::pair<Var, std::size_t>> nodes;
  for (std::size_t i = 1; i <= proof.size(); ++i) {
    const MResLine& line = proof[i - 1];
    rules.push_back(line.rule.rule);
    rep.stats.max_width = std::max(rep.stats.max_width, line.clause.width());
    for (const auto& [u, m] : line.maps)
      for (const auto& [id, n] : m.nodes())
        nodes.emplace(u, id);

    LineStatus st;
    bool has_maps = true;
    for (Var u : q.universals())
      has_maps = has_maps && line.maps.count(u);
    if (!has_maps) {
      st = fail(Reason::BadGraph, "missing merge map for some universal");
    } else if (!line.rule.rule.is_axiom() &&
               (line.rule.rule.j >= i || line.rule.rule.k >= i || line.rule.rule.j < 1 ||
                line.rule.rule.k < 1)) {
      st = fail(Reason::BadReference, "premises must precede line " + std::to_string(i));
    } else {
      Derived d = derive(q, proof, line.rule, i);
      st = d.status;
      Reason mismatch = line.rule.rule.is_axiom() ? Reason::BadAxiom : Reason::BadResolvent;
      if (st.ok && !line.clause.same_literals(d.line.clause))
        st = fail(mismatch, "clause does not match the rule");
      if (st.ok)
        for (Var u : q.universals()) {
          if (mm_isomorphic(line.maps.at(u), d.line.maps.at(u)))
            continue;
          Reason rr = line.rule.rule.is_axiom() ? Reason::BadAxiom
                      : line.rule.choice(u) == Choice::Merge ? Reason::BadMerge
                                                             : Reason::BadSelect;
          st = fail(rr, "merge map for universal " + std::to_string(u) +
                            " does not match the rule");
          break;
        }
    }
    if (!st.ok && rep.failing_line == 0) {
      rep.failing_line = i;
      rep.reason = st.reason;
      rep.detail = st.detail;
    }
    rep.lines.push_back(std::move(st));
  }
  rep.stats.node_count = nodes.size();
  std::set<Var> ex(q.existentials().begin(), q.existentials().end());
  rep.stats.regular = is_regular(rules, ex);

  if (rep.failing_line != 0) {
    rep.verdict = Verdict::Invalid;
  } else if (proof.empty() || !proof.back().clause.empty()) {
    rep.verdict = Verdict::Invalid;
    rep.reason = Reason::NotRefutation;
    rep.detail = "last line is not the empty clause";
  } else {
    rep.verdict = Verdict::Valid;
  }
  return rep;
}

} // namespace mresr
