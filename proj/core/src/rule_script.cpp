#include "mresr/rule_script.hpp"

#include <charconv>
#include <map>
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

long long to_int(const std::string& tok, std::size_t lineno) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(lineno, "bad token '" + tok + "'");
  return v;
}

std::size_t to_index(const std::string& tok, std::size_t lineno) {
  long long v = to_int(tok, lineno);
  if (v < 1)
    throw ParseError(lineno, "index must be positive, got '" + tok + "'");
  return static_cast<std::size_t>(v);
}

std::optional<Clause> trailing_clause(const std::vector<std::string>& toks, std::size_t from,
                                      std::size_t lineno) {
  if (from >= toks.size())
    return std::nullopt;
  std::vector<Literal> lits;
  for (std::size_t t = from; t < toks.size(); ++t) {
    long long l = to_int(toks[t], lineno);
    if (l == 0) {
      if (t + 1 != toks.size())
        throw ParseError(lineno, "tokens after terminating 0");
      auto c = Clause::try_make(std::move(lits));
      if (!c)
        throw ParseError(lineno, "tautological clause");
      return c;
    }
    lits.push_back(Literal::from_dimacs(static_cast<int>(l)));
  }
  throw ParseError(lineno, "clause not terminated by 0");
}

} // namespace

RuleScript parse_mrt(std::istream& in) {
  RuleScript script;
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
      if (toks.size() != 3 || toks[1] != "mrt")
        throw ParseError(lineno, "malformed header, expected 'p mrt <lines>'");
      long long n = to_int(toks[2], lineno);
      if (n < 0)
        throw ParseError(lineno, "negative line count");
      declared = static_cast<std::size_t>(n);
      continue;
    }
    if (!declared)
      throw ParseError(lineno, "content before 'p mrt' header");
    ScriptLine sl;
    if (toks[0] == "A") {
      if (toks.size() < 2)
        throw ParseError(lineno, "axiom line needs a clause index");
      sl.rule = Rule::axiom(to_index(toks[1], lineno));
      sl.clause = trailing_clause(toks, 2, lineno);
    } else if (toks[0] == "R") {
      if (toks.size() < 4)
        throw ParseError(lineno, "resolution line needs 'R <j> <k> <pivot>'");
      sl.rule = Rule::resolution(to_index(toks[1], lineno), to_index(toks[2], lineno),
                                 static_cast<Var>(to_index(toks[3], lineno)));
      sl.clause = trailing_clause(toks, 4, lineno);
    } else {
      throw ParseError(lineno, "unknown line kind '" + toks[0] + "'");
    }
    script.push_back(std::move(sl));
  }
  if (!declared)
    throw ParseError(lineno, "missing 'p mrt' header");
  if (*declared != script.size())
    throw ParseError(lineno, "header declares " + std::to_string(*declared) + " lines, found " +
                                 std::to_string(script.size()));
  return script;
}

RuleScript parse_mrt(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_mrt(in);
}

std::string to_mrt(const RuleScript& script) {
  std::string out = "p mrt " + std::to_string(script.size()) + "\n";
  for (const auto& sl : script) {
    if (sl.rule.is_axiom())
      out += "A " + std::to_string(sl.rule.index);
    else
      out += "R " + std::to_string(sl.rule.j) + " " + std::to_string(sl.rule.k) + " " +
             std::to_string(sl.rule.pivot);
    if (sl.clause)
      out += " " + sl.clause->to_dimacs();
    out += "\n";
  }
  return out;
}

namespace {

std::size_t mrt_header_offset(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    auto toks = tokens(std::string(text.substr(pos, end - pos)));
    if (toks.size() >= 2 && toks[0] == "p" && toks[1] == "mrt")
      return pos;
    pos = end + 1;
  }
  return std::string_view::npos;
}

} // namespace

bool looks_like_bundle(std::string_view text) {
  std::size_t at = mrt_header_offset(text);
  return at != std::string_view::npos && text.substr(0, at).find("p cnf") != std::string_view::npos;
}

Bundle parse_bundle(std::string_view text) {
  std::size_t at = mrt_header_offset(text);
  if (at == std::string_view::npos)
    throw ParseError(0, "bundle has no 'p mrt' section");
  Qbf q = parse_qdimacs(text.substr(0, at));
  return {std::move(q), parse_mrt(text.substr(at))};
}

std::string to_bundle(const Qbf& q, const RuleScript& script) {
  return to_qdimacs(q) + to_mrt(script);
}

bool is_regular(const std::vector<Rule>& rules, const std::set<Var>& s) {
  const std::size_t n = rules.size();
  if (n == 0 || s.empty())
    return true;
  auto valid_ref = [&](std::size_t i, std::size_t r) { return r >= 1 && r < i; };

  // Lines in the ancestry of the last line (1-based).
  std::vector<bool> live(n + 1, false);
  live[n] = true;
  for (std::size_t i = n; i >= 1; --i) {
    if (!live[i] || rules[i - 1].is_axiom())
      continue;
    for (std::size_t r : {rules[i - 1].j, rules[i - 1].k})
      if (valid_ref(i, r))
        live[r] = true;
  }

  // For each pivot in s, the set of earlier pivot lines below each line.
  // below[i][x] = true if some proper ancestor of i resolves on x.
  std::vector<std::set<Var>> below(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    const Rule& r = rules[i - 1];
    if (r.is_axiom())
      continue;
    for (std::size_t p : {r.j, r.k}) {
      if (!valid_ref(i, p))
        continue;
      below[i].insert(below[p].begin(), below[p].end());
      const Rule& pr = rules[p - 1];
      if (!pr.is_axiom() && s.count(pr.pivot))
        below[i].insert(pr.pivot);
    }
    if (live[i] && s.count(r.pivot) && below[i].count(r.pivot))
      return false;
  }
  return true;
}

} // namespace mresr
