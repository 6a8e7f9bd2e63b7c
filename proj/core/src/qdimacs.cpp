#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "mresr/qbf.hpp"

namespace mresr {

namespace {

bool parse_int(std::string_view tok, long long& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i)
      toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

} // namespace

Qbf parse_qdimacs(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long long num_vars = 0, num_clauses = 0;
  std::vector<QuantBlock> blocks;
  std::vector<Clause> matrix;
  std::vector<Literal> pending;
  std::size_t pending_line = 0;
  std::set<Var> quantified;

  auto check_var = [&](long long v) {
    if (v < 1 || v > num_vars)
      throw ParseError(lineno, "variable " + std::to_string(v) + " out of declared range 1.." +
                                   std::to_string(num_vars));
    return static_cast<Var>(v);
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == 'c')
      continue;
    if (toks[0] == "p") {
      if (have_header)
        throw ParseError(lineno, "duplicate p-line");
      if (toks.size() != 4 || toks[1] != "cnf" || !parse_int(toks[2], num_vars) ||
          !parse_int(toks[3], num_clauses) || num_vars < 0 || num_clauses < 0)
        throw ParseError(lineno, "malformed p-line, expected 'p cnf <vars> <clauses>'");
      have_header = true;
      continue;
    }
    if (!have_header)
      throw ParseError(lineno, "content before p-line");

    if (toks[0] == "a" || toks[0] == "e") {
      if (!matrix.empty() || !pending.empty())
        throw ParseError(lineno, "quantifier line after clauses");
      QuantBlock block{toks[0] == "a" ? Quantifier::Forall : Quantifier::Exists, {}};
      bool terminated = false;
      for (std::size_t t = 1; t < toks.size(); ++t) {
        long long v;
        if (!parse_int(toks[t], v))
          throw ParseError(lineno, "bad token '" + std::string(toks[t]) + "'");
        if (terminated)
          throw ParseError(lineno, "tokens after terminating 0");
        if (v == 0) {
          terminated = true;
          continue;
        }
        Var var = check_var(v);
        if (!quantified.insert(var).second)
          throw ParseError(lineno, "variable " + std::to_string(v) + " quantified twice");
        block.vars.push_back(var);
      }
      if (!terminated)
        throw ParseError(lineno, "quantifier line not terminated by 0");
      blocks.push_back(std::move(block));
      continue;
    }

    for (auto tok : toks) {
      long long l;
      if (!parse_int(tok, l))
        throw ParseError(lineno, "bad token '" + std::string(tok) + "'");
      if (l == 0) {
        auto c = Clause::try_make(std::move(pending));
        if (!c)
          throw ParseError(pending_line ? pending_line : lineno, "tautological clause");
        matrix.push_back(std::move(*c));
        pending.clear();
        pending_line = 0;
        continue;
      }
      check_var(l < 0 ? -l : l);
      if (pending.empty())
        pending_line = lineno;
      pending.push_back(Literal::from_dimacs(static_cast<int>(l)));
    }
  }
  if (!have_header)
    throw ParseError(lineno, "missing p-line");
  if (!pending.empty())
    throw ParseError(pending_line, "clause not terminated by 0");
  if (static_cast<long long>(matrix.size()) != num_clauses)
    throw ParseError(lineno, "p-line declares " + std::to_string(num_clauses) +
                                 " clauses, found " + std::to_string(matrix.size()));

  std::vector<Var> free_vars;
  std::set<Var> seen;
  for (const auto& c : matrix)
    for (Literal l : c.literals())
      if (!quantified.count(l.var()) && seen.insert(l.var()).second)
        free_vars.push_back(l.var());
  if (!free_vars.empty()) {
    std::sort(free_vars.begin(), free_vars.end());
    blocks.insert(blocks.begin(), QuantBlock{Quantifier::Exists, std::move(free_vars)});
  }
  return Qbf(static_cast<Var>(num_vars), std::move(blocks), std::move(matrix));
}

Qbf parse_qdimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_qdimacs(in);
}

std::string to_qdimacs(const Qbf& q) {
  std::string out = "p cnf " + std::to_string(q.num_vars()) + " " +
                    std::to_string(q.matrix().size()) + "\n";
  for (const auto& b : q.blocks()) {
    out += b.quantifier == Quantifier::Forall ? "a" : "e";
    for (Var v : b.vars)
      out += " " + std::to_string(v);
    out += " 0\n";
  }
  for (const auto& c : q.matrix())
    out += c.to_dimacs() + "\n";
  return out;
}

} // namespace mresr
