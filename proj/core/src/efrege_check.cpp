#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

#include "mresr/efrege.hpp"
#include "mresr/error.hpp"

namespace mresr {

Formula clause_formula(const Clause& c) {
  std::vector<Formula> lits;
  for (Literal l : c.literals()) {
    Formula v = Formula::var(std::to_string(l.var()));
    lits.push_back(l.negated() ? ~v : v);
  }
  return disjunction(lits);
}

// ---- .efr text ------------------------------------------------------------

namespace {

// Splits a line into top-level items: bare tokens or balanced s-expressions.
std::vector<std::string> items(std::string_view s, std::size_t lineno) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (s[i] == '(') {
      int depth = 0;
      for (; i < s.size(); ++i) {
        if (s[i] == '(')
          ++depth;
        else if (s[i] == ')' && --depth == 0)
          break;
      }
      if (i == s.size())
        throw ParseError(lineno, "unbalanced parentheses");
      ++i;
    } else {
      if (s[i] == ')')
        throw ParseError(lineno, "unbalanced parentheses");
      while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '(')
        ++i;
    }
    out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

std::size_t number(const std::string& tok, std::size_t lineno) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError(lineno, "expected a number, got '" + tok + "'");
  try {
    return static_cast<std::size_t>(std::stoull(tok));
  } catch (const std::exception&) {
    throw ParseError(lineno, "number out of range: '" + tok + "'");
  }
}

Formula formula_item(const std::string& tok, std::size_t lineno) {
  try {
    return parse_formula(tok);
  } catch (const ParseError& e) {
    throw ParseError(lineno, e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(lineno, e.what());
  }
}

} // namespace

Certificate parse_efr(std::string_view text) {
  Certificate cert;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto it = items(line, lineno);
    if (it.empty() || it[0][0] == 'c')
      continue;
    if (it.size() < 3)
      throw ParseError(lineno, "expected '<idx> <EXT|INF|RED> ...'");
    EFregeLine l;
    l.index = number(it[0], lineno);
    const std::string& kind = it[1];
    if (kind == "EXT") {
      if (it.size() != 4)
        throw ParseError(lineno, "EXT needs '<var> <formula>'");
      l.kind = EFregeLine::Kind::Ext;
      l.var = it[2];
      if (l.var.empty() || !std::all_of(l.var.begin(), l.var.end(), [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
          }))
        throw ParseError(lineno, "bad variable name '" + l.var + "'");
      l.formula = formula_item(it[3], lineno);
    } else if (kind == "INF") {
      if (it.size() < 4 || it.size() > 3 + kMaxPremises)
        throw ParseError(lineno, "INF needs 1 to 4 premises and a formula");
      l.kind = EFregeLine::Kind::Inf;
      for (std::size_t p = 2; p + 1 < it.size(); ++p)
        l.premises.push_back(number(it[p], lineno));
      l.formula = formula_item(it.back(), lineno);
    } else if (kind == "RED") {
      if (it.size() != 6)
        throw ParseError(lineno, "RED needs '<i> <u> <0|1> <formula>'");
      l.kind = EFregeLine::Kind::Red;
      l.premises.push_back(number(it[2], lineno));
      l.u = static_cast<Var>(number(it[3], lineno));
      if (it[4] != "0" && it[4] != "1")
        throw ParseError(lineno, "RED constant must be 0 or 1");
      l.value = it[4] == "1";
      l.formula = formula_item(it[5], lineno);
    } else {
      throw ParseError(lineno, "unknown rule '" + kind + "'");
    }
    cert.push_back(std::move(l));
  }
  return cert;
}

std::string to_efr(const Certificate& cert) {
  std::string out;
  for (const auto& l : cert) {
    out += std::to_string(l.index);
    switch (l.kind) {
    case EFregeLine::Kind::Ext:
      out += " EXT " + l.var;
      break;
    case EFregeLine::Kind::Inf:
      out += " INF";
      for (std::size_t p : l.premises)
        out += " " + std::to_string(p);
      break;
    case EFregeLine::Kind::Red:
      out += " RED " + std::to_string(l.premises.at(0)) + " " + std::to_string(l.u) +
             (l.value ? " 1" : " 0");
      break;
    }
    out += " " + l.formula.to_string() + "\n";
  }
  return out;
}

// ---- checker --------------------------------------------------------------

namespace {

LineStatus fail(Reason r, std::string detail) { return {false, r, std::move(detail)}; }

bool all_digits(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::uint64_t column_mask(std::size_t k) {
  static constexpr std::uint64_t kPatterns[6] = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  return kPatterns[k];
}

// True iff the conjunction of `premises` entails `goal` over `vars`.
bool entails(const std::vector<Formula>& premises, const Formula& goal,
             const std::set<std::string>& vars) {
  std::map<std::string, int> index;
  for (const auto& v : vars)
    index.emplace(v, static_cast<int>(index.size()));
  const std::size_t n = vars.size();
  const std::uint64_t rows = std::uint64_t{1} << n;
  const std::uint64_t blocks = rows >= 64 ? rows / 64 : 1;
  const std::uint64_t valid = rows >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << rows) - 1);
  std::vector<std::uint64_t> masks(n);
  for (std::uint64_t blk = 0; blk < blocks; ++blk) {
    for (std::size_t k = 0; k < n; ++k)
      masks[k] = k < 6 ? column_mask(k) : (((blk >> (k - 6)) & 1u) ? ~std::uint64_t{0} : 0);
    std::uint64_t bad = valid;
    for (const auto& p : premises) {
      bad &= eval64(p, index, masks);
      if (!bad)
        break;
    }
    if (bad & ~eval64(goal, index, masks))
      return false;
  }
  return true;
}

class Checker {
public:
  explicit Checker(const Qbf& q) : q_(q) {
    for (std::size_t b = 0; b < q.blocks().size(); ++b)
      for (Var v : q.blocks()[b].vars)
        level_[std::to_string(v)] = 2 * static_cast<int>(b);
    for (std::size_t c = 0; c < q.matrix().size(); ++c)
      formulas_[c + 1] = clause_formula(q.matrix()[c]);
  }

  CheckReport run(const Certificate& cert) {
    CheckReport rep;
    rep.stats.size = cert.size();
    const std::size_t base = q_.matrix().size();
    for (std::size_t pos = 0; pos < cert.size(); ++pos) {
      const EFregeLine& l = cert[pos];
      LineStatus st;
      if (l.index != base + 1 + pos)
        st = fail(Reason::BadReference, "expected index " + std::to_string(base + 1 + pos));
      else
        st = check_line(l);
      formulas_[l.index] = l.kind == EFregeLine::Kind::Ext
                               ? iff(Formula::var(l.var), l.formula)
                               : l.formula;
      if (!st.ok && rep.failing_line == 0) {
        rep.failing_line = l.index;
        rep.reason = st.reason;
        rep.detail = st.detail;
      }
      rep.lines.push_back(std::move(st));
    }
    if (rep.failing_line != 0) {
      rep.verdict = Verdict::Invalid;
    } else if (cert.empty() || !cert.back().formula.is_const(false) ||
               cert.back().kind == EFregeLine::Kind::Ext) {
      rep.verdict = Verdict::Invalid;
      rep.reason = Reason::NotRefutation;
      rep.detail = "last line is not F";
    } else {
      rep.verdict = Verdict::Valid;
    }
    return rep;
  }

private:
  std::optional<LineStatus> unknown_vars(const std::set<std::string>& vars) const {
    for (const auto& v : vars)
      if (!level_.count(v))
        return fail(Reason::UnknownVariable, "unknown variable '" + v + "'");
    return std::nullopt;
  }

  int placement(const std::string& name, const std::set<std::string>& def_vars) const {
    static const std::regex pattern("[vd]_([0-9]+)_([0-9]+)_([0-9]+)");
    std::smatch m;
    if (std::regex_match(name, m, pattern)) {
      Var u = static_cast<Var>(std::stoul(m[2].str()));
      if (q_.is_universal(u))
        return 2 * static_cast<int>(q_.order().block(u)) - 1;
    }
    // Constant definitions sit left of everything, including a leading
    // universal block.
    int lvl = -1;
    for (const auto& v : def_vars)
      lvl = std::max(lvl, level_.at(v));
    bool universal_level = lvl >= 0 && lvl % 2 == 0 && static_cast<std::size_t>(lvl / 2) < q_.blocks().size() &&
                           q_.blocks()[static_cast<std::size_t>(lvl / 2)].quantifier ==
                               Quantifier::Forall;
    return universal_level ? lvl + 1 : lvl;
  }

  LineStatus check_line(const EFregeLine& l) {
    switch (l.kind) {
    case EFregeLine::Kind::Ext: {
      if (all_digits(l.var) || level_.count(l.var))
        return fail(Reason::Freshness, "extension variable '" + l.var + "' is not fresh");
      auto vars = l.formula.vars();
      if (auto e = unknown_vars(vars))
        return *e;
      int lvl = placement(l.var, vars);
      for (const auto& v : vars)
        if (level_.at(v) > lvl)
          return fail(Reason::Placement, "definition of '" + l.var + "' uses '" + v +
                                             "' which lies to its right");
      level_[l.var] = lvl;
      return {};
    }
    case EFregeLine::Kind::Inf: {
      if (l.premises.empty() || l.premises.size() > kMaxPremises)
        return fail(Reason::BadReference, "inference needs 1 to 4 premises");
      std::vector<Formula> prem;
      std::set<std::string> vars = l.formula.vars();
      for (std::size_t p : l.premises) {
        auto it = formulas_.find(p);
        if (p >= l.index || it == formulas_.end())
          return fail(Reason::BadReference, "premise " + std::to_string(p) + " is not earlier");
        prem.push_back(it->second);
        it->second.collect_vars(vars);
      }
      if (auto e = unknown_vars(vars))
        return *e;
      if (vars.size() > kMaxInferenceVars)
        return fail(Reason::VariableBudget, std::to_string(vars.size()) +
                                                " variables exceed the budget of " +
                                                std::to_string(kMaxInferenceVars));
      if (!entails(prem, l.formula, vars))
        return fail(Reason::EntailmentFailure, "formula does not follow from its premises");
      return {};
    }
    case EFregeLine::Kind::Red: {
      std::size_t p = l.premises.empty() ? 0 : l.premises[0];
      auto it = formulas_.find(p);
      if (p >= l.index || it == formulas_.end())
        return fail(Reason::BadReference, "premise " + std::to_string(p) + " is not earlier");
      if (!q_.is_universal(l.u))
        return fail(Reason::ReductionSideCondition,
                    "variable " + std::to_string(l.u) + " is not universal");
      auto vars = it->second.vars();
      if (auto e = unknown_vars(vars))
        return *e;
      const int lu = level_.at(std::to_string(l.u));
      for (const auto& v : vars)
        if (level_.at(v) > lu)
          return fail(Reason::ReductionSideCondition,
                      "'" + v + "' lies right of universal " + std::to_string(l.u));
      if (!(l.formula == it->second.substitute(std::to_string(l.u), l.value)))
        return fail(Reason::ReductionMismatch, "formula is not the premise with " +
                                                   std::to_string(l.u) + " replaced");
      return {};
    }
    }
    return {};
  }

  const Qbf& q_;
  std::map<std::string, int> level_;
  std::map<std::size_t, Formula> formulas_;
};

} // namespace

CheckReport check_efrege(const Qbf& q, const Certificate& cert) { return Checker(q).run(cert); }

} // namespace mresr
