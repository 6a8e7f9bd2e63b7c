#pragma once

#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mresr/clause.hpp"
#include "mresr/qbf.hpp"

namespace mresr {

/// Derivation rule of one proof line. Line and clause indices are 1-based.
struct Rule {
  enum class Kind { Axiom, Resolution };

  Kind kind = Kind::Axiom;
  std::size_t index = 0; // matrix clause, axioms only
  std::size_t j = 0;     // premise holding the pivot positively
  std::size_t k = 0;     // premise holding the pivot negatively
  Var pivot = 0;

  static Rule axiom(std::size_t index) { return {Kind::Axiom, index, 0, 0, 0}; }
  static Rule resolution(std::size_t j, std::size_t k, Var pivot) {
    return {Kind::Resolution, 0, j, k, pivot};
  }
  bool is_axiom() const noexcept { return kind == Kind::Axiom; }

  bool operator==(const Rule&) const = default;
};

/// One line of a representation-free proof skeleton; the clause is optional
/// and, when present, is checked against the replayed clause.
struct ScriptLine {
  Rule rule;
  std::optional<Clause> clause;

  bool operator==(const ScriptLine&) const = default;
};

using RuleScript = std::vector<ScriptLine>;

/// `.mrt` text: `p mrt <n>`, then `A <idx> [lits 0]` or `R <j> <k> <pivot> [lits 0]`
/// per line; `c` lines are comments.
RuleScript parse_mrt(std::istream& in);
RuleScript parse_mrt(std::string_view text);
/// Writes clauses when present.
std::string to_mrt(const RuleScript& script);

/// QDIMACS text immediately followed by an `.mrt` section; used for piping a
/// formula together with its proof.
struct Bundle {
  Qbf qbf;
  RuleScript script;
};
Bundle parse_bundle(std::string_view text);
std::string to_bundle(const Qbf& q, const RuleScript& script);
/// True if the text contains a `p mrt` header after a `p cnf` header.
bool looks_like_bundle(std::string_view text);

/// No leaf-to-root path of the derivation graph uses a pivot from `s` twice.
/// Only lines in the ancestry of the last line are considered; malformed
/// references are ignored.
bool is_regular(const std::vector<Rule>& rules, const std::set<Var>& s);

} // namespace mresr
