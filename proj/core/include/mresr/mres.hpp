#pragma once

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mresr/merge_map.hpp"
#include "mresr/qbf.hpp"
#include "mresr/report.hpp"
#include "mresr/rule_script.hpp"

namespace mresr {

/// Per-universal choice at a resolution step. Merge is only legal when the
/// pivot is left of the universal.
enum class Choice { Select, Merge };

struct MResRule {
  Rule rule;
  std::map<Var, Choice> choices; // absent universals default to Select

  Choice choice(Var u) const {
    auto it = choices.find(u);
    return it == choices.end() ? Choice::Select : it->second;
  }
  bool operator==(const MResRule&) const = default;
};

struct MResLine {
  Clause clause;
  std::map<Var, MergeMap> maps;
  MResRule rule;
};

using MResProof = std::vector<MResLine>;

/// `.mrs` text: `p mrs <n>`, then `A <idx>` or `R <j> <k> <pivot> [u:S|u:M]*`.
std::vector<MResRule> parse_mrs(std::istream& in);
std::vector<MResRule> parse_mrs(std::string_view text);
std::string to_mrs(const std::vector<MResRule>& rules);

/// Builds lines from rules. Lines whose rule cannot be applied get an empty
/// clause and trivial maps (or the first operand on a blocked select), so
/// check_mres pinpoints the first bad line.
MResProof replay_mres(const Qbf& q, const std::vector<MResRule>& rules);

/// Verifies every line against the MRes axiom and resolution rules.
CheckReport check_mres(const Qbf& q, const MResProof& proof);

} // namespace mresr
