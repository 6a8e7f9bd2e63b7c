#pragma once

#include <map>
#include <set>
#include <vector>

#include "mresr/qbf.hpp"
#include "mresr/report.hpp"
#include "mresr/rule_script.hpp"
#include "mresr/tgraph.hpp"

namespace mresr {

struct MResTLine {
  Clause clause;
  std::map<Var, TGraph> graphs;
  Rule rule;
};

using MResTProof = std::vector<MResTLine>;

/// Builds lines from a script without validating them: clauses come from
/// the script when given and from resolution otherwise; graphs follow the
/// position of the pivot (if-else when left of u, # when right). Lines whose
/// rule cannot be applied get an empty clause and * leaves.
MResTProof replay_mrest(const Qbf& q, const RuleScript& script);

/// Checks every line, continuing past failures. A # step whose operand
/// tables exceed the support cap yields an unknown verdict.
CheckReport check_mrest(const Qbf& q, const MResTProof& proof);

/// No leaf-to-root path uses a pivot from `s` twice.
bool regularity(const MResTProof& proof, const std::set<Var>& s);

/// Rules only, for regularity and conversion.
RuleScript to_script(const MResTProof& proof, bool with_clauses = true);

/// Graphs of the final line. Throws PreconditionError unless the proof
/// checks as a valid refutation.
std::map<Var, TGraph> extract_countermodel(const Qbf& q, const MResTProof& proof);

struct CountermodelReport {
  bool valid = false;
  std::uint64_t assignments_checked = 0;
  /// Assignments where only the * -> 0 default made some clause false.
  std::uint64_t ambiguous = 0;
  /// First existential assignment under which the matrix stays satisfiable.
  std::optional<PartialAssignment> counterexample;
};

/// For every complete existential assignment, sets each universal from its
/// graph (missing graphs are constant *, * defaults to 0) and requires some
/// matrix clause to be false. At most 20 existentials.
CountermodelReport verify_countermodel(const Qbf& q, const std::map<Var, TGraph>& strategies);

struct SoundnessReport {
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::size_t first_violation = 0; // 1-based line, 0 if none
};

/// For every line i and every existential assignment falsifying C_i, the
/// non-* universal values of the line's graphs must falsify a matrix clause.
SoundnessReport line_soundness(const Qbf& q, const MResTProof& proof);

} // namespace mresr
