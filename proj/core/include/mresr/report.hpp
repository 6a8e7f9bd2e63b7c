#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mresr {

enum class Verdict { Valid, Invalid, Unknown };

/// Why a line (or a whole proof/certificate) was rejected.
enum class Reason {
  None,
  BadAxiom,
  BadResolvent,
  TautologicalResolvent,
  InconsistentUnion,
  WrongNodeKind,
  PivotUniversal,
  BadGraph,
  BadReference,
  NotRefutation,
  Unverifiable,
  BlockedSelect,
  BadSelect,
  BadMerge,
  EntailmentFailure,
  Freshness,
  Placement,
  ReductionSideCondition,
  ReductionMismatch,
  VariableBudget,
  UnknownVariable,
};

/// Kebab-case reason code used in reports, e.g. "inconsistent-union".
std::string_view reason_name(Reason r) noexcept;
std::string_view verdict_name(Verdict v) noexcept;

struct LineStatus {
  bool ok = true;
  Reason reason = Reason::None;
  std::string detail;
};

struct ProofStats {
  std::size_t size = 0;       // number of lines
  std::size_t max_width = 0;  // widest clause
  bool regular = true;        // no pivot reused on a derivation path
  std::size_t node_count = 0; // distinct strategy-graph nodes
};

struct CheckReport {
  Verdict verdict = Verdict::Invalid;
  std::vector<LineStatus> lines;
  std::size_t failing_line = 0; // 1-based; 0 when no single line is at fault
  Reason reason = Reason::None;
  std::string detail;
  ProofStats stats;

  bool valid() const noexcept { return verdict == Verdict::Valid; }
};

} // namespace mresr
