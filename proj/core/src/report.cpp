#include "mresr/report.hpp"

namespace mresr {

std::string_view reason_name(Reason r) noexcept {
  switch (r) {
  case Reason::None: return "none";
  case Reason::BadAxiom: return "bad-axiom";
  case Reason::BadResolvent: return "bad-resolvent";
  case Reason::TautologicalResolvent: return "tautological-resolvent";
  case Reason::InconsistentUnion: return "inconsistent-union";
  case Reason::WrongNodeKind: return "wrong-node-kind";
  case Reason::PivotUniversal: return "pivot-universal";
  case Reason::BadGraph: return "bad-graph";
  case Reason::BadReference: return "bad-reference";
  case Reason::NotRefutation: return "not-refutation";
  case Reason::Unverifiable: return "unverifiable";
  case Reason::BlockedSelect: return "blocked-select";
  case Reason::BadSelect: return "bad-select";
  case Reason::BadMerge: return "bad-merge";
  case Reason::EntailmentFailure: return "entailment-failure";
  case Reason::Freshness: return "freshness";
  case Reason::Placement: return "placement";
  case Reason::ReductionSideCondition: return "reduction-side-condition";
  case Reason::ReductionMismatch: return "reduction-mismatch";
  case Reason::VariableBudget: return "variable-budget";
  case Reason::UnknownVariable: return "unknown-variable";
  }
  return "none";
}

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
  case Verdict::Valid: return "valid";
  case Verdict::Invalid: return "invalid";
  case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

} // namespace mresr
