#pragma once

#include "mresr/mres.hpp"
#include "mresr/mrest.hpp"
#include "mresr/rule_script.hpp"

namespace mresr {

/// Thrown when a conversion input does not check; carries the checker report.
class ConversionError : public PreconditionError {
public:
  ConversionError(const std::string& what, CheckReport report)
      : PreconditionError(what), report_(std::move(report)) {}
  const CheckReport& report() const noexcept { return report_; }

private:
  CheckReport report_;
};

/// Drops merge maps and Select/Merge choices, keeping rules and clauses.
/// Every line of the input must pass check_mres.
RuleScript mres_to_script(const Qbf& q, const MResProof& proof);

/// Replays the script with MRes-T graphs and returns it once every line
/// passes check_mrest (the last clause need not be empty).
MResTProof script_to_mrest(const Qbf& q, const RuleScript& script);

MResTProof mres_to_mrest(const Qbf& q, const MResProof& proof);

} // namespace mresr
