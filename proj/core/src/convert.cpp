#include "mresr/convert.hpp"

namespace mresr {

namespace {

std::string describe(const char* what, const CheckReport& rep) {
  for (std::size_t i = 0; i < rep.lines.size(); ++i)
    if (!rep.lines[i].ok)
      return std::string(what) + " fails at line " + std::to_string(i + 1) + " (" +
             std::string(reason_name(rep.lines[i].reason)) + "): " + rep.lines[i].detail;
  return std::string(what) + " does not check";
}

bool lines_ok(const CheckReport& rep) {
  for (const auto& l : rep.lines)
    if (!l.ok)
      return false;
  return true;
}

} // namespace

RuleScript mres_to_script(const Qbf& q, const MResProof& proof) {
  CheckReport rep = check_mres(q, proof);
  if (!lines_ok(rep))
    throw ConversionError(describe("MRes proof", rep), rep);
  RuleScript s;
  s.reserve(proof.size());
  for (const auto& line : proof)
    s.push_back({line.rule.rule, line.clause});
  return s;
}

MResTProof script_to_mrest(const Qbf& q, const RuleScript& script) {
  MResTProof proof = replay_mrest(q, script);
  CheckReport rep = check_mrest(q, proof);
  if (!lines_ok(rep))
    throw ConversionError(describe("converted MRes-T proof", rep), rep);
  return proof;
}

MResTProof mres_to_mrest(const Qbf& q, const MResProof& proof) {
  return script_to_mrest(q, mres_to_script(q, proof));
}

} // namespace mresr
