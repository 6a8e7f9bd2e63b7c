#include <algorithm>

#include "mresr/error.hpp"
#include "mresr/mrest.hpp"

namespace mresr {

namespace {

constexpr std::size_t kMaxExistentials = 20;

void check_existential_budget(const Qbf& q) {
  if (q.existentials().size() > kMaxExistentials)
    throw ResourceLimitError("exhaustive check over " + std::to_string(q.existentials().size()) +
                             " existentials exceeds the cap of " +
                             std::to_string(kMaxExistentials));
}

} // namespace

CountermodelReport verify_countermodel(const Qbf& q, const std::map<Var, TGraph>& strategies) {
  check_existential_budget(q);
  for (const auto& [u, t] : strategies) {
    if (!q.is_universal(u))
      throw PreconditionError("strategy given for non-universal " + std::to_string(u));
    auto left = q.left_existentials(u);
    for (Var v : t.support())
      if (!std::binary_search(left.begin(), left.end(), v))
        throw PreconditionError("strategy for " + std::to_string(u) + " reads variable " +
                                std::to_string(v) + " which is not left of it");
  }

  std::vector<Var> ex = q.existentials();
  std::sort(ex.begin(), ex.end());
  CountermodelReport rep;
  rep.valid = true;
  const std::uint64_t n = std::uint64_t{1} << ex.size();
  for (std::uint64_t bits = 0; bits < n; ++bits) {
    PartialAssignment alpha = assignment_from_bits(ex, bits);
    PartialAssignment defined = alpha;
    for (Var u : q.universals()) {
      auto it = strategies.find(u);
      TriVal v = it == strategies.end() ? TriVal::Star : tg_eval(it->second, alpha);
      defined.set(u, v);
      alpha.set(u, is_set(v) ? v : TriVal::Zero);
    }
    ++rep.assignments_checked;
    if (!falsifies_some_clause(q, alpha)) {
      if (rep.valid)
        rep.counterexample = assignment_from_bits(ex, bits);
      rep.valid = false;
    } else if (!falsifies_some_clause(q, defined)) {
      ++rep.ambiguous;
    }
  }
  return rep;
}

SoundnessReport line_soundness(const Qbf& q, const MResTProof& proof) {
  check_existential_budget(q);
  SoundnessReport rep;
  for (std::size_t i = 1; i <= proof.size(); ++i) {
    const MResTLine& line = proof[i - 1];
    std::vector<Var> free;
    for (Var v : q.existentials())
      if (!line.clause.contains_var(v))
        free.push_back(v);
    const std::uint64_t n = std::uint64_t{1} << free.size();
    for (std::uint64_t bits = 0; bits < n; ++bits) {
      PartialAssignment alpha = assignment_from_bits(free, bits);
      for (Literal l : line.clause.literals())
        alpha.set(l.var(), l.negated());
      bool ok = true;
      try {
        for (Var u : q.universals()) {
          auto it = line.graphs.find(u);
          if (it != line.graphs.end())
            alpha.set(u, tg_eval(it->second, alpha));
        }
        ok = falsifies_some_clause(q, alpha);
      } catch (const PreconditionError&) {
        ok = false;
      }
      ++rep.checks;
      if (!ok) {
        ++rep.violations;
        if (rep.first_violation == 0)
          rep.first_violation = i;
      }
    }
  }
  return rep;
}

} // namespace mresr
