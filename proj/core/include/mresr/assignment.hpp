#pragma once

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "mresr/clause.hpp"
#include "mresr/trival.hpp"

namespace mresr {

/// Three-valued assignment; every variable not explicitly set is *.
class PartialAssignment {
public:
  PartialAssignment() = default;
  PartialAssignment(std::initializer_list<std::pair<Var, TriVal>> init);

  TriVal operator[](Var v) const noexcept {
    return v < values_.size() ? values_[v] : TriVal::Star;
  }

  void set(Var v, TriVal value);
  void set(Var v, bool value) { set(v, to_trival(value)); }
  void clear(Var v) { set(v, TriVal::Star); }

  bool assigns(Var v) const noexcept { return is_set((*this)[v]); }
  bool complete_on(std::span<const Var> vars) const noexcept;
  std::vector<Var> assigned() const;

  bool satisfies(Literal lit) const noexcept {
    TriVal v = (*this)[lit.var()];
    return is_set(v) && (v == TriVal::One) == lit.positive();
  }
  bool falsifies(Literal lit) const noexcept {
    TriVal v = (*this)[lit.var()];
    return is_set(v) && (v == TriVal::One) != lit.positive();
  }

  /// Equality of the induced functions (trailing stars are irrelevant).
  friend bool operator==(const PartialAssignment& a, const PartialAssignment& b) noexcept;

private:
  std::vector<TriVal> values_;
};

/// True iff no variable is 0 in one and 1 in the other.
bool assign_consistent(const PartialAssignment& a, const PartialAssignment& b) noexcept;

/// Pointwise join; throws PreconditionError on inconsistent inputs.
PartialAssignment assign_union(const PartialAssignment& a, const PartialAssignment& b);

/// Assignment of `vars` read from the low bits of `bits` (bit k -> vars[k]).
PartialAssignment assignment_from_bits(std::span<const Var> vars, std::uint64_t bits);

} // namespace mresr
