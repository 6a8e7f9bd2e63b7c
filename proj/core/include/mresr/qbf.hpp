#pragma once

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mresr/assignment.hpp"
#include "mresr/clause.hpp"
#include "mresr/trival.hpp"

namespace mresr {

enum class Quantifier : std::uint8_t { Exists, Forall };

struct QuantBlock {
  Quantifier quantifier;
  std::vector<Var> vars;

  bool operator==(const QuantBlock&) const = default;
};

/// Block index per variable. `left_of(y, x)` holds iff y sits in a strictly
/// earlier block than x.
class PrefixOrder {
public:
  PrefixOrder() = default;
  PrefixOrder(const std::vector<QuantBlock>& blocks, Var num_vars);

  bool quantified(Var v) const noexcept {
    return v < block_.size() && block_[v] >= 0;
  }
  /// Throws PreconditionError for an unquantified variable.
  std::size_t block(Var v) const;
  bool left_of(Var y, Var x) const { return block(y) < block(x); }

private:
  std::vector<int> block_;
};

/// Closed prenex CNF QBF: alternating blocks over pairwise disjoint
/// variable sets and a matrix of clauses over the quantified variables.
class Qbf {
public:
  Qbf() = default;
  /// Drops empty blocks and merges adjacent blocks with equal quantifiers.
  /// Throws PreconditionError on overlapping blocks, out-of-range or
  /// unquantified matrix variables.
  Qbf(Var num_vars, std::vector<QuantBlock> blocks, std::vector<Clause> matrix);

  Var num_vars() const noexcept { return num_vars_; }
  const std::vector<QuantBlock>& blocks() const noexcept { return blocks_; }
  const std::vector<Clause>& matrix() const noexcept { return matrix_; }
  const PrefixOrder& order() const noexcept { return order_; }

  bool quantified(Var v) const noexcept { return order_.quantified(v); }
  Quantifier quantifier(Var v) const;
  bool is_universal(Var v) const noexcept;
  bool is_existential(Var v) const noexcept;

  /// Universal variables in prefix order.
  const std::vector<Var>& universals() const noexcept { return universals_; }
  /// Existential variables in prefix order.
  const std::vector<Var>& existentials() const noexcept { return existentials_; }
  /// L_Q(u): existential variables strictly left of `u`, sorted by id.
  std::vector<Var> left_existentials(Var u) const;

  void set_name(Var v, std::string name);
  /// Display name; falls back to the decimal id.
  std::string name(Var v) const;

  /// Names are display-only and do not take part in equality.
  friend bool operator==(const Qbf& a, const Qbf& b) noexcept {
    return a.num_vars_ == b.num_vars_ && a.blocks_ == b.blocks_ && a.matrix_ == b.matrix_;
  }

private:
  Var num_vars_ = 0;
  std::vector<QuantBlock> blocks_;
  std::vector<Clause> matrix_;
  PrefixOrder order_;
  std::vector<Var> universals_;
  std::vector<Var> existentials_;
  std::map<Var, std::string> names_;
};

/// Parses QDIMACS. Free variables go into an implicit outermost existential
/// block. Throws ParseError on a malformed p-line, out-of-range variable,
/// tautological clause, duplicate quantification, prefix after clauses or
/// clause-count mismatch.
Qbf parse_qdimacs(std::istream& in);
Qbf parse_qdimacs(std::string_view text);

/// Byte-stable QDIMACS rendering; parse_qdimacs(to_qdimacs(q)) == q.
std::string to_qdimacs(const Qbf& q);

/// Drops universal literals, keeping the order of the rest.
Clause existential_subclause(const Qbf& q, const Clause& c);

/// 0 if u occurs positively in `c`, 1 if negatively, * if absent.
/// Throws PreconditionError unless `u` is universal.
TriVal falsifying_u_literal(const Qbf& q, const Clause& c, Var u);

/// True iff the matrix restricted by `alpha` contains an empty clause,
/// i.e. some clause has all of its literals assigned and false.
bool falsifies_some_clause(const Qbf& q, const PartialAssignment& alpha);

/// Evaluates the matrix under a complete assignment of all quantified
/// variables. Throws PreconditionError if any variable is left unset.
bool matrix_eval(const Qbf& q, const PartialAssignment& alpha);

} // namespace mresr
