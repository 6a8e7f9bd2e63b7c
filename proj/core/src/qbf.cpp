#include "mresr/qbf.hpp"

#include <algorithm>
#include <set>

namespace mresr {

// ---- Clause ----------------------------------------------------------------

std::optional<Clause> Clause::try_make(std::vector<Literal> literals) {
  Clause c;
  c.lits_.reserve(literals.size());
  for (Literal lit : literals) {
    if (c.contains(lit))
      continue;
    if (c.contains(~lit))
      return std::nullopt;
    c.lits_.push_back(lit);
  }
  return c;
}

Clause::Clause(std::vector<Literal> literals) {
  auto c = try_make(std::move(literals));
  if (!c)
    throw PreconditionError("tautological clause");
  lits_ = std::move(c->lits_);
}

Clause::Clause(std::initializer_list<int> dimacs) {
  std::vector<Literal> lits;
  for (int l : dimacs) {
    if (l == 0)
      throw PreconditionError("literal 0 in clause");
    lits.push_back(Literal::from_dimacs(l));
  }
  *this = Clause(std::move(lits));
}

bool Clause::contains(Literal lit) const noexcept {
  return std::find(lits_.begin(), lits_.end(), lit) != lits_.end();
}

bool Clause::contains_var(Var v) const noexcept {
  return std::any_of(lits_.begin(), lits_.end(), [v](Literal l) { return l.var() == v; });
}

std::optional<bool> Clause::polarity(Var v) const noexcept {
  for (Literal l : lits_)
    if (l.var() == v)
      return l.positive();
  return std::nullopt;
}

std::vector<Var> Clause::vars() const {
  std::vector<Var> out;
  out.reserve(lits_.size());
  for (Literal l : lits_)
    out.push_back(l.var());
  return out;
}

Clause Clause::sorted() const {
  Clause c = *this;
  std::sort(c.lits_.begin(), c.lits_.end());
  return c;
}

bool Clause::same_literals(const Clause& other) const {
  return sorted().lits_ == other.sorted().lits_;
}

std::string Clause::to_dimacs() const {
  std::string out;
  for (Literal l : lits_) {
    out += std::to_string(l.to_dimacs());
    out += ' ';
  }
  out += '0';
  return out;
}

Resolvent resolve(const Clause& pos, const Clause& neg, Var pivot) {
  if (!pos.contains(Literal(pivot, false)) || !neg.contains(Literal(pivot, true)))
    return {ResolveStatus::PivotMissing, {}};
  std::vector<Literal> lits;
  for (Literal l : pos.literals())
    if (l.var() != pivot)
      lits.push_back(l);
  for (Literal l : neg.literals())
    if (l.var() != pivot)
      lits.push_back(l);
  auto c = Clause::try_make(std::move(lits));
  if (!c)
    return {ResolveStatus::Tautology, {}};
  return {ResolveStatus::Ok, std::move(*c)};
}

// ---- PartialAssignment -----------------------------------------------------

PartialAssignment::PartialAssignment(std::initializer_list<std::pair<Var, TriVal>> init) {
  for (auto [v, val] : init)
    set(v, val);
}

void PartialAssignment::set(Var v, TriVal value) {
  if (v >= values_.size()) {
    if (value == TriVal::Star)
      return;
    values_.resize(v + 1, TriVal::Star);
  }
  values_[v] = value;
}

bool PartialAssignment::complete_on(std::span<const Var> vars) const noexcept {
  return std::all_of(vars.begin(), vars.end(), [this](Var v) { return assigns(v); });
}

std::vector<Var> PartialAssignment::assigned() const {
  std::vector<Var> out;
  for (Var v = 0; v < values_.size(); ++v)
    if (is_set(values_[v]))
      out.push_back(v);
  return out;
}

bool operator==(const PartialAssignment& a, const PartialAssignment& b) noexcept {
  std::size_t n = std::max(a.values_.size(), b.values_.size());
  for (Var v = 0; v < n; ++v)
    if (a[v] != b[v])
      return false;
  return true;
}

bool assign_consistent(const PartialAssignment& a, const PartialAssignment& b) noexcept {
  for (Var v : a.assigned())
    if (!consistent(a[v], b[v]))
      return false;
  return true;
}

PartialAssignment assign_union(const PartialAssignment& a, const PartialAssignment& b) {
  if (!assign_consistent(a, b))
    throw PreconditionError("union of inconsistent assignments");
  PartialAssignment out = a;
  for (Var v : b.assigned())
    out.set(v, b[v]);
  return out;
}

PartialAssignment assignment_from_bits(std::span<const Var> vars, std::uint64_t bits) {
  PartialAssignment out;
  for (std::size_t k = 0; k < vars.size(); ++k)
    out.set(vars[k], ((bits >> k) & 1u) != 0);
  return out;
}

// ---- PrefixOrder / Qbf -----------------------------------------------------

PrefixOrder::PrefixOrder(const std::vector<QuantBlock>& blocks, Var num_vars)
    : block_(num_vars + 1, -1) {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (Var v : blocks[b].vars) {
      if (v == 0 || v > num_vars)
        throw PreconditionError("variable " + std::to_string(v) + " out of range");
      if (block_[v] >= 0)
        throw PreconditionError("variable " + std::to_string(v) + " quantified twice");
      block_[v] = static_cast<int>(b);
    }
}

std::size_t PrefixOrder::block(Var v) const {
  if (!quantified(v))
    throw PreconditionError("variable " + std::to_string(v) + " is not quantified");
  return static_cast<std::size_t>(block_[v]);
}

Qbf::Qbf(Var num_vars, std::vector<QuantBlock> blocks, std::vector<Clause> matrix)
    : num_vars_(num_vars), matrix_(std::move(matrix)) {
  for (auto& b : blocks) {
    if (b.vars.empty())
      continue;
    if (!blocks_.empty() && blocks_.back().quantifier == b.quantifier)
      blocks_.back().vars.insert(blocks_.back().vars.end(), b.vars.begin(), b.vars.end());
    else
      blocks_.push_back(std::move(b));
  }
  order_ = PrefixOrder(blocks_, num_vars_);
  for (const auto& c : matrix_)
    for (Literal l : c.literals())
      if (!order_.quantified(l.var()))
        throw PreconditionError("matrix variable " + std::to_string(l.var()) +
                                " is not quantified");
  for (const auto& b : blocks_)
    for (Var v : b.vars)
      (b.quantifier == Quantifier::Forall ? universals_ : existentials_).push_back(v);
}

Quantifier Qbf::quantifier(Var v) const { return blocks_[order_.block(v)].quantifier; }

bool Qbf::is_universal(Var v) const noexcept {
  return quantified(v) && blocks_[order_.block(v)].quantifier == Quantifier::Forall;
}

bool Qbf::is_existential(Var v) const noexcept {
  return quantified(v) && blocks_[order_.block(v)].quantifier == Quantifier::Exists;
}

std::vector<Var> Qbf::left_existentials(Var u) const {
  std::size_t bu = order_.block(u);
  std::vector<Var> out;
  for (std::size_t b = 0; b < bu; ++b)
    if (blocks_[b].quantifier == Quantifier::Exists)
      out.insert(out.end(), blocks_[b].vars.begin(), blocks_[b].vars.end());
  std::sort(out.begin(), out.end());
  return out;
}

void Qbf::set_name(Var v, std::string name) { names_[v] = std::move(name); }

std::string Qbf::name(Var v) const {
  auto it = names_.find(v);
  return it == names_.end() ? std::to_string(v) : it->second;
}

// ---- clause-level queries --------------------------------------------------

Clause existential_subclause(const Qbf& q, const Clause& c) {
  std::vector<Literal> lits;
  for (Literal l : c.literals()) {
    if (!q.quantified(l.var()))
      throw PreconditionError("variable " + std::to_string(l.var()) + " is not quantified");
    if (q.is_existential(l.var()))
      lits.push_back(l);
  }
  return Clause(std::move(lits));
}

TriVal falsifying_u_literal(const Qbf& q, const Clause& c, Var u) {
  if (!q.is_universal(u))
    throw PreconditionError("variable " + std::to_string(u) + " is not universal");
  auto pol = c.polarity(u);
  if (!pol)
    return TriVal::Star;
  return *pol ? TriVal::Zero : TriVal::One;
}

bool falsifies_some_clause(const Qbf& q, const PartialAssignment& alpha) {
  return std::any_of(q.matrix().begin(), q.matrix().end(), [&](const Clause& c) {
    return std::all_of(c.literals().begin(), c.literals().end(),
                       [&](Literal l) { return alpha.falsifies(l); });
  });
}

bool matrix_eval(const Qbf& q, const PartialAssignment& alpha) {
  for (const auto& b : q.blocks())
    if (!alpha.complete_on(b.vars))
      throw PreconditionError("matrix_eval needs a complete assignment");
  return !falsifies_some_clause(q, alpha);
}

} // namespace mresr
