#include "mresr/strategy.hpp"

#include <algorithm>

namespace mresr {

namespace {

void check_support_size(std::size_t n) {
  if (n > StrategyTable::kMaxSupport)
    throw ResourceLimitError("strategy table support of " + std::to_string(n) +
                             " variables exceeds the cap of " +
                             std::to_string(StrategyTable::kMaxSupport));
}

void normalize(std::vector<Var>& vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
}

// For each position of `small` (a subset of `big`), its index in `big`.
std::vector<unsigned> positions(const std::vector<Var>& small, const std::vector<Var>& big) {
  std::vector<unsigned> pos;
  pos.reserve(small.size());
  for (Var v : small) {
    auto it = std::lower_bound(big.begin(), big.end(), v);
    if (it == big.end() || *it != v)
      throw PreconditionError("variable " + std::to_string(v) + " missing from support");
    pos.push_back(static_cast<unsigned>(it - big.begin()));
  }
  return pos;
}

std::size_t project_row(std::size_t row, const std::vector<unsigned>& pos) {
  std::size_t out = 0;
  for (std::size_t k = 0; k < pos.size(); ++k)
    out |= ((row >> pos[k]) & 1u) << k;
  return out;
}

void check_same_u(const StrategyTable& a, const StrategyTable& b) {
  if (a.u() != b.u())
    throw PreconditionError("strategies for different universals " + std::to_string(a.u()) +
                            " and " + std::to_string(b.u()));
}

} // namespace

std::vector<Var> merge_support(const std::vector<Var>& a, const std::vector<Var>& b) {
  std::vector<Var> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

StrategyTable::StrategyTable(Var u, std::vector<Var> support, std::vector<TriVal> rows)
    : u_(u), support_(std::move(support)), rows_(std::move(rows)) {
  normalize(support_);
  check_support_size(support_.size());
  if (rows_.size() != (std::size_t{1} << support_.size()))
    throw PreconditionError("strategy table needs 2^|support| rows");
}

StrategyTable StrategyTable::constant(Var u, TriVal value) { return StrategyTable(u, {}, {value}); }

StrategyTable StrategyTable::from_function(
    Var u, std::vector<Var> support, const std::function<TriVal(const PartialAssignment&)>& f) {
  normalize(support);
  check_support_size(support.size());
  std::vector<TriVal> rows(std::size_t{1} << support.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    rows[r] = f(assignment_from_bits(support, r));
  return StrategyTable(u, std::move(support), std::move(rows));
}

TriVal StrategyTable::eval(const PartialAssignment& eps) const {
  std::size_t row = 0;
  for (std::size_t k = 0; k < support_.size(); ++k) {
    TriVal v = eps[support_[k]];
    if (!is_set(v))
      throw PreconditionError("assignment leaves support variable " +
                              std::to_string(support_[k]) + " unset");
    if (v == TriVal::One)
      row |= std::size_t{1} << k;
  }
  return rows_[row];
}

StrategyTable StrategyTable::extend(std::vector<Var> support) const {
  normalize(support);
  support = merge_support(support, support_);
  check_support_size(support.size());
  auto pos = positions(support_, support);
  std::vector<TriVal> rows(std::size_t{1} << support.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    rows[r] = rows_[project_row(r, pos)];
  return StrategyTable(u_, std::move(support), std::move(rows));
}

StrategyTable StrategyTable::minimized() const {
  StrategyTable cur = *this;
  for (std::size_t k = cur.support_.size(); k-- > 0;) {
    std::size_t bit = std::size_t{1} << k;
    bool depends = false;
    for (std::size_t r = 0; r < cur.rows_.size() && !depends; ++r)
      if (!(r & bit) && cur.rows_[r] != cur.rows_[r | bit])
        depends = true;
    if (depends)
      continue;
    std::vector<Var> support = cur.support_;
    support.erase(support.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<TriVal> reduced(cur.rows_.size() / 2);
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      std::size_t low = r & (bit - 1);
      std::size_t high = (r & ~(bit - 1)) << 1;
      reduced[r] = cur.rows_[high | low];
    }
    cur = StrategyTable(u_, std::move(support), std::move(reduced));
  }
  return cur;
}

std::string StrategyTable::dump() const {
  std::string out = "u " + std::to_string(u_) + " support";
  for (Var v : support_)
    out += " " + std::to_string(v);
  out += "\n";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t k = 0; k < support_.size(); ++k)
      out += ((r >> k) & 1u) ? '1' : '0';
    out += support_.empty() ? "-> " : " -> ";
    out += to_char(rows_[r]);
    out += "\n";
  }
  return out;
}

bool same_function(const StrategyTable& a, const StrategyTable& b) {
  if (a.u() != b.u())
    return false;
  if (a.support() == b.support())
    return a.rows() == b.rows();
  auto support = merge_support(a.support(), b.support());
  return a.extend(support).rows() == b.extend(support).rows();
}

bool strat_consistent(const StrategyTable& a, const StrategyTable& b) {
  check_same_u(a, b);
  if (a.support() == b.support())
    return std::equal(a.rows().begin(), a.rows().end(), b.rows().begin(),
                      [](TriVal x, TriVal y) { return consistent(x, y); });
  auto support = merge_support(a.support(), b.support());
  check_support_size(support.size());
  auto pa = positions(a.support(), support);
  auto pb = positions(b.support(), support);
  std::size_t n = std::size_t{1} << support.size();
  for (std::size_t r = 0; r < n; ++r)
    if (!consistent(a.rows()[project_row(r, pa)], b.rows()[project_row(r, pb)]))
      return false;
  return true;
}

StrategyTable strat_union(const StrategyTable& a, const StrategyTable& b) {
  check_same_u(a, b);
  auto support = merge_support(a.support(), b.support());
  check_support_size(support.size());
  auto pa = positions(a.support(), support);
  auto pb = positions(b.support(), support);
  std::vector<TriVal> rows(std::size_t{1} << support.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto j = try_join(a.rows()[project_row(r, pa)], b.rows()[project_row(r, pb)]);
    if (!j)
      throw PreconditionError("union of inconsistent strategies");
    rows[r] = *j;
  }
  return StrategyTable(a.u(), std::move(support), std::move(rows));
}

StrategyTable strat_ifelse(const StrategyTable& hi, const StrategyTable& lo, Var x) {
  check_same_u(hi, lo);
  auto support = merge_support(merge_support(hi.support(), lo.support()), {x});
  check_support_size(support.size());
  auto ph = positions(hi.support(), support);
  auto pl = positions(lo.support(), support);
  std::size_t xbit = std::size_t{1} << positions({x}, support)[0];
  std::vector<TriVal> rows(std::size_t{1} << support.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    rows[r] = (r & xbit) ? hi.rows()[project_row(r, ph)] : lo.rows()[project_row(r, pl)];
  return StrategyTable(hi.u(), std::move(support), std::move(rows));
}

StrategyTable strat_ifelse(const StrategyTable& hi, const StrategyTable& lo, Var x,
                           const Qbf& q) {
  if (!q.is_existential(x))
    throw PreconditionError("if-else variable " + std::to_string(x) + " is not existential");
  if (!q.order().left_of(x, hi.u()))
    throw PreconditionError("if-else variable " + std::to_string(x) + " is not left of " +
                            std::to_string(hi.u()));
  return strat_ifelse(hi, lo, x);
}

} // namespace mresr
