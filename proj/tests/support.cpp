#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace mresr::testing {

Qbf random_qbf(Rng& rng, std::size_t ne, std::size_t nu, std::size_t m) {
  const std::size_t n = ne + nu;
  std::vector<Var> perm(n);
  std::iota(perm.begin(), perm.end(), Var{1});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);

  // Random interleaving: each variable is universal with probability nu/n
  // until one kind runs out.
  std::vector<QuantBlock> blocks;
  std::size_t e_left = ne, u_left = nu;
  for (Var v : perm) {
    bool uni = e_left == 0 || (u_left > 0 && rng.below(e_left + u_left) < u_left);
    Quantifier qt = uni ? Quantifier::Forall : Quantifier::Exists;
    (uni ? u_left : e_left)--;
    if (blocks.empty() || blocks.back().quantifier != qt) blocks.push_back({qt, {}});
    blocks.back().vars.push_back(v);
  }

  std::vector<Clause> matrix;
  Qbf prefix(static_cast<Var>(n), blocks, {});
  while (matrix.size() < m) {
    std::size_t w = std::min<std::size_t>(n, 2 + rng.below(2));
    std::vector<Var> vars(perm);
    for (std::size_t i = 0; i < w; ++i) std::swap(vars[i], vars[i + rng.below(n - i)]);
    std::vector<Literal> lits;
    bool has_e = false;
    for (std::size_t i = 0; i < w; ++i) {
      lits.emplace_back(vars[i], rng.coin());
      has_e = has_e || prefix.is_existential(vars[i]);
    }
    // Purely universal clauses make the formula trivially false.
    if (has_e) matrix.emplace_back(std::move(lits));
  }
  return Qbf(static_cast<Var>(n), std::move(blocks), std::move(matrix));
}

} // namespace mresr::testing
