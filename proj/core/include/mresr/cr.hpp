#pragma once

#include <cstddef>

#include "mresr/assignment.hpp"
#include "mresr/qbf.hpp"

namespace mresr {

/// Completion-principle formula on an n x n grid: clauses
/// A_ij = x_ij | z | a_i, B_ij = ~x_ij | ~z | b_j, L_A = ~a_1 | ... | ~a_n and
/// L_B = ~b_1 | ... | ~b_n under the prefix E X  A z  E A, B.
struct CrInstance {
  std::size_t n = 0;
  Qbf qbf;

  /// 1-based row and column.
  Var x(std::size_t i, std::size_t j) const { return static_cast<Var>((i - 1) * n + j); }
  Var z() const { return static_cast<Var>(n * n + 1); }
  Var a(std::size_t i) const { return static_cast<Var>(n * n + 1 + i); }
  Var b(std::size_t j) const { return static_cast<Var>(n * n + 1 + n + j); }
};

/// Clauses in the order A_11..A_nn, B_11..B_nn, L_A, L_B (row-major).
CrInstance gen_cr(std::size_t n);

/// Closed-form universal move: z = 1 iff some grid row is all ones. Every
/// x variable must be set in `grid`.
bool cr_z_rule(const CrInstance& cr, const PartialAssignment& grid);

} // namespace mresr
