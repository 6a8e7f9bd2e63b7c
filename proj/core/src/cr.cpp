#include "mresr/cr.hpp"

#include "mresr/error.hpp"

namespace mresr {

CrInstance gen_cr(std::size_t n) {
  if (n == 0)
    throw PreconditionError("gen_cr needs n >= 1");
  CrInstance cr;
  cr.n = n;
  std::vector<Var> xs, ab;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      xs.push_back(cr.x(i, j));
  for (std::size_t i = 1; i <= n; ++i)
    ab.push_back(cr.a(i));
  for (std::size_t j = 1; j <= n; ++j)
    ab.push_back(cr.b(j));

  std::vector<Clause> matrix;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      matrix.emplace_back(std::vector<Literal>{Literal(cr.x(i, j)), Literal(cr.z()), Literal(cr.a(i))});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      matrix.emplace_back(std::vector<Literal>{Literal(cr.x(i, j), true), Literal(cr.z(), true),
                                               Literal(cr.b(j))});
  std::vector<Literal> la, lb;
  for (std::size_t i = 1; i <= n; ++i)
    la.emplace_back(cr.a(i), true);
  for (std::size_t j = 1; j <= n; ++j)
    lb.emplace_back(cr.b(j), true);
  matrix.emplace_back(std::move(la));
  matrix.emplace_back(std::move(lb));

  Var num_vars = static_cast<Var>(n * n + 2 * n + 1);
  cr.qbf = Qbf(num_vars,
               {{Quantifier::Exists, xs}, {Quantifier::Forall, {cr.z()}}, {Quantifier::Exists, ab}},
               std::move(matrix));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      cr.qbf.set_name(cr.x(i, j), "x_" + std::to_string(i) + "_" + std::to_string(j));
  cr.qbf.set_name(cr.z(), "z");
  for (std::size_t i = 1; i <= n; ++i) {
    cr.qbf.set_name(cr.a(i), "a_" + std::to_string(i));
    cr.qbf.set_name(cr.b(i), "b_" + std::to_string(i));
  }
  return cr;
}

bool cr_z_rule(const CrInstance& cr, const PartialAssignment& grid) {
  for (std::size_t i = 1; i <= cr.n; ++i) {
    bool all_ones = true;
    for (std::size_t j = 1; j <= cr.n; ++j) {
      TriVal v = grid[cr.x(i, j)];
      if (!is_set(v))
        throw PreconditionError("grid variable " + std::to_string(cr.x(i, j)) + " is unset");
      all_ones = all_ones && v == TriVal::One;
    }
    if (all_ones)
      return true;
  }
  return false;
}

} // namespace mresr
