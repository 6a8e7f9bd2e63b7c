#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mresr/formula.hpp"
#include "mresr/mrest.hpp"
#include "mresr/qbf.hpp"
#include "mresr/report.hpp"

namespace mresr {

/// One certificate line. Index i asserts:
///  - Ext:  var <-> formula, with var fresh;
///  - Inf:  formula, entailed by the cited premises;
///  - Red:  formula = premise with universal u replaced by `value`.
/// Indices 1..|matrix| implicitly denote the matrix clauses, so the first
/// certificate line has index |matrix| + 1.
struct EFregeLine {
  enum class Kind { Ext, Inf, Red };

  std::size_t index = 0;
  Kind kind = Kind::Inf;
  std::string var;                    // Ext
  std::vector<std::size_t> premises;  // Inf: up to 4; Red: exactly 1
  Var u = 0;                          // Red
  bool value = false;                 // Red
  Formula formula;
};

using Certificate = std::vector<EFregeLine>;

/// `.efr` text, one line per entry:
/// `<idx> EXT <var> <f>` | `<idx> INF <i1> [i2 i3 i4] <f>` | `<idx> RED <i> <u> <0|1> <f>`.
Certificate parse_efr(std::string_view text);
std::string to_efr(const Certificate& cert);

/// Disjunction of the clause's literals in order (F when empty).
Formula clause_formula(const Clause& c);

/// Value / definedness variable pair of one T-graph node.
struct NodeVars {
  std::string v;
  std::string d;
};

/// Names and definitions of the extension variables of a proof. Node t of
/// universal u is the node created by line t (a leaf for axioms, an if-else
/// or # node for resolutions); it gets v_<t>_<u>_<t> and d_<t>_<u>_<t>.
struct ExtensionEnv {
  std::map<std::pair<std::size_t, Var>, NodeVars> nodes; // (line, u)
  std::vector<std::pair<std::string, Formula>> definitions; // in emission order
};

/// Definitions for every line in the ancestry of the last line:
/// Leaf 1: v <-> T, d <-> T; Leaf 0: v <-> F, d <-> T; Leaf *: v <-> F,
/// d <-> F; if-else on y: v <-> (y & v_hi) | (~y & v_lo) and likewise d;
/// #: d <-> d_a | d_b, v <-> (d_a & v_a) | (d_b & v_b).
ExtensionEnv define_extensions(const Qbf& q, const MResTProof& proof);

struct EmitOptions {
  /// Emit even if check_mrest rejects the proof. Steps that cannot be
  /// justified are still written, so the checker reports them.
  bool force = false;
};

/// eFrege+forall-red certificate for a valid MRes-T refutation. Throws
/// PreconditionError for an invalid proof unless forced, and
/// ResourceLimitError when some inference would exceed the checker budget.
Certificate emit_efrege(const Qbf& q, const MResTProof& proof, const EmitOptions& opts = {});

/// Limits of the line checker.
inline constexpr std::size_t kMaxPremises = 4;
inline constexpr std::size_t kMaxInferenceVars = 20;

/// Checks every line; valid iff all lines pass and the last formula is F.
/// failing_line is the certificate index of the first bad line.
CheckReport check_efrege(const Qbf& q, const Certificate& cert);

} // namespace mresr
