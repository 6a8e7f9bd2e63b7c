#pragma once

#include <cstdint>
#include <optional>

#include "mresr/mrest.hpp"
#include "mresr/qbf.hpp"

namespace mresr {

struct SearchOptions {
  std::size_t max_lines = 8;
  /// Expanded search nodes before giving up with ResourceLimitError.
  std::uint64_t node_budget = 5'000'000;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::size_t depth_reached = 0;
};

/// Iterative deepening over rule sequences of increasing length. Each line
/// is a clause paired with its per-universal function tables; a sequence is
/// extended by new axioms or by resolutions whose # steps are consistent,
/// and every line but the last must be used later. Returns the first (hence
/// shortest) refutation, re-checked by check_mrest, or nothing when no
/// refutation with at most `max_lines` lines exists. Throws
/// ResourceLimitError when the node budget runs out; at most 12 existentials.
std::optional<MResTProof> bounded_search(const Qbf& q, const SearchOptions& opts,
                                         SearchStats* stats = nullptr);

inline std::optional<MResTProof> bounded_search(const Qbf& q, std::size_t max_lines) {
  SearchOptions o;
  o.max_lines = max_lines;
  return bounded_search(q, o);
}

} // namespace mresr
