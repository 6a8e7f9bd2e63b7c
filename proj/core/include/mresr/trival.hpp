#pragma once

#include <cstdint>
#include <optional>

#include "mresr/error.hpp"

namespace mresr {

/// A three-valued assignment to a single variable: 0, 1 or unset (*).
enum class TriVal : std::uint8_t { Zero = 0, One = 1, Star = 2 };

constexpr TriVal to_trival(bool b) noexcept { return b ? TriVal::One : TriVal::Zero; }

constexpr bool is_set(TriVal v) noexcept { return v != TriVal::Star; }

/// Two values are consistent unless one is 0 and the other 1.
constexpr bool consistent(TriVal a, TriVal b) noexcept {
  return a == TriVal::Star || b == TriVal::Star || a == b;
}

/// Pointwise union; undefined on 0 vs 1.
inline std::optional<TriVal> try_join(TriVal a, TriVal b) noexcept {
  if (!consistent(a, b))
    return std::nullopt;
  return a == TriVal::Star ? b : a;
}

inline TriVal join(TriVal a, TriVal b) {
  if (auto r = try_join(a, b))
    return *r;
  throw PreconditionError("join of inconsistent values 0 and 1");
}

constexpr char to_char(TriVal v) noexcept {
  switch (v) {
  case TriVal::Zero: return '0';
  case TriVal::One: return '1';
  default: return '*';
  }
}

inline std::optional<TriVal> trival_from_char(char c) noexcept {
  switch (c) {
  case '0': return TriVal::Zero;
  case '1': return TriVal::One;
  case '*': return TriVal::Star;
  default: return std::nullopt;
  }
}

} // namespace mresr
