#pragma once

#include <mresr/mres.hpp>
#include <mresr/mrest.hpp>
#include <mresr/qbf.hpp>
#include <mresr/rule_script.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mresr::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(MRESR_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Qbf load_qbf(const std::string& name) { return parse_qdimacs(read_fixture(name)); }
inline RuleScript load_mrt(const std::string& name) { return parse_mrt(read_fixture(name)); }
inline std::vector<MResRule> load_mrs(const std::string& name) {
  return parse_mrs(read_fixture(name));
}

inline MResTProof load_mrest(const std::string& qbf, const std::string& mrt) {
  return replay_mrest(load_qbf(qbf), load_mrt(mrt));
}

// xuy.qdimacs: exists x(1) forall u(2) exists y(3).
inline constexpr Var kX3 = 1, kU3 = 2, kY3 = 3;
// xyuab.qdimacs: exists x(1) y(2) forall u(3) exists a(4) b(5).
inline constexpr Var kX5 = 1, kY5 = 2, kU5 = 3, kA5 = 4, kB5 = 5;

// splitmix64, small and reproducible across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  bool coin() { return (next() & 1) != 0; }

private:
  std::uint64_t s_;
};

/// Random prefix with `ne` existentials and `nu` universals (variables
/// 1..ne+nu in a random order), and `m` clauses of width 2..3 (1 when there
/// is a single variable), each with at least one existential literal.
Qbf random_qbf(Rng& rng, std::size_t ne, std::size_t nu, std::size_t m);

} // namespace mresr::testing
