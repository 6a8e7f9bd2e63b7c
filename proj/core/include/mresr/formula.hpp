#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mresr {

/// Immutable propositional formula with shared subtrees. Variables are
/// names matching [A-Za-z0-9_]+; QBF variables use their decimal id.
class Formula {
public:
  enum class Op : std::uint8_t { True, False, Var, Not, And, Or, Implies, Iff, Xor };

  /// The constant false.
  Formula();

  static Formula top();
  static Formula bottom();
  static Formula var(std::string name);
  static Formula negation(Formula f);
  static Formula binary(Op op, Formula a, Formula b);

  Op op() const noexcept { return node_->op; }
  const std::string& name() const noexcept { return node_->name; }
  Formula lhs() const { return Formula(node_->a); }
  Formula rhs() const { return Formula(node_->b); }
  bool is_const(bool value) const noexcept {
    return op() == (value ? Op::True : Op::False);
  }

  /// Parenthesized prefix form, e.g. `(-> (& a b) (| c (~ d)))`.
  std::string to_string() const;
  void collect_vars(std::set<std::string>& out) const;
  std::set<std::string> vars() const;
  /// Replaces every occurrence of `name` by the constant `value`, without
  /// simplifying.
  Formula substitute(const std::string& name, bool value) const;
  std::size_t size() const;

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

private:
  struct Node {
    Op op;
    std::string name;
    std::shared_ptr<const Node> a, b;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

Formula operator~(const Formula& f);
Formula operator&(const Formula& a, const Formula& b);
Formula operator|(const Formula& a, const Formula& b);
Formula implies(const Formula& a, const Formula& b);
Formula iff(const Formula& a, const Formula& b);
Formula exclusive_or(const Formula& a, const Formula& b);

/// Left-nested; the empty list gives F.
Formula disjunction(const std::vector<Formula>& parts);
/// Left-nested; the empty list gives T.
Formula conjunction(const std::vector<Formula>& parts);

/// Throws ParseError (line 0) on malformed text.
Formula parse_formula(std::string_view text);

/// Evaluates on 64 assignments at once: bit r of masks[k] is the value of
/// variable k in assignment r. Every variable must be in `index`.
std::uint64_t eval64(const Formula& f, const std::map<std::string, int>& index,
                     const std::vector<std::uint64_t>& masks);

} // namespace mresr
