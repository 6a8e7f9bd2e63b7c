#include "mresr/formula.hpp"

#include <cctype>

#include "mresr/error.hpp"

namespace mresr {

namespace {

const char* op_symbol(Formula::Op op) {
  switch (op) {
  case Formula::Op::Not: return "~";
  case Formula::Op::And: return "&";
  case Formula::Op::Or: return "|";
  case Formula::Op::Implies: return "->";
  case Formula::Op::Iff: return "<->";
  case Formula::Op::Xor: return "^";
  default: return "";
  }
}

} // namespace

Formula::Formula() : Formula(bottom()) {}

Formula Formula::top() {
  static const auto n = std::make_shared<const Node>(Node{Op::True, {}, nullptr, nullptr});
  return Formula(n);
}

Formula Formula::bottom() {
  static const auto n = std::make_shared<const Node>(Node{Op::False, {}, nullptr, nullptr});
  return Formula(n);
}

Formula Formula::var(std::string name) {
  if (name.empty())
    throw PreconditionError("empty variable name");
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      throw PreconditionError("bad variable name '" + name + "'");
  return Formula(std::make_shared<const Node>(Node{Op::Var, std::move(name), nullptr, nullptr}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Op::Not, {}, f.node_, nullptr}));
}

Formula Formula::binary(Op op, Formula a, Formula b) {
  if (op == Op::True || op == Op::False || op == Op::Var || op == Op::Not)
    throw PreconditionError("not a binary connective");
  return Formula(std::make_shared<const Node>(Node{op, {}, a.node_, b.node_}));
}

std::string Formula::to_string() const {
  switch (op()) {
  case Op::True: return "T";
  case Op::False: return "F";
  case Op::Var: return name();
  case Op::Not: return "(~ " + lhs().to_string() + ")";
  default:
    return std::string("(") + op_symbol(op()) + " " + lhs().to_string() + " " +
           rhs().to_string() + ")";
  }
}

void Formula::collect_vars(std::set<std::string>& out) const {
  switch (op()) {
  case Op::True:
  case Op::False: return;
  case Op::Var: out.insert(name()); return;
  case Op::Not: lhs().collect_vars(out); return;
  default:
    lhs().collect_vars(out);
    rhs().collect_vars(out);
  }
}

std::set<std::string> Formula::vars() const {
  std::set<std::string> out;
  collect_vars(out);
  return out;
}

Formula Formula::substitute(const std::string& v, bool value) const {
  switch (op()) {
  case Op::True:
  case Op::False: return *this;
  case Op::Var: return name() == v ? (value ? top() : bottom()) : *this;
  case Op::Not: return negation(lhs().substitute(v, value));
  default: return binary(op(), lhs().substitute(v, value), rhs().substitute(v, value));
  }
}

std::size_t Formula::size() const {
  switch (op()) {
  case Op::True:
  case Op::False:
  case Op::Var: return 1;
  case Op::Not: return 1 + lhs().size();
  default: return 1 + lhs().size() + rhs().size();
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_)
    return true;
  if (a.op() != b.op())
    return false;
  switch (a.op()) {
  case Formula::Op::True:
  case Formula::Op::False: return true;
  case Formula::Op::Var: return a.name() == b.name();
  case Formula::Op::Not: return a.lhs() == b.lhs();
  default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

Formula operator~(const Formula& f) { return Formula::negation(f); }
Formula operator&(const Formula& a, const Formula& b) {
  return Formula::binary(Formula::Op::And, a, b);
}
Formula operator|(const Formula& a, const Formula& b) {
  return Formula::binary(Formula::Op::Or, a, b);
}
Formula implies(const Formula& a, const Formula& b) {
  return Formula::binary(Formula::Op::Implies, a, b);
}
Formula iff(const Formula& a, const Formula& b) { return Formula::binary(Formula::Op::Iff, a, b); }
Formula exclusive_or(const Formula& a, const Formula& b) {
  return Formula::binary(Formula::Op::Xor, a, b);
}

Formula disjunction(const std::vector<Formula>& parts) {
  if (parts.empty())
    return Formula::bottom();
  Formula f = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i)
    f = f | parts[i];
  return f;
}

Formula conjunction(const std::vector<Formula>& parts) {
  if (parts.empty())
    return Formula::top();
  Formula f = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i)
    f = f & parts[i];
  return f;
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  Formula parse_all() {
    Formula f = parse();
    skip_ws();
    if (pos_ != s_.size())
      error("trailing input");
    return f;
  }

private:
  [[noreturn]] void error(const std::string& what) {
    throw ParseError(0, "formula: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  std::string_view token() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
           s_[pos_] != '(' && s_[pos_] != ')')
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Formula parse() {
    skip_ws();
    if (pos_ >= s_.size())
      error("unexpected end");
    if (s_[pos_] == ')')
      error("unexpected ')'");
    if (s_[pos_] != '(') {
      std::string_view t = token();
      if (t == "T")
        return Formula::top();
      if (t == "F")
        return Formula::bottom();
      for (char c : t)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
          error("bad variable name '" + std::string(t) + "'");
      return Formula::var(std::string(t));
    }
    ++pos_;
    std::string_view op = token();
    Formula f;
    if (op == "~") {
      f = ~parse();
    } else {
      Formula::Op o;
      if (op == "&")
        o = Formula::Op::And;
      else if (op == "|")
        o = Formula::Op::Or;
      else if (op == "->")
        o = Formula::Op::Implies;
      else if (op == "<->")
        o = Formula::Op::Iff;
      else if (op == "^")
        o = Formula::Op::Xor;
      else
        error("unknown connective '" + std::string(op) + "'");
      Formula a = parse();
      Formula b = parse();
      f = Formula::binary(o, a, b);
    }
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != ')')
      error("expected ')'");
    ++pos_;
    return f;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse_all(); }

std::uint64_t eval64(const Formula& f, const std::map<std::string, int>& index,
                     const std::vector<std::uint64_t>& masks) {
  switch (f.op()) {
  case Formula::Op::True: return ~std::uint64_t{0};
  case Formula::Op::False: return 0;
  case Formula::Op::Var: return masks[static_cast<std::size_t>(index.at(f.name()))];
  case Formula::Op::Not: return ~eval64(f.lhs(), index, masks);
  default: break;
  }
  std::uint64_t a = eval64(f.lhs(), index, masks);
  std::uint64_t b = eval64(f.rhs(), index, masks);
  switch (f.op()) {
  case Formula::Op::And: return a & b;
  case Formula::Op::Or: return a | b;
  case Formula::Op::Implies: return ~a | b;
  case Formula::Op::Iff: return ~(a ^ b);
  default: return a ^ b;
  }
}

} // namespace mresr
