#include <gtest/gtest.h>

#include <mresr/efrege.hpp>
#include <mresr/error.hpp>
#include <mresr/formula.hpp>

#include "support.hpp"

using namespace mresr;
using namespace mresr::testing;

namespace {

// Plain recursive evaluator, independent of eval64.
bool eval(const Formula& f, const std::map<std::string, bool>& val) {
  switch (f.op()) {
    case Formula::Op::True: return true;
    case Formula::Op::False: return false;
    case Formula::Op::Var: return val.at(f.name());
    case Formula::Op::Not: return !eval(f.lhs(), val);
    case Formula::Op::And: return eval(f.lhs(), val) && eval(f.rhs(), val);
    case Formula::Op::Or: return eval(f.lhs(), val) || eval(f.rhs(), val);
    case Formula::Op::Implies: return !eval(f.lhs(), val) || eval(f.rhs(), val);
    case Formula::Op::Iff: return eval(f.lhs(), val) == eval(f.rhs(), val);
    case Formula::Op::Xor: return eval(f.lhs(), val) != eval(f.rhs(), val);
  }
  return false;
}

Formula random_formula(Rng& rng, int depth) {
  static const char* names[] = {"a", "b", "c", "1", "v_3_2_3"};
  if (depth == 0 || rng.below(4) == 0) {
    std::uint64_t k = rng.below(7);
    if (k == 5) return Formula::top();
    if (k == 6) return Formula::bottom();
    return Formula::var(names[k]);
  }
  if (rng.below(6) == 0) return ~random_formula(rng, depth - 1);
  static const Formula::Op ops[] = {Formula::Op::And, Formula::Op::Or, Formula::Op::Implies,
                                    Formula::Op::Iff, Formula::Op::Xor};
  return Formula::binary(ops[rng.below(5)], random_formula(rng, depth - 1),
                         random_formula(rng, depth - 1));
}

} // namespace

TEST(Formula, PrintAndParse) {
  Formula f = implies(Formula::var("a") & Formula::var("b"), Formula::var("c") | ~Formula::var("d"));
  EXPECT_EQ(f.to_string(), "(-> (& a b) (| c (~ d)))");
  EXPECT_EQ(parse_formula(f.to_string()), f);
  EXPECT_EQ(parse_formula("T"), Formula::top());
  EXPECT_EQ(parse_formula("F"), Formula::bottom());
}

TEST(Formula, ParseErrors) {
  EXPECT_THROW(parse_formula("(& a"), ParseError);
  EXPECT_THROW(parse_formula("(? a b)"), ParseError);
  EXPECT_THROW(parse_formula("(~ a b)"), ParseError);
  EXPECT_THROW(parse_formula("a b"), ParseError);
  EXPECT_THROW(parse_formula(""), ParseError);
}

TEST(Formula, RandomRoundTrip) {
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    Formula f = random_formula(rng, 5);
    ASSERT_EQ(parse_formula(f.to_string()), f) << f.to_string();
  }
}

TEST(Formula, Eval64MatchesRecursiveEvaluator) {
  Rng rng(9);
  const std::vector<std::string> names{"1", "a", "b", "c", "v_3_2_3"};
  std::map<std::string, int> index;
  for (std::size_t k = 0; k < names.size(); ++k) index[names[k]] = static_cast<int>(k);
  for (int i = 0; i < 300; ++i) {
    Formula f = random_formula(rng, 5);
    std::vector<std::uint64_t> masks(names.size());
    for (auto& m : masks) m = rng.next();
    std::uint64_t got = eval64(f, index, masks);
    for (int r = 0; r < 64; ++r) {
      std::map<std::string, bool> val;
      for (std::size_t k = 0; k < names.size(); ++k) val[names[k]] = (masks[k] >> r) & 1;
      ASSERT_EQ(((got >> r) & 1) != 0, eval(f, val)) << f.to_string();
    }
  }
}

TEST(Formula, SubstituteDoesNotSimplify) {
  Formula f = Formula::var("2") | Formula::var("1");
  EXPECT_EQ(f.substitute("2", false).to_string(), "(| F 1)");
  EXPECT_EQ(f.substitute("9", true), f);
}

TEST(Formula, Vars) {
  Formula f = parse_formula("(<-> x (& y (~ x)))");
  EXPECT_EQ(f.vars(), (std::set<std::string>{"x", "y"}));
  EXPECT_EQ(f.size(), 6u);
}

TEST(Formula, EmptyJunctions) {
  EXPECT_EQ(disjunction({}), Formula::bottom());
  EXPECT_EQ(conjunction({}), Formula::top());
  EXPECT_EQ(clause_formula(Clause{1, -2}).to_string(), "(| 1 (~ 2))");
}
