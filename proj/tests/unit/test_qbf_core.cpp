#include <gtest/gtest.h>

#include <mresr/assignment.hpp>
#include <mresr/clause.hpp>
#include <mresr/error.hpp>
#include <mresr/qbf.hpp>
#include <mresr/trival.hpp>

#include "listings.hpp"
#include "support.hpp"

using namespace mresr;
using namespace mresr::testing;

namespace {

constexpr TriVal O = TriVal::Zero, I = TriVal::One, S = TriVal::Star;

} // namespace

TEST(TriVal, ConsistencyAndJoin) {
  EXPECT_TRUE(consistent(S, O));
  EXPECT_TRUE(consistent(I, I));
  EXPECT_FALSE(consistent(O, I));
  EXPECT_EQ(join(S, I), I);
  EXPECT_EQ(join(O, S), O);
  EXPECT_FALSE(try_join(I, O).has_value());
  EXPECT_THROW(join(I, O), PreconditionError);
  for (TriVal v : {O, I, S}) EXPECT_EQ(trival_from_char(to_char(v)), v);
}

TEST(Clause, DedupAndTautology) {
  Clause c{3, 1, 3};
  EXPECT_EQ(c.width(), 2u);
  EXPECT_THROW((Clause{1, -1}), PreconditionError);
  EXPECT_FALSE(Clause::try_make({Literal(2), Literal(2, true)}).has_value());
  EXPECT_TRUE((Clause{1, -2}).same_literals(Clause{-2, 1}));
  EXPECT_EQ((Clause{1, -2}).to_dimacs(), "1 -2 0");
}

TEST(Clause, Resolve) {
  auto r = resolve(Clause{3, 1}, Clause{3, -1}, 1);
  EXPECT_EQ(r.status, ResolveStatus::Ok);
  EXPECT_EQ(r.clause, Clause{3});
  EXPECT_EQ(resolve(Clause{3}, Clause{-3}, 3).clause, Clause{});
  EXPECT_EQ(resolve(Clause{-3}, Clause{3}, 3).status, ResolveStatus::PivotMissing);
  EXPECT_EQ(resolve(Clause{1, 2}, Clause{-1, -2}, 1).status, ResolveStatus::Tautology);
}

TEST(Assignment, UnionAndConsistency) {
  PartialAssignment a{{1, I}}, b{{2, O}}, c{{1, O}};
  EXPECT_TRUE(assign_consistent(a, b));
  EXPECT_FALSE(assign_consistent(a, c));
  PartialAssignment ab = assign_union(a, b);
  EXPECT_EQ(ab[1], I);
  EXPECT_EQ(ab[2], O);
  EXPECT_EQ(ab[3], S);
  EXPECT_THROW(assign_union(a, c), PreconditionError);
  std::vector<Var> vs{4, 2};
  PartialAssignment bits = assignment_from_bits(vs, 0b01);
  EXPECT_EQ(bits[4], I);
  EXPECT_EQ(bits[2], O);
}

TEST(Qdimacs, ParsesExampleThree) {
  Qbf q = load_qbf("xuy.qdimacs");
  EXPECT_EQ(q.num_vars(), 3u);
  ASSERT_EQ(q.blocks().size(), 3u);
  EXPECT_EQ(q.universals(), std::vector<Var>{kU3});
  EXPECT_EQ(q.existentials(), (std::vector<Var>{kX3, kY3}));
  EXPECT_EQ(q.matrix().size(), 4u);
  EXPECT_TRUE(q.order().left_of(kX3, kU3));
  EXPECT_FALSE(q.order().left_of(kY3, kU3));
  EXPECT_EQ(q.left_existentials(kU3), std::vector<Var>{kX3});
}

TEST(Qdimacs, FreeVariablesGoOutermost) {
  Qbf q = parse_qdimacs("p cnf 3 1\na 2 0\ne 3 0\n1 2 3 0\n");
  ASSERT_EQ(q.blocks().size(), 3u);
  EXPECT_EQ(q.blocks()[0].quantifier, Quantifier::Exists);
  EXPECT_EQ(q.blocks()[0].vars, std::vector<Var>{1});
}

TEST(Qdimacs, AdjacentBlocksMerge) {
  Qbf q = parse_qdimacs("p cnf 3 1\ne 1 0\ne 2 0\na 3 0\n1 2 3 0\n");
  EXPECT_EQ(q.blocks().size(), 2u);
}

TEST(Qdimacs, StrictErrors) {
  auto bad = [](const char* text, std::size_t line) {
    try {
      parse_qdimacs(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << text;
    }
  };
  bad("p cnf 2 1\n1 3 0\n", 2);         // out of range
  bad("p cnf 2 2\n1 2 0\n", 2);         // clause count mismatch, reported at the end
  bad("p cnf 2 1\n1 -1 0\n", 2);        // tautology
  bad("p cnf 2 1\ne 1 0\na 1 0\n1 0\n", 3); // duplicate quantification
  bad("p cnf 2 1\n1 0\ne 2 0\n", 3);    // prefix after clauses
  bad("p cnf x 1\n", 1);                // malformed p-line
  bad("1 2 0\n", 1);                    // missing p-line
}

TEST(Qdimacs, RoundTripIsByteStable) {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    Qbf q = random_qbf(rng, 1 + rng.below(5), rng.below(3), 1 + rng.below(8));
    std::string text = to_qdimacs(q);
    Qbf back = parse_qdimacs(text);
    ASSERT_EQ(back, q) << text;
    ASSERT_EQ(to_qdimacs(back), text);
  }
}

TEST(Qbf, FalsifyingLiteral) {
  Qbf q = load_qbf("xuy.qdimacs");
  EXPECT_EQ(falsifying_u_literal(q, q.matrix()[0], kU3), O);
  EXPECT_EQ(falsifying_u_literal(q, q.matrix()[1], kU3), S);
  EXPECT_EQ(falsifying_u_literal(q, q.matrix()[3], kU3), I);
  EXPECT_THROW(falsifying_u_literal(q, q.matrix()[0], kX3), PreconditionError);
  EXPECT_EQ(existential_subclause(q, q.matrix()[0]), (Clause{3, 1}));
}

TEST(Qbf, Evaluation) {
  Qbf q = load_qbf("xuy.qdimacs");
  PartialAssignment a{{kX3, I}, {kU3, I}};
  // (~y | ~x | ~u) loses ~x and ~u, (~y | x) keeps x: nothing empty yet.
  EXPECT_FALSE(falsifies_some_clause(q, a));
  a.set(kY3, true);
  EXPECT_TRUE(falsifies_some_clause(q, a));
  EXPECT_FALSE(matrix_eval(q, a));
  EXPECT_THROW(matrix_eval(q, PartialAssignment{{kX3, I}}), PreconditionError);
}

TEST(Qbf, RejectsMalformedConstruction) {
  EXPECT_THROW(Qbf(2, {{Quantifier::Exists, {1}}, {Quantifier::Forall, {1}}}, {}), PreconditionError);
  EXPECT_THROW(Qbf(2, {{Quantifier::Exists, {1}}}, {Clause{2}}), PreconditionError);
}

TEST(Qbf, NamesAreDisplayOnly) {
  Qbf a = load_qbf("xuy.qdimacs"), b = a;
  b.set_name(kX3, "x");
  EXPECT_EQ(a, b);
  EXPECT_EQ(b.name(kX3), "x");
  EXPECT_EQ(b.name(kY3), "3");
}

TEST(Rules, MrtParseErrors) {
  EXPECT_THROW(parse_mrt("p mrt 2\nA 1\n"), ParseError);
  EXPECT_THROW(parse_mrt("p mrt 1\nZ 1\n"), ParseError);
  EXPECT_THROW(parse_mrt("p mrt 1\nR 1 2\n"), ParseError);
  EXPECT_THROW(parse_mrt("p mrt 1\nA 1 3 1\n"), ParseError);
}

TEST(Rules, BundleRoundTrip) {
  Qbf q = load_qbf("xyuab.qdimacs");
  RuleScript s = load_mrt("xyuab.mrt");
  std::string text = to_bundle(q, s);
  EXPECT_TRUE(looks_like_bundle(text));
  EXPECT_FALSE(looks_like_bundle(to_qdimacs(q)));
  Bundle b = parse_bundle(text);
  EXPECT_EQ(b.qbf, q);
  EXPECT_EQ(b.script, s);
}

TEST(Rules, Regularity) {
  std::vector<Rule> rules;
  for (const auto& l : load_mrt("xuy.mrt")) rules.push_back(l.rule);
  EXPECT_TRUE(is_regular(rules, {kX3, kY3}));
  // x used twice on one path: resolve {y} again after re-deriving.
  std::vector<Rule> twice{Rule::axiom(1), Rule::axiom(2), Rule::resolution(1, 2, 1),
                          Rule::axiom(3), Rule::resolution(3, 4, 3), Rule::axiom(2),
                          Rule::resolution(5, 6, 1)};
  EXPECT_FALSE(is_regular(twice, {1}));
  EXPECT_TRUE(is_regular(twice, {3}));
}

// Random derivation DAGs against path enumeration.
TEST(Rules, RegularityMatchesPathEnumeration) {
  Rng rng(17);
  int irregular = 0;
  for (int t = 0; t < 2000; ++t) {
    std::vector<Rule> rules;
    std::size_t n = 2 + rng.below(10);
    for (std::size_t i = 1; i <= n; ++i) {
      if (i <= 2 || rng.below(3) == 0) {
        rules.push_back(Rule::axiom(1));
      } else {
        std::size_t j = 1 + rng.below(i - 1), k = 1 + rng.below(i - 1);
        rules.push_back(Rule::resolution(j, k, static_cast<Var>(1 + rng.below(3))));
      }
    }
    std::set<Var> s{1, 2};
    bool want = regular_by_paths(rules, s);
    irregular += !want;
    ASSERT_EQ(is_regular(rules, s), want) << "trial " << t;
  }
  EXPECT_GT(irregular, 100);
}
