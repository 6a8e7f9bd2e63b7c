#include <gtest/gtest.h>

#include <mresr/error.hpp>
#include <mresr/mrest.hpp>
#include <mresr/strategy.hpp>
#include <mresr/tgraph.hpp>

#include "support.hpp"

using namespace mresr;
using namespace mresr::testing;

namespace {

// Truth table over a single support variable: rows are (var = 0, var = 1).
StrategyTable over(Var u, Var v, TriVal at0, TriVal at1) { return StrategyTable(u, {v}, {at0, at1}); }

constexpr TriVal O = TriVal::Zero, I = TriVal::One, S = TriVal::Star;

} // namespace

TEST(SevenLineProof, ChecksValid) {
  Qbf q = load_qbf("xuy.qdimacs");
  MResTProof p = load_mrest("xuy.qdimacs", "xuy.mrt");
  CheckReport rep = check_mrest(q, p);
  EXPECT_EQ(rep.verdict, Verdict::Valid) << rep.detail;
  EXPECT_EQ(rep.stats.size, 7u);
  EXPECT_TRUE(rep.stats.regular);
  EXPECT_TRUE(p.back().clause.empty());
}

TEST(SevenLineProof, LineStrategiesMatchListing) {
  MResTProof p = load_mrest("xuy.qdimacs", "xuy.mrt");
  EXPECT_TRUE(same_function(tg_table(p[2].graphs.at(kU3)), over(kU3, kX3, O, S)));
  EXPECT_TRUE(same_function(tg_table(p[5].graphs.at(kU3)), over(kU3, kX3, S, I)));
  EXPECT_TRUE(same_function(tg_table(p[6].graphs.at(kU3)), over(kU3, kX3, O, I)));
  EXPECT_EQ(p[2].graphs.at(kU3).root_node().kind, TNode::Kind::IfElse);
  EXPECT_EQ(p[6].graphs.at(kU3).root_node().kind, TNode::Kind::Hash);
}

TEST(SevenLineProof, AxiomLeavesAreFalsifyingLiterals) {
  MResTProof p = load_mrest("xuy.qdimacs", "xuy.mrt");
  const std::size_t axioms[] = {0, 1, 3, 4};
  const TriVal leaf[] = {O, S, S, I};
  for (std::size_t i = 0; i < 4; ++i) {
    const TGraph& t = p[axioms[i]].graphs.at(kU3);
    ASSERT_EQ(t.root_node().kind, TNode::Kind::Leaf);
    EXPECT_EQ(t.root_node().value, leaf[i]) << "line " << axioms[i] + 1;
  }
}

TEST(ThirteenLineProof, ChecksValidAndRegular) {
  Qbf q = load_qbf("xyuab.qdimacs");
  MResTProof p = load_mrest("xyuab.qdimacs", "xyuab.mrt");
  CheckReport rep = check_mrest(q, p);
  EXPECT_EQ(rep.verdict, Verdict::Valid) << rep.detail;
  EXPECT_EQ(rep.stats.size, 13u);
  EXPECT_EQ(rep.stats.max_width, 3u);
  EXPECT_TRUE(rep.stats.regular);
  EXPECT_TRUE(regularity(p, {kX5, kY5}));
}

TEST(ThirteenLineProof, FinalStrategyTable) {
  MResTProof p = load_mrest("xyuab.qdimacs", "xyuab.mrt");
  const TGraph& t = p.back().graphs.at(kU5);
  // Oracle: read the rows directly off the graph by hand-evaluating each
  // assignment of (x, y).
  struct Row { bool x, y; TriVal want; };
  const Row rows[] = {{true, true, I}, {false, true, I}, {true, false, I}, {false, false, O}};
  for (const Row& r : rows) {
    PartialAssignment eps{{kX5, to_trival(r.x)}, {kY5, to_trival(r.y)}};
    EXPECT_EQ(tg_eval(t, eps), r.want) << "x=" << r.x << " y=" << r.y;
  }
  EXPECT_TRUE(same_function(tg_table(p[6].graphs.at(kU5)), StrategyTable::constant(kU5, I)));
  EXPECT_TRUE(same_function(tg_table(p[11].graphs.at(kU5)), over(kU5, kX5, O, I)));
}

TEST(ThirteenLineProof, CountermodelVerifies) {
  Qbf q = load_qbf("xyuab.qdimacs");
  MResTProof p = load_mrest("xyuab.qdimacs", "xyuab.mrt");
  auto cm = extract_countermodel(q, p);
  CountermodelReport rep = verify_countermodel(q, cm);
  EXPECT_TRUE(rep.valid);
  EXPECT_EQ(rep.assignments_checked, 16u);
  EXPECT_EQ(rep.ambiguous, 0u);
}

TEST(Negative, BrokenLineSevenIsInconsistentUnion) {
  Qbf q = load_qbf("xuy.qdimacs");
  CheckReport rep = check_mrest(q, load_mrest("xuy.qdimacs", "broken.mrt"));
  EXPECT_EQ(rep.verdict, Verdict::Invalid);
  EXPECT_EQ(rep.failing_line, 7u);
  EXPECT_EQ(rep.reason, Reason::InconsistentUnion);
}

TEST(Negative, FlippedAxiomLeaf) {
  Qbf q = load_qbf("xuy.qdimacs");
  MResTProof p = load_mrest("xuy.qdimacs", "xuy.mrt");
  p[1].graphs[kU3] = TGraph::leaf(kU3, O, 2);
  CheckReport rep = check_mrest(q, p);
  EXPECT_EQ(rep.failing_line, 2u);
  EXPECT_EQ(rep.reason, Reason::BadAxiom);
}

TEST(Negative, ContinuesPastFirstFailure) {
  Qbf q = load_qbf("xuy.qdimacs");
  MResTProof p = load_mrest("xuy.qdimacs", "xuy.mrt");
  p[1].graphs[kU3] = TGraph::leaf(kU3, O, 2);
  // Rebuild lines 3 and 7 from the mutated line 2: x=1 now gives 0,
  // clashing with line 6 at x=1.
  p[2].graphs[kU3] = TGraph::if_else(kX3, p[1].graphs.at(kU3), p[0].graphs.at(kU3), 3);
  p[6].graphs[kU3] = TGraph::hash(p[2].graphs.at(kU3), p[5].graphs.at(kU3), 7);
  CheckReport rep = check_mrest(q, p);
  EXPECT_EQ(rep.failing_line, 2u);
  EXPECT_FALSE(rep.lines[6].ok);
  EXPECT_EQ(rep.lines[6].reason, Reason::InconsistentUnion);
}

TEST(Negative, WrongClauseIsBadResolvent) {
  Qbf q = load_qbf("xyuab.qdimacs");
  MResTProof p = load_mrest("xyuab.qdimacs", "xyuab.mrt");
  p[2].clause = Clause{-2};
  CheckReport rep = check_mrest(q, p);
  EXPECT_EQ(rep.failing_line, 3u);
  EXPECT_EQ(rep.reason, Reason::BadResolvent);
}

TEST(Negative, SwappedNodeKind) {
  Qbf q = load_qbf("xuy.qdimacs");
  MResTProof p = load_mrest("xuy.qdimacs", "xuy.mrt");
  p[2].graphs[kU3] = TGraph::hash(p[0].graphs.at(kU3), p[1].graphs.at(kU3), 3);
  CheckReport rep = check_mrest(q, p);
  EXPECT_EQ(rep.failing_line, 3u);
  EXPECT_EQ(rep.reason, Reason::WrongNodeKind);
}

TEST(Negative, SwappedIfElseBranches) {
  Qbf q = load_qbf("xuy.qdimacs");
  MResTProof p = load_mrest("xuy.qdimacs", "xuy.mrt");
  p[2].graphs[kU3] = TGraph::if_else(kX3, p[0].graphs.at(kU3), p[1].graphs.at(kU3), 3);
  CheckReport rep = check_mrest(q, p);
  EXPECT_EQ(rep.failing_line, 3u);
  EXPECT_EQ(rep.reason, Reason::BadGraph);
}

TEST(Negative, UniversalPivot) {
  Qbf q = load_qbf("xuy.qdimacs");
  RuleScript s = load_mrt("xuy.mrt");
  s[2] = {Rule::resolution(1, 2, kU3), std::nullopt};
  CheckReport rep = check_mrest(q, replay_mrest(q, s));
  EXPECT_EQ(rep.failing_line, 3u);
  EXPECT_EQ(rep.reason, Reason::PivotUniversal);
}

TEST(Negative, ForwardReference) {
  Qbf q = load_qbf("xuy.qdimacs");
  RuleScript s = load_mrt("xuy.mrt");
  s[2] = {Rule::resolution(1, 4, kX3), std::nullopt};
  CheckReport rep = check_mrest(q, replay_mrest(q, s));
  EXPECT_EQ(rep.failing_line, 3u);
  EXPECT_EQ(rep.reason, Reason::BadReference);
}

TEST(Negative, PrefixIsNotARefutation) {
  Qbf q = load_qbf("xuy.qdimacs");
  RuleScript s = load_mrt("xuy.mrt");
  s.pop_back();
  CheckReport rep = check_mrest(q, replay_mrest(q, s));
  EXPECT_EQ(rep.verdict, Verdict::Invalid);
  EXPECT_EQ(rep.reason, Reason::NotRefutation);
  EXPECT_EQ(rep.failing_line, 0u);
  EXPECT_THROW(extract_countermodel(q, replay_mrest(q, s)), PreconditionError);
}

TEST(Negative, EmptyProof) {
  Qbf q = load_qbf("xuy.qdimacs");
  CheckReport rep = check_mrest(q, {});
  EXPECT_EQ(rep.verdict, Verdict::Invalid);
  EXPECT_EQ(rep.reason, Reason::NotRefutation);
}

TEST(Edge, ForallUnitIsOneLineRefutation) {
  Qbf q = load_qbf("forall_unit.qdimacs");
  MResTProof p = load_mrest("forall_unit.qdimacs", "forall_unit.mrt");
  CheckReport rep = check_mrest(q, p);
  EXPECT_TRUE(rep.valid());
  auto cm = extract_countermodel(q, p);
  EXPECT_EQ(cm.at(1).root_node().value, O);
  EXPECT_TRUE(verify_countermodel(q, cm).valid);
}

TEST(Soundness, TablesHaveNoViolations) {
  for (auto [qf, mf] : {std::pair{"xuy.qdimacs", "xuy.mrt"},
                        std::pair{"xyuab.qdimacs", "xyuab.mrt"}}) {
    Qbf q = load_qbf(qf);
    SoundnessReport r = line_soundness(q, load_mrest(qf, mf));
    EXPECT_GT(r.checks, 0u);
    EXPECT_EQ(r.violations, 0u) << mf << " line " << r.first_violation;
  }
}

TEST(Soundness, BrokenLineIsCaught) {
  Qbf q = load_qbf("xuy.qdimacs");
  MResTProof p = load_mrest("xuy.qdimacs", "xuy.mrt");
  // Line 3's strategy says 0 at x=0; claiming 1 instead leaves y unrefuted.
  p[0].graphs[kU3] = TGraph::leaf(kU3, I, 1);
  p[2].graphs[kU3] = TGraph::if_else(kX3, p[1].graphs.at(kU3), p[0].graphs.at(kU3), 3);
  SoundnessReport r = line_soundness(q, p);
  EXPECT_GT(r.violations, 0u);
  EXPECT_EQ(r.first_violation, 1u);
}

TEST(Countermodel, WrongStrategyHasCounterexample) {
  Qbf q = load_qbf("xuy.qdimacs");
  std::map<Var, TGraph> cm{{kU3, TGraph::leaf(kU3, I, 1)}};
  CountermodelReport r = verify_countermodel(q, cm);
  EXPECT_FALSE(r.valid);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_EQ((*r.counterexample)[kX3], O);
}

TEST(Script, RoundTripsThroughText) {
  MResTProof p = load_mrest("xyuab.qdimacs", "xyuab.mrt");
  RuleScript s = to_script(p);
  EXPECT_EQ(parse_mrt(to_mrt(s)), s);
  EXPECT_EQ(s, load_mrt("xyuab.mrt"));
}

TEST(Strategies, DumpRoundTrips) {
  MResTProof p = load_mrest("xyuab.qdimacs", "xyuab.mrt");
  auto g = p.back().graphs;
  auto back = parse_strategies(dump_strategies(g));
  ASSERT_EQ(back.size(), 1u);
  EXPECT_TRUE(tg_isomorphic(back.at(kU5), g.at(kU5)));
  EXPECT_TRUE(same_function(tg_table(back.at(kU5)), tg_table(g.at(kU5))));
}
