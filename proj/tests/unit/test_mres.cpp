#include <gtest/gtest.h>

#include <mresr/error.hpp>
#include <mresr/merge_map.hpp>
#include <mresr/mres.hpp>
#include <mresr/strategy.hpp>

#include "support.hpp"

using namespace mresr;
using namespace mresr::testing;

namespace {

constexpr TriVal O = TriVal::Zero, I = TriVal::One, S = TriVal::Star;

MResProof load_mres(const std::string& qbf, const std::string& mrs) {
  return replay_mres(load_qbf(qbf), load_mrs(mrs));
}

// Random branching program over variables 1..nvars; tags start at `tag`.
MergeMap random_map(Rng& rng, Var u, Var nvars, int depth, std::size_t& tag) {
  if (depth == 0 || rng.below(3) == 0)
    return MergeMap::leaf(u, static_cast<TriVal>(rng.below(3)), tag++);
  MergeMap lo = random_map(rng, u, nvars, depth - 1, tag);
  MergeMap hi = random_map(rng, u, nvars, depth - 1, tag);
  return mm_merge(lo, hi, tag++, static_cast<Var>(1 + rng.below(nvars)));
}

} // namespace

TEST(MergeMap, LeafAndBranchEval) {
  MergeMap one = MergeMap::leaf(9, I, 1);
  EXPECT_EQ(mm_eval(one, {}), I);
  MergeMap m = mm_merge(MergeMap::leaf(9, O, 1), MergeMap::leaf(9, I, 2), 3, 4);
  EXPECT_EQ(mm_eval(m, {{4, I}}), I);
  EXPECT_EQ(mm_eval(m, {{4, O}}), O);
  EXPECT_THROW(mm_eval(m, {}), PreconditionError);
}

TEST(MergeMap, MergeOfEqualOperandsKeepsFunction) {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    std::size_t tag = 1;
    MergeMap m = random_map(rng, 9, 4, 4, tag);
    MergeMap mm = mm_merge(m, m, tag, 1 + static_cast<Var>(rng.below(4)));
    EXPECT_TRUE(same_function(mm_table(m), mm_table(mm)));
  }
}

TEST(MergeMap, SharedTagsAreMerged) {
  MergeMap a = MergeMap::leaf(9, O, 1);
  MergeMap m = mm_merge(a, a, 2, 4);
  EXPECT_EQ(m.nodes().size(), 2u);
  EXPECT_THROW(mm_merge(a, MergeMap::leaf(9, I, 1), 2, 4), PreconditionError);
  EXPECT_THROW(mm_merge(a, a, 1, 4), PreconditionError);
}

TEST(MergeMap, MergeChecksPrefixWhenGiven) {
  Qbf q = load_qbf("xuy.qdimacs");
  MergeMap a = MergeMap::leaf(kU3, O, 1), b = MergeMap::leaf(kU3, I, 2);
  EXPECT_NO_THROW(mm_merge(a, b, 3, kX3, q));
  EXPECT_THROW(mm_merge(a, b, 3, kY3, q), PreconditionError);
}

TEST(MergeMap, Isomorphism) {
  EXPECT_TRUE(mm_isomorphic(MergeMap::leaf(9, I, 1), MergeMap::leaf(9, I, 5)));
  EXPECT_FALSE(mm_isomorphic(MergeMap::leaf(9, I, 1), MergeMap::leaf(9, S, 1)));
  // Same function, different shape.
  MergeMap a = mm_merge(MergeMap::leaf(9, I, 1), MergeMap::leaf(9, I, 2), 3, 4);
  EXPECT_TRUE(same_function(mm_table(a), mm_table(MergeMap::leaf(9, I, 1))));
  EXPECT_FALSE(mm_isomorphic(a, MergeMap::leaf(9, I, 1)));
}

TEST(MergeMap, Select) {
  MergeMap one = MergeMap::leaf(9, I, 1), star = MergeMap::leaf(9, S, 2);
  EXPECT_EQ(mm_select(one, star), one);
  EXPECT_EQ(mm_select(star, one), one);
  EXPECT_EQ(mm_select(one, MergeMap::leaf(9, I, 3)), one);
  EXPECT_THROW(mm_select(one, MergeMap::leaf(9, O, 3)), PreconditionError);
}

// Isomorphic maps compute the same function, on random pairs over 6 variables.
TEST(MergeMap, IsomorphicImpliesSameFunction) {
  Rng rng(11);
  int iso = 0;
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t seed = rng.next();
    Rng r1(seed), r2(i % 2 ? seed : rng.next());
    std::size_t t1 = 1, t2 = 1000;
    MergeMap a = random_map(r1, 9, 6, 5, t1);
    MergeMap b = random_map(r2, 9, 6, 5, t2);
    if (!mm_isomorphic(a, b)) continue;
    ++iso;
    ASSERT_TRUE(same_function(mm_table(a), mm_table(b)));
    ASSERT_TRUE(mm_isomorphic(b, a));
  }
  EXPECT_GE(iso, 1000);
}

TEST(MRes, SevenLineReadingIsBlockedAtSeven) {
  Qbf q = load_qbf("xuy.qdimacs");
  MResProof p = load_mres("xuy.qdimacs", "xuy.mrs");
  CheckReport rep = check_mres(q, p);
  EXPECT_EQ(rep.verdict, Verdict::Invalid);
  EXPECT_EQ(rep.failing_line, 7u);
  EXPECT_EQ(rep.reason, Reason::BlockedSelect);
  // The lines before are fine and carry the listed functions.
  EXPECT_TRUE(same_function(mm_table(p[2].maps.at(kU3)), StrategyTable(kU3, {kX3}, {O, S})));
  EXPECT_TRUE(same_function(mm_table(p[5].maps.at(kU3)), StrategyTable(kU3, {kX3}, {S, I})));
  EXPECT_FALSE(mm_isomorphic(p[2].maps.at(kU3), p[5].maps.at(kU3)));
  EXPECT_EQ(mm_eval(p[2].maps.at(kU3), {{kX3, O}}), O);
}

TEST(MRes, ThirteenLineTranscriptionIsValid) {
  Qbf q = load_qbf("xyuab.qdimacs");
  MResProof p = load_mres("xyuab.qdimacs", "xyuab.mrs");
  CheckReport rep = check_mres(q, p);
  EXPECT_TRUE(rep.valid()) << rep.failing_line << " " << rep.detail;
  const MergeMap& m = p.back().maps.at(kU5);
  EXPECT_EQ(mm_eval(m, {{kX5, I}, {kY5, I}}), I);
  EXPECT_EQ(mm_eval(m, {{kX5, O}, {kY5, I}}), I);
  EXPECT_EQ(mm_eval(m, {{kX5, I}, {kY5, O}}), I);
  EXPECT_EQ(mm_eval(m, {{kX5, O}, {kY5, O}}), O);
}

TEST(MRes, MergeAtThreeAndSixBlocksSeven) {
  Qbf q = load_qbf("xyuab.qdimacs");
  MResProof p = load_mres("xyuab.qdimacs", "xyuab_all_merge.mrs");
  // Line 3 merges T2 on x=1: the hi branch is the * leaf.
  EXPECT_EQ(mm_eval(p[2].maps.at(kU5), {{kX5, I}}), S);
  CheckReport rep = check_mres(q, p);
  EXPECT_EQ(rep.failing_line, 7u);
  EXPECT_EQ(rep.reason, Reason::BlockedSelect);
}

TEST(MRes, MergeOnRightPivotIsRejected) {
  Qbf q = load_qbf("xuy.qdimacs");
  auto rules = load_mrs("xuy.mrs");
  rules[6].choices[kU3] = Choice::Merge;
  CheckReport rep = check_mres(q, replay_mres(q, rules));
  EXPECT_EQ(rep.failing_line, 7u);
  EXPECT_EQ(rep.reason, Reason::BadMerge);
}

TEST(MRes, TamperedMapIsBadSelect) {
  Qbf q = load_qbf("xyuab.qdimacs");
  MResProof p = load_mres("xyuab.qdimacs", "xyuab.mrs");
  p[2].maps[kU5] = MergeMap::leaf(kU5, O, 3);
  CheckReport rep = check_mres(q, p);
  EXPECT_EQ(rep.failing_line, 3u);
  EXPECT_EQ(rep.reason, Reason::BadSelect);
}

TEST(MRes, BadAxiom) {
  Qbf q = load_qbf("xuy.qdimacs");
  MResProof p = load_mres("xuy.qdimacs", "xuy.mrs");
  p[0].maps[kU3] = MergeMap::leaf(kU3, I, 1);
  CheckReport rep = check_mres(q, p);
  EXPECT_EQ(rep.failing_line, 1u);
  EXPECT_EQ(rep.reason, Reason::BadAxiom);
}

TEST(MRes, EmptyProofIsInvalid) {
  CheckReport rep = check_mres(load_qbf("xuy.qdimacs"), {});
  EXPECT_EQ(rep.verdict, Verdict::Invalid);
  EXPECT_EQ(rep.reason, Reason::NotRefutation);
}

TEST(MRes, TextRoundTrip) {
  auto rules = load_mrs("xyuab.mrs");
  EXPECT_EQ(parse_mrs(to_mrs(rules)), rules);
  EXPECT_THROW(parse_mrs("p mrs 1\nR 1 2 3 4:X\n"), ParseError);
  EXPECT_THROW(parse_mrs("p mrs 2\nA 1\n"), ParseError);
}
