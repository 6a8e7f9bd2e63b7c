#include <gtest/gtest.h>

#include <mresr/efrege.hpp>
#include <mresr/error.hpp>
#include <mresr/mrest.hpp>

#include "support.hpp"

using namespace mresr;
using namespace mresr::testing;

namespace {

struct Case {
  const char* qbf;
  const char* mrt;
};

const Case kTables[] = {{"xuy.qdimacs", "xuy.mrt"},
                        {"xyuab.qdimacs", "xyuab.mrt"},
                        {"forall_unit.qdimacs", "forall_unit.mrt"}};

Certificate emit_for(const Case& c, EmitOptions opts = {}) {
  return emit_efrege(load_qbf(c.qbf), load_mrest(c.qbf, c.mrt), opts);
}

std::size_t first_index(const Qbf& q) { return q.matrix().size() + 1; }

} // namespace

TEST(Emit, TablesYieldAcceptedCertificates) {
  for (const Case& c : kTables) {
    Qbf q = load_qbf(c.qbf);
    Certificate cert = emit_for(c);
    ASSERT_FALSE(cert.empty()) << c.mrt;
    EXPECT_EQ(cert.front().index, first_index(q));
    EXPECT_EQ(cert.back().formula, Formula::bottom()) << c.mrt;
    CheckReport rep = check_efrege(q, cert);
    EXPECT_TRUE(rep.valid()) << c.mrt << ": line " << rep.failing_line << " "
                             << reason_name(rep.reason) << " " << rep.detail;
  }
}

TEST(Emit, IndicesAreConsecutive) {
  Certificate cert = emit_for(kTables[1]);
  for (std::size_t i = 1; i < cert.size(); ++i)
    EXPECT_EQ(cert[i].index, cert[i - 1].index + 1);
}

TEST(Emit, InferencesStayWithinBudget) {
  for (const Case& c : kTables)
    for (const EFregeLine& l : emit_for(c)) {
      if (l.kind == EFregeLine::Kind::Inf) EXPECT_LE(l.premises.size(), kMaxPremises);
      if (l.kind == EFregeLine::Kind::Red) EXPECT_EQ(l.premises.size(), 1u);
    }
}

TEST(Emit, RejectsInvalidProofUnlessForced) {
  Qbf q = load_qbf("xuy.qdimacs");
  MResTProof p = load_mrest("xuy.qdimacs", "broken.mrt");
  EXPECT_THROW(emit_efrege(q, p), PreconditionError);
  Certificate cert = emit_efrege(q, p, {.force = true});
  CheckReport rep = check_efrege(q, cert);
  EXPECT_FALSE(rep.valid());
  EXPECT_EQ(rep.reason, Reason::EntailmentFailure);
}

TEST(Emit, ForcedUnusedBadLineStillChecks) {
  Qbf q = load_qbf("xuy.qdimacs");
  MResTProof p = load_mrest("xuy.qdimacs", "one_way.mrt");
  CheckReport mr = check_mrest(q, p);
  EXPECT_EQ(mr.verdict, Verdict::Invalid);
  EXPECT_EQ(mr.failing_line, 7u);
  EXPECT_EQ(mr.reason, Reason::InconsistentUnion);
  Certificate cert = emit_efrege(q, p, {.force = true});
  EXPECT_TRUE(check_efrege(q, cert).valid());
}

TEST(Extensions, NamesFollowCreatingLine) {
  Qbf q = load_qbf("xuy.qdimacs");
  ExtensionEnv env = define_extensions(q, load_mrest("xuy.qdimacs", "xuy.mrt"));
  EXPECT_EQ(env.nodes.size(), 7u);
  EXPECT_EQ(env.nodes.at({3, kU3}).v, "v_3_2_3");
  EXPECT_EQ(env.nodes.at({3, kU3}).d, "d_3_2_3");
  EXPECT_EQ(env.definitions.size(), 14u);
}

TEST(Extensions, DefinitionsMatchStrategies) {
  // Evaluating the v/d definitions bottom-up must reproduce each line's table.
  Qbf q = load_qbf("xyuab.qdimacs");
  MResTProof p = load_mrest("xyuab.qdimacs", "xyuab.mrt");
  ExtensionEnv env = define_extensions(q, p);
  for (std::uint64_t bits = 0; bits < 4; ++bits) {
    std::map<std::string, bool> val{{"1", (bits & 1) != 0}, {"2", (bits & 2) != 0}};
    auto eval = [&](auto&& self, const Formula& f) -> bool {
      switch (f.op()) {
        case Formula::Op::True: return true;
        case Formula::Op::False: return false;
        case Formula::Op::Var: return val.at(f.name());
        case Formula::Op::Not: return !self(self, f.lhs());
        case Formula::Op::And: return self(self, f.lhs()) && self(self, f.rhs());
        case Formula::Op::Or: return self(self, f.lhs()) || self(self, f.rhs());
        case Formula::Op::Implies: return !self(self, f.lhs()) || self(self, f.rhs());
        case Formula::Op::Iff: return self(self, f.lhs()) == self(self, f.rhs());
        case Formula::Op::Xor: return self(self, f.lhs()) != self(self, f.rhs());
      }
      return false;
    };
    for (const auto& [name, def] : env.definitions) val[name] = eval(eval, def);
    PartialAssignment eps{{kX5, to_trival((bits & 1) != 0)}, {kY5, to_trival((bits & 2) != 0)}};
    for (const auto& [key, nv] : env.nodes) {
      TriVal want = tg_eval(p[key.first - 1].graphs.at(key.second), eps);
      EXPECT_EQ(val.at(nv.d), is_set(want)) << nv.d;
      if (is_set(want)) EXPECT_EQ(val.at(nv.v), want == TriVal::One) << nv.v;
    }
  }
}

TEST(Check, MutatedPremiseIsEntailmentFailure) {
  Qbf q = load_qbf("xuy.qdimacs");
  Certificate cert = emit_for(kTables[0]);
  // The final F line needs its premises; pointing it at a matrix clause
  // alone breaks it.
  cert.back().premises = {1};
  CheckReport rep = check_efrege(q, cert);
  EXPECT_EQ(rep.reason, Reason::EntailmentFailure);
  EXPECT_EQ(rep.failing_line, cert.back().index);
}

TEST(Check, ReusedExtensionVariable) {
  Qbf q = load_qbf("xuy.qdimacs");
  Certificate cert = emit_for(kTables[0]);
  auto it = std::find_if(cert.begin() + 1, cert.end(),
                         [](const EFregeLine& l) { return l.kind == EFregeLine::Kind::Ext; });
  ASSERT_NE(it, cert.end());
  it->var = cert.front().var;
  CheckReport rep = check_efrege(q, cert);
  EXPECT_EQ(rep.reason, Reason::Freshness);
}

TEST(Check, ExtensionOverOriginalVariableIsNotFresh) {
  Qbf q = load_qbf("xuy.qdimacs");
  Certificate cert{{first_index(q), EFregeLine::Kind::Ext, "1", {}, 0, false, Formula::top()}};
  EXPECT_EQ(check_efrege(q, cert).reason, Reason::Freshness);
}

TEST(Check, ReductionNeedsUniversalToBeInnermost) {
  // forall u exists y: reducing u in (u | y) is illegal because y is right of u.
  Qbf q = parse_qdimacs("p cnf 2 1\na 1 0\ne 2 0\n1 2 0\n");
  Certificate cert{{2, EFregeLine::Kind::Red, "", {1}, 1, false, parse_formula("2")}};
  EXPECT_EQ(check_efrege(q, cert).reason, Reason::ReductionSideCondition);
}

TEST(Check, ReductionMustSubstitute) {
  Qbf q = load_qbf("forall_unit.qdimacs");
  Certificate good{{2, EFregeLine::Kind::Red, "", {1}, 1, false, Formula::bottom()}};
  EXPECT_TRUE(check_efrege(q, good).valid());
  Certificate bad{{2, EFregeLine::Kind::Red, "", {1}, 1, true, Formula::bottom()}};
  EXPECT_EQ(check_efrege(q, bad).reason, Reason::ReductionMismatch);
}

TEST(Check, UnknownVariable) {
  Qbf q = load_qbf("forall_unit.qdimacs");
  Certificate cert{{2, EFregeLine::Kind::Inf, "", {1}, 0, false, parse_formula("(| 1 q)")}};
  EXPECT_EQ(check_efrege(q, cert).reason, Reason::UnknownVariable);
}

TEST(Check, TooManyPremises) {
  Qbf q = load_qbf("forall_unit.qdimacs");
  Certificate cert{{2, EFregeLine::Kind::Inf, "", {1, 1, 1, 1, 1}, 0, false, parse_formula("1")}};
  EXPECT_EQ(check_efrege(q, cert).reason, Reason::BadReference);
}

TEST(Check, EmptyCertificateIsNotARefutation) {
  Qbf q = load_qbf("forall_unit.qdimacs");
  CheckReport rep = check_efrege(q, {});
  EXPECT_FALSE(rep.valid());
  EXPECT_EQ(rep.reason, Reason::NotRefutation);
}

TEST(Text, CertificateRoundTrips) {
  Certificate cert = emit_for(kTables[1]);
  std::string text = to_efr(cert);
  Certificate back = parse_efr(text);
  ASSERT_EQ(back.size(), cert.size());
  EXPECT_EQ(to_efr(back), text);
  EXPECT_TRUE(check_efrege(load_qbf("xyuab.qdimacs"), back).valid());
}

TEST(Text, MalformedLinesThrow) {
  EXPECT_THROW(parse_efr("5 EXT v (& a b"), ParseError);
  EXPECT_THROW(parse_efr("5 FOO 1 2"), ParseError);
  EXPECT_THROW(parse_efr("x INF 1 F"), ParseError);
}
