#include <algorithm>
#include <optional>

#include "mresr/efrege.hpp"
#include "mresr/error.hpp"

namespace mresr {

namespace {

// The T-graph node that line `line` creates for a universal, read off the
// rule: proofs accepted by check_mrest have exactly these graphs.
struct NodeShape {
  TNode::Kind kind = TNode::Kind::Leaf;
  TriVal value = TriVal::Star;
  Var var = 0;
  std::size_t hi = 0; // if-else: x = 1 branch; #: first operand
  std::size_t lo = 0; // if-else: x = 0 branch; #: second operand
};

class Shapes {
public:
  Shapes(const Qbf& q, const MResTProof& proof) : q_(q), proof_(proof) {
    const std::size_t m = proof.size();
    live_.assign(m + 1, false);
    if (m == 0)
      return;
    for (std::size_t i = 1; i <= m; ++i) {
      const Rule& r = proof[i - 1].rule;
      if (r.is_axiom()) {
        if (r.index < 1 || r.index > q.matrix().size())
          throw PreconditionError("line " + std::to_string(i) + " cites a missing matrix clause");
      } else if (r.j < 1 || r.j >= i || r.k < 1 || r.k >= i || !q.is_existential(r.pivot)) {
        throw PreconditionError("line " + std::to_string(i) +
                                " has bad premises or a non-existential pivot");
      }
    }
    live_[m] = true;
    for (std::size_t i = m; i >= 1; --i)
      if (live_[i] && !proof[i - 1].rule.is_axiom()) {
        live_[proof[i - 1].rule.j] = true;
        live_[proof[i - 1].rule.k] = true;
      }
  }

  bool live(std::size_t i) const { return live_[i]; }

  NodeShape shape(std::size_t line, Var u) const {
    const Rule& r = proof_[line - 1].rule;
    NodeShape s;
    if (r.is_axiom()) {
      s.value = falsifying_u_literal(q_, q_.matrix()[r.index - 1], u);
      return s;
    }
    if (q_.order().left_of(r.pivot, u)) {
      s.kind = TNode::Kind::IfElse;
      s.var = r.pivot;
      s.hi = r.k;
      s.lo = r.j;
    } else {
      s.kind = TNode::Kind::Hash;
      s.hi = r.j;
      s.lo = r.k;
    }
    return s;
  }

private:
  const Qbf& q_;
  const MResTProof& proof_;
  std::vector<bool> live_;
};

std::string node_name(char kind, std::size_t line, Var u) {
  return std::string(1, kind) + "_" + std::to_string(line) + "_" + std::to_string(u) + "_" +
         std::to_string(line);
}

Formula qvar(Var v) { return Formula::var(std::to_string(v)); }

std::pair<Formula, Formula> node_definitions(const NodeShape& s, const NodeVars& hi,
                                             const NodeVars& lo) {
  switch (s.kind) {
  case TNode::Kind::Leaf:
    return {s.value == TriVal::One ? Formula::top() : Formula::bottom(),
            is_set(s.value) ? Formula::top() : Formula::bottom()};
  case TNode::Kind::IfElse: {
    Formula y = qvar(s.var);
    return {(y & Formula::var(hi.v)) | (~y & Formula::var(lo.v)),
            (y & Formula::var(hi.d)) | (~y & Formula::var(lo.d))};
  }
  case TNode::Kind::Hash:
    return {(Formula::var(hi.d) & Formula::var(hi.v)) | (Formula::var(lo.d) & Formula::var(lo.v)),
            Formula::var(hi.d) | Formula::var(lo.d)};
  }
  return {};
}

class Emitter {
public:
  Emitter(const Qbf& q, const MResTProof& proof, bool force)
      : q_(q), proof_(proof), shapes_(q, proof), force_(force), next_(q.matrix().size() + 1) {}

  ExtensionEnv env_only() {
    for (std::size_t i = 1; i <= proof_.size(); ++i)
      if (shapes_.live(i))
        for (Var u : q_.universals())
          define_node(i, u, false);
    return env_;
  }

  Certificate run() {
    if (proof_.empty())
      return cert_;
    for (std::size_t i = 1; i <= proof_.size(); ++i) {
      if (!shapes_.live(i))
        continue;
      for (Var u : q_.universals())
        define_node(i, u, true);
      if (proof_[i - 1].rule.is_axiom())
        axiom(i);
      else
        resolution(i);
    }
    phase_two(proof_.size());
    return cert_;
  }

private:
  // ---- line builders -------------------------------------------------------

  std::size_t push(EFregeLine l) {
    l.index = next_++;
    cert_.push_back(std::move(l));
    return cert_.back().index;
  }

  std::size_t ext(const std::string& var, Formula def) {
    EFregeLine l;
    l.kind = EFregeLine::Kind::Ext;
    l.var = var;
    l.formula = std::move(def);
    std::size_t idx = push(std::move(l));
    known_[idx] = iff(Formula::var(var), cert_.back().formula);
    return idx;
  }

  std::size_t inf(std::vector<std::size_t> premises, Formula f) {
    std::set<std::string> vars = f.vars();
    for (std::size_t p : premises)
      formula_at(p).collect_vars(vars);
    if (vars.size() > kMaxInferenceVars && !force_)
      throw ResourceLimitError("certificate step needs " + std::to_string(vars.size()) +
                               " variables, above the checker budget of " +
                               std::to_string(kMaxInferenceVars));
    EFregeLine l;
    l.kind = EFregeLine::Kind::Inf;
    l.premises = std::move(premises);
    l.formula = std::move(f);
    std::size_t idx = push(std::move(l));
    known_[idx] = cert_.back().formula;
    return idx;
  }

  std::size_t red(std::size_t premise, Var u, bool value) {
    EFregeLine l;
    l.kind = EFregeLine::Kind::Red;
    l.premises = {premise};
    l.u = u;
    l.value = value;
    l.formula = formula_at(premise).substitute(std::to_string(u), value);
    std::size_t idx = push(std::move(l));
    known_[idx] = cert_.back().formula;
    return idx;
  }

  Formula formula_at(std::size_t idx) const {
    if (idx <= q_.matrix().size())
      return clause_formula(q_.matrix()[idx - 1]);
    return known_.at(idx);
  }

  // ---- extension variables -------------------------------------------------

  void define_node(std::size_t line, Var u, bool emit) {
    NodeShape s = shapes_.shape(line, u);
    NodeVars nv{node_name('v', line, u), node_name('d', line, u)};
    NodeVars hi, lo;
    if (s.kind != TNode::Kind::Leaf) {
      hi = env_.nodes.at({s.hi, u});
      lo = env_.nodes.at({s.lo, u});
    }
    auto [dv, dd] = node_definitions(s, hi, lo);
    env_.nodes[{line, u}] = nv;
    env_.definitions.emplace_back(nv.v, dv);
    env_.definitions.emplace_back(nv.d, dd);
    if (!emit)
      return;
    std::size_t ev = ext(nv.v, dv);
    std::size_t ed = ext(nv.d, dd);
    def_line_[{line, u}] =
        inf({ev, ed}, iff(Formula::var(nv.v), dv) & iff(Formula::var(nv.d), dd));
  }

  Formula v(std::size_t line, Var u) const { return Formula::var(env_.nodes.at({line, u}).v); }
  Formula d(std::size_t line, Var u) const { return Formula::var(env_.nodes.at({line, u}).d); }

  // d -> (u <-> v): u follows the node's value wherever it is defined.
  Formula g(std::size_t line, Var u) const { return implies(d(line, u), iff(qvar(u), v(line, u))); }

  // Universals whose node at this line is not the * leaf.
  std::vector<Var> active(std::size_t line) const {
    std::vector<Var> out;
    for (Var u : q_.universals()) {
      NodeShape s = shapes_.shape(line, u);
      if (s.kind != TNode::Kind::Leaf || is_set(s.value))
        out.push_back(u);
    }
    return out;
  }

  static Formula guarded(const std::vector<Formula>& guards, const Formula& body) {
    return guards.empty() ? body : implies(conjunction(guards), body);
  }

  // ---- phase one ----------------------------------------------------------

  void axiom(std::size_t i) {
    const Clause& mc = q_.matrix()[proof_[i - 1].rule.index - 1];
    std::vector<Formula> body;
    for (Literal l : proof_[i - 1].clause.literals())
      body.push_back(clause_formula(Clause({l})));
    std::vector<Literal> ulits;
    for (Literal l : mc.literals())
      if (q_.is_universal(l.var()))
        ulits.push_back(l);
    if (ulits.empty()) {
      lambda_[i] = inf({proof_[i - 1].rule.index}, disjunction(body));
      return;
    }
    std::size_t cur = proof_[i - 1].rule.index;
    std::vector<Formula> guards;
    for (std::size_t s = 0; s < ulits.size(); ++s) {
      Var u = ulits[s].var();
      guards.push_back(g(i, u));
      std::vector<Formula> rest = body;
      for (std::size_t t = s + 1; t < ulits.size(); ++t)
        rest.push_back(clause_formula(Clause({ulits[t]})));
      cur = inf({cur, def_line_.at({i, u})}, guarded(guards, disjunction(rest)));
    }
    lambda_[i] = cur;
  }

  void resolution(std::size_t i) {
    const Rule& r = proof_[i - 1].rule;
    const Var x = r.pivot;
    std::size_t side_j = replace_guards(i, r.j, x, true);
    std::size_t side_k = replace_guards(i, r.k, x, false);
    std::vector<Formula> guards;
    for (Var u : active(i))
      guards.push_back(g(i, u));
    lambda_[i] = inf({side_j, side_k}, guarded(guards, clause_formula(proof_[i - 1].clause)));
  }

  // Rewrites the premise's guards g_p(u) into g_i(u), one universal at a time.
  std::size_t replace_guards(std::size_t i, std::size_t p, Var x, bool positive_side) {
    std::vector<Var> us = active(p);
    std::vector<Formula> guards;
    for (Var u : us)
      guards.push_back(g(p, u));
    const Formula body = clause_formula(proof_[p - 1].clause);
    std::size_t cur = lambda_.at(p);
    for (std::size_t s = 0; s < us.size(); ++s) {
      Var u = us[s];
      std::size_t lemma = guard_lemma(i, p, u, x, positive_side);
      guards[s] = g(i, u);
      cur = inf({cur, lemma}, guarded(guards, body));
    }
    return cur;
  }

  // if-else: (x | (g_i -> g_p)) for the positive premise, (~x | ...) for the
  // negative one; #: (g_i -> g_p), using the consistency of the operands.
  std::size_t guard_lemma(std::size_t i, std::size_t p, Var u, Var x, bool positive_side) {
    NodeShape s = shapes_.shape(i, u);
    Formula step = implies(g(i, u), g(p, u));
    if (s.kind == TNode::Kind::IfElse) {
      Formula px = qvar(x);
      return inf({def_line_.at({i, u})}, (positive_side ? px : ~px) | step);
    }
    return inf({def_line_.at({i, u}), consistency(s.hi, s.lo, u)}, step);
  }

  // ---- consistency of two nodes -------------------------------------------

  Formula cons(std::size_t a, std::size_t b, Var u) const {
    return ~(d(a, u) & d(b, u) & exclusive_or(v(a, u), v(b, u)));
  }

  std::size_t consistency(std::size_t a, std::size_t b, Var u) {
    return prove_cons(a, b, u, {});
  }

  // (Gamma -> cons(a, b)), Gamma a set of existential literals.
  std::size_t prove_cons(std::size_t a, std::size_t b, Var u, std::vector<Literal> gamma) {
    std::sort(gamma.begin(), gamma.end());
    auto key = std::make_tuple(a, b, u, gamma);
    if (auto it = cons_memo_.find(key); it != cons_memo_.end())
      return it->second;

    std::vector<Formula> guards;
    for (Literal l : gamma)
      guards.push_back(clause_formula(Clause({l})));
    const Formula goal = guarded(guards, cons(a, b, u));
    NodeShape sa = shapes_.shape(a, u);
    NodeShape sb = shapes_.shape(b, u);
    std::size_t out = 0;

    auto split = [&](const NodeShape& s, std::size_t node, bool first) {
      auto sub = [&](std::size_t child, std::vector<Literal> g2) {
        return first ? prove_cons(child, b, u, std::move(g2)) : prove_cons(a, child, u, std::move(g2));
      };
      if (s.kind == TNode::Kind::IfElse) {
        auto pos = std::find_if(gamma.begin(), gamma.end(),
                                [&](Literal l) { return l.var() == s.var; });
        if (pos != gamma.end())
          return inf({sub(pos->positive() ? s.hi : s.lo, gamma), def_line_.at({node, u})}, goal);
        auto g1 = gamma, g0 = gamma;
        g1.emplace_back(s.var, false);
        g0.emplace_back(s.var, true);
        std::size_t p1 = sub(s.hi, g1);
        std::size_t p0 = sub(s.lo, g0);
        return inf({p1, p0, def_line_.at({node, u})}, goal);
      }
      std::size_t p1 = sub(s.hi, gamma);
      std::size_t p2 = sub(s.lo, gamma);
      return inf({p1, p2, def_line_.at({node, u})}, goal);
    };

    if (a == b) {
      out = inf({def_line_.at({a, u})}, goal);
    } else if (sa.kind == TNode::Kind::IfElse) {
      out = split(sa, a, true);
    } else if (sb.kind == TNode::Kind::IfElse) {
      out = split(sb, b, false);
    } else if (sa.kind == TNode::Kind::Hash) {
      out = split(sa, a, true);
    } else if (sb.kind == TNode::Kind::Hash) {
      out = split(sb, b, false);
    } else {
      bool clash = is_set(sa.value) && is_set(sb.value) && sa.value != sb.value;
      if (clash && !force_)
        throw PreconditionError("strategies clash at lines " + std::to_string(a) + " and " +
                                std::to_string(b) + " for universal " + std::to_string(u));
      out = inf({def_line_.at({a, u}), def_line_.at({b, u})}, cons(a, b, u));
    }
    cons_memo_[key] = out;
    return out;
  }

  // ---- phase two ----------------------------------------------------------

  void phase_two(std::size_t m) {
    std::vector<Var> us = active(m);
    if (us.empty())
      return;
    std::vector<Formula> guards;
    std::vector<Formula> w;
    for (Var u : us) {
      guards.push_back(g(m, u));
      std::string name = "w_" + std::to_string(m) + "_" + std::to_string(u);
      w.push_back(Formula::var(name));
    }
    const Formula body = clause_formula(proof_[m - 1].clause);
    std::size_t cur = lambda_.at(m);
    for (std::size_t s = 0; s < us.size(); ++s) {
      std::size_t def = ext(w[s].name(), d(m, us[s]) & v(m, us[s]));
      guards[s] = iff(qvar(us[s]), w[s]);
      cur = inf({cur, def}, guarded(guards, body));
    }
    std::vector<Formula> parts;
    for (std::size_t s = 0; s < us.size(); ++s)
      parts.push_back(exclusive_or(qvar(us[s]), w[s]));
    cur = inf({cur}, disjunction(parts));
    for (std::size_t s = us.size(); s-- > 0;) {
      std::size_t r0 = red(cur, us[s], false);
      std::size_t r1 = red(cur, us[s], true);
      parts.pop_back();
      std::vector<Formula> with_w = parts, with_not_w = parts;
      with_w.push_back(w[s]);
      with_not_w.push_back(~w[s]);
      std::size_t p0 = inf({r0}, disjunction(with_w));
      std::size_t p1 = inf({r1}, disjunction(with_not_w));
      cur = inf({p0, p1}, disjunction(parts));
    }
  }

  const Qbf& q_;
  const MResTProof& proof_;
  Shapes shapes_;
  bool force_;
  std::size_t next_;
  Certificate cert_;
  ExtensionEnv env_;
  std::map<std::size_t, Formula> known_;
  std::map<std::pair<std::size_t, Var>, std::size_t> def_line_;
  std::map<std::size_t, std::size_t> lambda_;
  std::map<std::tuple<std::size_t, std::size_t, Var, std::vector<Literal>>, std::size_t> cons_memo_;
};

} // namespace

ExtensionEnv define_extensions(const Qbf& q, const MResTProof& proof) {
  CheckReport rep = check_mrest(q, proof);
  if (!rep.valid())
    throw PreconditionError("extension variables need a valid refutation");
  return Emitter(q, proof, false).env_only();
}

Certificate emit_efrege(const Qbf& q, const MResTProof& proof, const EmitOptions& opts) {
  if (!opts.force) {
    CheckReport rep = check_mrest(q, proof);
    if (!rep.valid())
      throw PreconditionError("emission needs a valid MRes-T refutation (" +
                              std::string(reason_name(rep.reason)) + " at line " +
                              std::to_string(rep.failing_line) + ")");
  }
  return Emitter(q, proof, opts.force).run();
}

} // namespace mresr
