#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <mresr/convert.hpp>
#include <mresr/cr.hpp>
#include <mresr/efrege.hpp>
#include <mresr/error.hpp>
#include <mresr/mres.hpp>
#include <mresr/mrest.hpp>
#include <mresr/qbf.hpp>
#include <mresr/rule_script.hpp>
#include <mresr/search.hpp>
#include <mresr/tgraph.hpp>

namespace mresr::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class Inputs {
public:
  explicit Inputs(std::istream& in) : in_(in) {}

  std::string read(const std::string& path) {
    if (path.empty() || path == "-") {
      if (stdin_used_)
        throw UsageError("standard input can only be read once");
      stdin_used_ = true;
      std::ostringstream ss;
      ss << in_.rdbuf();
      return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f)
      throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  /// A formula and a proof script, from two paths or from one bundle.
  Bundle formula_and_script(const std::string& qpath, const std::string& ppath) {
    if (ppath.empty()) {
      std::string text = read(qpath);
      if (!looks_like_bundle(text))
        throw UsageError("expected a proof file after the formula, or a bundle");
      return parse_bundle(text);
    }
    Qbf q = parse_qdimacs(read(qpath));
    return {std::move(q), parse_mrt(read(ppath))};
  }

private:
  std::istream& in_;
  bool stdin_used_ = false;
};

/// Plain mode prints `key: value` lines, skipping the schema tag and nulls.
void print(const json& j, bool as_json, std::ostream& out) {
  if (as_json) {
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& [k, v] : j.items()) {
    if (k == "schema" || v.is_null())
      continue;
    out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
}

int exit_for(Verdict v) {
  switch (v) {
  case Verdict::Valid: return kAccept;
  case Verdict::Invalid: return kReject;
  case Verdict::Unknown: return kResource;
  }
  return kReject;
}

json report_json(const CheckReport& rep, bool with_regular = true) {
  json j;
  j["schema"] = 1;
  j["verdict"] = std::string(verdict_name(rep.verdict));
  j["failing_line"] = rep.failing_line;
  j["reason"] = std::string(reason_name(rep.reason));
  j["size"] = rep.stats.size;
  j["width"] = rep.stats.max_width;
  j["regular"] = with_regular ? json(rep.stats.regular) : json(nullptr);
  if (!rep.detail.empty())
    j["detail"] = rep.detail;
  return j;
}

std::string describe(const CheckReport& rep) {
  std::string s = std::string(reason_name(rep.reason));
  if (rep.failing_line)
    s += " at line " + std::to_string(rep.failing_line);
  if (!rep.detail.empty())
    s += " (" + rep.detail + ")";
  return s;
}

std::string assignment_text(const Qbf& q, const PartialAssignment& a) {
  std::string s;
  for (Var v : q.existentials()) {
    if (!s.empty())
      s += ' ';
    s += std::to_string(v) + "=" + to_char(a[v]);
  }
  return s;
}

// ---- subcommands ----------------------------------------------------------

int cmd_parse(Inputs& io, const std::string& path, bool canonical, bool as_json,
              std::ostream& out) {
  Qbf q = parse_qdimacs(io.read(path));
  if (canonical) {
    out << to_qdimacs(q);
    return kAccept;
  }
  std::string prefix;
  for (const auto& b : q.blocks()) {
    if (!prefix.empty())
      prefix += ' ';
    prefix += b.quantifier == Quantifier::Exists ? 'e' : 'a';
    prefix += std::to_string(b.vars.size());
  }
  json j;
  j["schema"] = 1;
  j["verdict"] = "parsed";
  j["vars"] = q.num_vars();
  j["clauses"] = q.matrix().size();
  j["blocks"] = q.blocks().size();
  j["universals"] = q.universals().size();
  j["existentials"] = q.existentials().size();
  j["prefix"] = prefix;
  print(j, as_json, out);
  return kAccept;
}

int cmd_check_mres(Inputs& io, const std::string& qpath, const std::string& ppath, bool as_json,
                   std::ostream& out) {
  Qbf q = parse_qdimacs(io.read(qpath));
  auto rules = parse_mrs(io.read(ppath));
  CheckReport rep = check_mres(q, replay_mres(q, rules));
  print(report_json(rep), as_json, out);
  return exit_for(rep.verdict);
}

int cmd_check_mrest(Inputs& io, const std::string& qpath, const std::string& ppath, bool as_json,
                    std::ostream& out) {
  Bundle b = io.formula_and_script(qpath, ppath);
  CheckReport rep = check_mrest(b.qbf, replay_mrest(b.qbf, b.script));
  json j = report_json(rep);
  j["nodes"] = rep.stats.node_count;
  print(j, as_json, out);
  return exit_for(rep.verdict);
}

int cmd_convert(Inputs& io, const std::string& qpath, const std::string& ppath, bool bundle,
                bool as_json, std::ostream& out, std::ostream& err) {
  Qbf q = parse_qdimacs(io.read(qpath));
  auto rules = parse_mrs(io.read(ppath));
  MResTProof p;
  try {
    p = mres_to_mrest(q, replay_mres(q, rules));
  } catch (const ConversionError& e) {
    if (as_json)
      print(report_json(e.report()), true, out);
    err << "error: MRes proof does not check: " << describe(e.report()) << '\n';
    return kReject;
  }
  RuleScript s = to_script(p);
  std::string text = bundle ? to_bundle(q, s) : to_mrt(s);
  if (as_json) {
    json j = report_json(check_mrest(q, p));
    j[bundle ? "bundle" : "mrt"] = text;
    print(j, true, out);
  } else {
    out << text;
  }
  return kAccept;
}

int cmd_emit(Inputs& io, const std::string& qpath, const std::string& ppath, bool force,
             bool as_json, std::ostream& out, std::ostream& err) {
  Bundle b = io.formula_and_script(qpath, ppath);
  MResTProof p = replay_mrest(b.qbf, b.script);
  if (!force) {
    CheckReport rep = check_mrest(b.qbf, p);
    if (!rep.valid()) {
      if (as_json)
        print(report_json(rep), true, out);
      err << "error: proof does not check: " << describe(rep) << '\n';
      return exit_for(rep.verdict);
    }
  }
  EmitOptions opts;
  opts.force = force;
  Certificate cert = emit_efrege(b.qbf, p, opts);
  std::string text = to_efr(cert);
  if (as_json) {
    json j;
    j["schema"] = 1;
    j["verdict"] = "emitted";
    j["lines"] = cert.size();
    j["certificate"] = text;
    print(j, true, out);
  } else {
    out << text;
  }
  return kAccept;
}

int cmd_check_efrege(Inputs& io, const std::string& qpath, const std::string& cpath, bool as_json,
                     std::ostream& out) {
  Qbf q = parse_qdimacs(io.read(qpath));
  Certificate cert = parse_efr(io.read(cpath));
  CheckReport rep = check_efrege(q, cert);
  std::size_t width = 0;
  for (const auto& l : cert)
    width = std::max(width, l.formula.size());
  rep.stats.max_width = width;
  print(report_json(rep, false), as_json, out);
  return exit_for(rep.verdict);
}

int cmd_gen_cr(std::size_t n, std::ostream& out) {
  if (n == 0)
    throw UsageError("n must be at least 1");
  CrInstance cr = gen_cr(n);
  out << "c completion formula n=" << n << '\n';
  for (Var v = 1; v <= cr.qbf.num_vars(); ++v)
    out << "c " << v << ' ' << cr.qbf.name(v) << '\n';
  out << to_qdimacs(cr.qbf);
  return kAccept;
}

int cmd_extract(Inputs& io, const std::string& qpath, const std::string& ppath, bool as_json,
                std::ostream& out, std::ostream& err) {
  Bundle b = io.formula_and_script(qpath, ppath);
  MResTProof p = replay_mrest(b.qbf, b.script);
  CheckReport rep = check_mrest(b.qbf, p);
  if (!rep.valid()) {
    if (as_json)
      print(report_json(rep), true, out);
    err << "error: proof does not check: " << describe(rep) << '\n';
    return exit_for(rep.verdict);
  }
  std::string dump = dump_strategies(extract_countermodel(b.qbf, p));
  if (as_json) {
    json j = report_json(rep);
    j["strategies"] = dump;
    print(j, true, out);
  } else {
    out << dump;
  }
  return kAccept;
}

int cmd_verify(Inputs& io, const std::string& qpath, const std::string& spath, bool as_json,
               std::ostream& out) {
  Qbf q = parse_qdimacs(io.read(qpath));
  auto strategies = parse_strategies(io.read(spath));
  CountermodelReport r = verify_countermodel(q, strategies);
  json j;
  j["schema"] = 1;
  j["verdict"] = r.valid ? "valid" : "invalid";
  j["assignments"] = r.assignments_checked;
  j["ambiguous"] = r.ambiguous;
  j["counterexample"] =
      r.counterexample ? json(assignment_text(q, *r.counterexample)) : json(nullptr);
  print(j, as_json, out);
  return r.valid ? kAccept : kReject;
}

int cmd_search(Inputs& io, const std::string& qpath, std::size_t max_lines, std::uint64_t budget,
               bool as_json, std::ostream& out, std::ostream& err) {
  Qbf q = parse_qdimacs(io.read(qpath));
  SearchOptions opts;
  opts.max_lines = max_lines;
  opts.node_budget = budget;
  SearchStats stats;
  std::optional<MResTProof> p;
  try {
    p = bounded_search(q, opts, &stats);
  } catch (const ResourceLimitError& e) {
    if (as_json) {
      json j;
      j["schema"] = 1;
      j["verdict"] = "unknown";
      j["nodes"] = stats.nodes;
      j["detail"] = e.what();
      print(j, true, out);
    }
    err << "error: " << e.what() << '\n';
    return kResource;
  }
  json j;
  j["schema"] = 1;
  j["verdict"] = p ? "found" : "none";
  j["size"] = p ? json(p->size()) : json(nullptr);
  j["max_lines"] = max_lines;
  j["nodes"] = stats.nodes;
  if (!p) {
    print(j, as_json, out);
    return kReject;
  }
  std::string text = to_bundle(q, to_script(*p));
  if (as_json) {
    j["bundle"] = text;
    print(j, true, out);
  } else {
    // stdout carries only the bundle so it can be piped into check-mrest.
    out << text;
    err << "search: " << p->size() << " lines, " << stats.nodes << " nodes\n";
  }
  return kAccept;
}

int cmd_stats(Inputs& io, const std::string& qpath, const std::string& ppath, bool as_json,
              std::ostream& out) {
  Bundle b = io.formula_and_script(qpath, ppath);
  MResTProof p = replay_mrest(b.qbf, b.script);
  CheckReport rep = check_mrest(b.qbf, p);
  std::size_t axioms = 0;
  for (const auto& l : p)
    axioms += l.rule.is_axiom();
  std::size_t leaves = 0, ifelse = 0, hash = 0, final_nodes = 0;
  std::set<std::pair<Var, std::size_t>> seen;
  for (const auto& l : p)
    for (const auto& [u, t] : l.graphs)
      for (const auto& [id, n] : t.nodes()) {
        if (!seen.emplace(u, id).second)
          continue;
        leaves += n.kind == TNode::Kind::Leaf;
        ifelse += n.kind == TNode::Kind::IfElse;
        hash += n.kind == TNode::Kind::Hash;
      }
  if (!p.empty())
    for (const auto& [u, t] : p.back().graphs)
      final_nodes += t.topological().size();
  json j = report_json(rep);
  j["axioms"] = axioms;
  j["resolutions"] = p.size() - axioms;
  j["nodes"] = rep.stats.node_count;
  j["leaf_nodes"] = leaves;
  j["ifelse_nodes"] = ifelse;
  j["hash_nodes"] = hash;
  j["final_graph_nodes"] = final_nodes;
  print(j, as_json, out);
  return kAccept;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Checks, converts and searches MRes-T refutations of QBFs.", "mrest"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a JSON object instead of key: value lines");

  std::string qpath, ppath;
  auto formula_arg = [&](CLI::App* sub) {
    sub->add_option("qdimacs", qpath, "QDIMACS formula, '-' for stdin");
  };

  auto* parse = app.add_subcommand("parse", "Validate a QDIMACS file and summarize it");
  formula_arg(parse);
  bool canonical = false;
  parse->add_flag("--canonical", canonical, "Print the canonical QDIMACS rendering instead");

  auto* check_mres_cmd = app.add_subcommand("check-mres", "Check an MRes proof (.mrs)");
  formula_arg(check_mres_cmd);
  check_mres_cmd->add_option("proof", ppath, "MRes proof")->required();

  auto* check_mrest_cmd =
      app.add_subcommand("check-mrest", "Check an MRes-T proof (.mrt, or a bundle)");
  formula_arg(check_mrest_cmd);
  check_mrest_cmd->add_option("proof", ppath, "MRes-T proof; omit when reading a bundle");

  auto* convert = app.add_subcommand("convert", "Convert between proof systems");
  convert->require_subcommand(1);
  auto* m2t = convert->add_subcommand("mres-to-mrest", "Rebuild an MRes proof with T-graphs");
  formula_arg(m2t);
  m2t->add_option("proof", ppath, "MRes proof")->required();
  bool bundle = false;
  m2t->add_flag("--bundle", bundle, "Print formula and proof as one bundle");

  auto* emit = app.add_subcommand("emit-efrege", "Emit an eFrege+forall-red certificate");
  formula_arg(emit);
  emit->add_option("proof", ppath, "MRes-T proof; omit when reading a bundle");
  bool force = false;
  emit->add_flag("--force", force, "Emit even if the proof does not check");

  auto* check_ef = app.add_subcommand("check-efrege", "Check an eFrege+forall-red certificate");
  formula_arg(check_ef);
  check_ef->add_option("certificate", ppath, "Certificate (.efr)")->required();

  auto* gen = app.add_subcommand("gen-cr", "Write the n x n completion formula as QDIMACS");
  std::size_t n = 0;
  gen->add_option("n", n, "Grid size")->required()->check(CLI::Range(1, 64));

  auto* extract = app.add_subcommand("extract-strategy", "Dump the countermodel of a refutation");
  formula_arg(extract);
  extract->add_option("proof", ppath, "MRes-T proof; omit when reading a bundle");

  auto* verify = app.add_subcommand("verify-countermodel", "Check a strategy dump exhaustively");
  formula_arg(verify);
  verify->add_option("strategies", ppath, "Strategy dump")->required();

  auto* search = app.add_subcommand("search", "Find a shortest MRes-T refutation");
  formula_arg(search);
  std::size_t max_lines = 8;
  std::uint64_t budget = SearchOptions{}.node_budget;
  search->add_option("--max-lines", max_lines, "Longest refutation tried")->capture_default_str();
  search->add_option("--budget", budget, "Search nodes before giving up")->capture_default_str();

  auto* stats = app.add_subcommand("stats", "Proof statistics");
  formula_arg(stats);
  stats->add_option("proof", ppath, "MRes-T proof; omit when reading a bundle");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kAccept : kUsage;
  }

  Inputs io(in);
  try {
    if (*parse)
      return cmd_parse(io, qpath, canonical, as_json, out);
    if (*check_mres_cmd)
      return cmd_check_mres(io, qpath, ppath, as_json, out);
    if (*check_mrest_cmd)
      return cmd_check_mrest(io, qpath, ppath, as_json, out);
    if (*m2t)
      return cmd_convert(io, qpath, ppath, bundle, as_json, out, err);
    if (*emit)
      return cmd_emit(io, qpath, ppath, force, as_json, out, err);
    if (*check_ef)
      return cmd_check_efrege(io, qpath, ppath, as_json, out);
    if (*gen)
      return cmd_gen_cr(n, out);
    if (*extract)
      return cmd_extract(io, qpath, ppath, as_json, out, err);
    if (*verify)
      return cmd_verify(io, qpath, ppath, as_json, out);
    if (*search)
      return cmd_search(io, qpath, max_lines, budget, as_json, out, err);
    if (*stats)
      return cmd_stats(io, qpath, ppath, as_json, out);
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

} // namespace mresr::cli
