#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "popmatch/error.hpp"
#include "popmatch/gadgets.hpp"
#include "popmatch/io.hpp"
#include "popmatch/oracle.hpp"
#include "popmatch/solver.hpp"
#include "popmatch/verifier.hpp"
#include "popmatch/votes.hpp"
#include "popmatch/witness.hpp"

namespace popmatch::cli {

namespace {

using nlohmann::ordered_json;

ordered_json edge_json(const Instance& inst, Edge e) {
  return ordered_json::array({inst.name(a_vertex(e.a)), inst.name(b_vertex(e.b))});
}

ordered_json matching_json(const Instance& inst, const Matching& m) {
  ordered_json arr = ordered_json::array();
  for (const Edge& e : m.edges()) arr.push_back(edge_json(inst, e));
  return arr;
}

ordered_json witness_json(const Instance& inst, const Witness& y) {
  ordered_json obj = ordered_json::object();
  for (Side s : {Side::A, Side::B})
    for (std::size_t i = 0; i < inst.count(s); ++i) obj[inst.name({s, i})] = y[{s, i}].to_string();
  return obj;
}

ordered_json result_header(const std::string& command) {
  ordered_json j;
  j["format"] = "popmatch-result 1";
  j["command"] = command;
  return j;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_json(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

// A matching file or a result document with a "matching" member.
Matching load_matching_any(const Instance& inst, const std::string& path) {
  const std::string text = read_file(path);
  if (!looks_like_json(text)) {
    std::istringstream in(text);
    return read_matching(inst, in);
  }
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  if (!j.contains("matching") || !j["matching"].is_array())
    throw Error(ErrorCode::ParseError, path + ": result has no matching");
  std::ostringstream doc;
  doc << "popmatch-matching 1\n";
  for (const auto& pair : j["matching"]) doc << pair.at(0).get<std::string>() << " " << pair.at(1).get<std::string>() << "\n";
  std::istringstream in(doc.str());
  return read_matching(inst, in);
}

// A witness file or a result document with a "witness" member.
Witness load_witness_any(const Instance& inst, const std::string& path) {
  const std::string text = read_file(path);
  if (!looks_like_json(text)) {
    std::istringstream in(text);
    return read_witness(inst, in);
  }
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  if (!j.contains("witness") || !j["witness"].is_object())
    throw Error(ErrorCode::ParseError, path + ": result has no witness");
  std::ostringstream doc;
  doc << "popmatch-witness 1\n";
  for (const auto& [name, value] : j["witness"].items()) doc << name << " " << value.get<std::string>() << "\n";
  std::istringstream in(doc.str());
  return read_witness(inst, in);
}

// "a1:b1,a2:b2" -> edges of inst.
std::vector<Edge> parse_edge_list(const Instance& inst, const std::string& text) {
  std::vector<Edge> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "edge '" + item + "' must be a:b");
    const auto a = inst.find(item.substr(0, colon));
    const auto b = inst.find(item.substr(colon + 1));
    if (!a || !b || a->side != Side::A || b->side != Side::B)
      throw Error(ErrorCode::ParseError, "edge '" + item + "' does not name an A and a B vertex");
    out.push_back({a->index, b->index});
  }
  return out;
}

std::uint64_t default_cap() {
  if (const char* env = std::getenv("POPMATCH_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, std::string("POPMATCH_CAP is not a number: ") + env);
    }
  }
  return OracleOptions{}.cap;
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + path);
  f << text;
}

std::vector<Rational> parse_rationals(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(Rational::parse(item));
  return out;
}

struct Options {
  std::string instance, matching, matching2, witness;
  std::string forced, forbidden;
  bool c_check = false;
  std::uint64_t cap = 0;
  bool omega = false;
  unsigned jobs = 1;
  // gen
  std::string variant = "three-one", weights, base, cnf, assignment, graph, set, out, matching_out, witness_out;
  std::string c = "";
};

int cmd_solve(const Options& o, std::ostream& out) {
  const LoadedInstance li = load_instance_file(o.instance);
  const Instance& inst = li.instance;
  if (o.c_check) {
    ordered_json j = result_header("solve");
    j["c"] = validate_weights(inst).to_string();
    emit(out, j);
    return kOk;
  }
  SolveOptions so;
  so.forced = parse_edge_list(inst, o.forced);
  so.forbidden = parse_edge_list(inst, o.forbidden);
  const SolveResult r = solve(inst, so);
  ordered_json j = result_header("solve");
  j["outcome"] = r.outcome == Outcome::Found ? "FOUND" : "NO_POPULAR_MATCHING";
  if (r.matching) j["matching"] = matching_json(inst, *r.matching);
  if (r.witness) j["witness"] = witness_json(inst, *r.witness);
  if (!r.reason.empty()) j["reason"] = r.reason;
  ordered_json trace = ordered_json::array();
  for (const TraceStep& t : r.trace) {
    ordered_json step;
    step["conflict"] = edge_json(inst, t.conflict);
    step["dismissed"] = t.dismissed;
    step["next"] = t.next ? ordered_json(*t.next) : ordered_json(nullptr);
    trace.push_back(step);
  }
  j["trace"] = trace;
  emit(out, j);
  if (r.matching && !o.matching_out.empty()) write_text(o.matching_out, format_matching(inst, *r.matching), out);
  if (r.witness && !o.witness_out.empty()) write_text(o.witness_out, format_witness(inst, *r.witness), out);
  return r.outcome == Outcome::Found ? kOk : kNoPopular;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const LoadedInstance li = load_instance_file(o.instance);
  const Matching m = load_matching_any(li.instance, o.matching);
  const VerifyResult r = is_popular(li.instance, m);
  ordered_json j = result_header("verify");
  j["outcome"] = r.is_popular ? "popular" : "unpopular";
  j["matching"] = matching_json(li.instance, m);
  j["margin"] = r.margin.to_string();
  j["counterexample"] = r.counterexample ? matching_json(li.instance, *r.counterexample) : ordered_json(nullptr);
  emit(out, j);
  return r.is_popular ? kOk : kNegative;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const LoadedInstance li = load_instance_file(o.instance);
  const Matching m1 = load_matching_any(li.instance, o.matching);
  const Matching m2 = load_matching_any(li.instance, o.matching2);
  ordered_json j = result_header("compare");
  j["delta"] = delta_w(li.instance, m1, m2).to_string();
  emit(out, j);
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const LoadedInstance li = load_instance_file(o.instance);
  const Instance& inst = li.instance;
  OracleOptions opts;
  opts.cap = o.cap ? o.cap : default_cap();
  opts.jobs = o.jobs;
  const OracleReport r = popular_matchings_bruteforce(inst, opts);
  ordered_json j = result_header("enumerate");
  j["total"] = r.total;
  j["popular_count"] = r.popular.size();
  ordered_json pop = ordered_json::array();
  for (const Matching& m : r.popular) pop.push_back(matching_json(inst, m));
  j["popular"] = pop;
  ordered_json edges = ordered_json::array();
  for (const Edge& e : r.popular_edges) edges.push_back(edge_json(inst, e));
  j["popular_edges"] = edges;
  j["max_cardinality"] = r.max_cardinality;
  if (o.omega) {
    std::optional<CostedMatching> best;
    for (const Matching& m : r.popular) {
      Rational c = matching_cost(m, li.costs);
      if (!best || c > best->cost) best = CostedMatching{m, c};
    }
    if (best) {
      j["max_omega"] = {{"value", best->cost.to_string()}, {"matching", matching_json(inst, best->matching)}};
    } else {
      j["max_omega"] = nullptr;
    }
  }
  emit(out, j);
  return kOk;
}

int cmd_check_witness(const Options& o, std::ostream& out) {
  const LoadedInstance li = load_instance_file(o.instance);
  const Matching m = load_matching_any(li.instance, o.matching);
  const Witness y = load_witness_any(li.instance, o.witness);
  const WitnessReport r = inspect_witness(li.instance, m, y);
  ordered_json j = result_header("check-witness");
  j["ok"] = r.ok();
  j["sum"] = r.sum.to_string();
  ordered_json conflicts = ordered_json::array();
  for (const Edge& e : r.conflicts) conflicts.push_back(edge_json(li.instance, e));
  j["conflicts"] = conflicts;
  ordered_json bounds = ordered_json::array();
  for (const VertexId& v : r.bound_violations) bounds.push_back(li.instance.name(v));
  j["bound_violations"] = bounds;
  emit(out, j);
  return r.ok() ? kOk : kNegative;
}

Rational c_or(const Options& o, std::int64_t fallback) {
  return o.c.empty() ? Rational(fallback) : Rational::parse(o.c);
}

int cmd_gen_condorcet(const Options& o, std::ostream& out) {
  Instance inst;
  if (o.variant == "zero-b") inst = condorcet_instance(CondorcetVariant::ZeroB);
  else if (o.variant == "three-one") inst = condorcet_instance(CondorcetVariant::ThreeOne);
  else if (o.variant == "custom") inst = condorcet_instance(CondorcetVariant::Custom, parse_rationals(o.weights));
  else throw Error(ErrorCode::ParseError, "unknown variant " + o.variant);
  write_text(o.out, format_instance(inst), out);
  return kOk;
}

int cmd_gen_forced(const Options& o, std::ostream& out) {
  const LoadedInstance li = load_instance_file(o.base);
  const ForcedEdgeReduction red = forced_edges_reduce(li.instance, parse_edge_list(li.instance, o.forced));
  write_text(o.out, format_instance(red.reduced), out);
  return kOk;
}

int cmd_gen_sat(const Options& o, std::ostream& out) {
  const CnfFormula f = parse_cnf(o.cnf);
  const Rational c = c_or(o, 2);
  const Instance inst = sat_to_instance(f, c);
  write_text(o.out, format_instance(inst), out);
  if (!o.assignment.empty()) {
    // "x=1,y=0,..." in any order; every variable must be given.
    Assignment x(f.variables.size());
    std::vector<bool> given(f.variables.size(), false);
    std::stringstream ss(o.assignment);
    for (std::string item; std::getline(ss, item, ',');) {
      const auto eq = item.find('=');
      const std::string name = item.substr(0, eq);
      const auto it = std::find(f.variables.begin(), f.variables.end(), name);
      if (eq == std::string::npos || it == f.variables.end())
        throw Error(ErrorCode::AssignmentDomainMismatch, "bad assignment entry '" + item + "'");
      const std::size_t v = static_cast<std::size_t>(it - f.variables.begin());
      x[v] = item.substr(eq + 1) == "1" || item.substr(eq + 1) == "true";
      given[v] = true;
    }
    if (std::find(given.begin(), given.end(), false) != given.end())
      throw Error(ErrorCode::AssignmentDomainMismatch, "assignment does not cover every variable");
    if (!o.matching_out.empty())
      write_text(o.matching_out, format_matching(inst, assignment_to_matching(f, inst, x)), out);
    if (!o.witness_out.empty()) write_text(o.witness_out, format_witness(inst, table1_witness(f, inst, x, c)), out);
  }
  return kOk;
}

int cmd_gen_is(const Options& o, std::ostream& out) {
  const Digraph g = parse_graph(o.graph);
  const Rational c = c_or(o, 4);
  const CostedInstance ci = is_to_instance(g, c);
  write_text(o.out, format_instance(ci.instance, ci.costs), out);
  if (!o.set.empty() || !o.matching_out.empty() || !o.witness_out.empty()) {
    std::vector<std::size_t> set;
    std::stringstream ss(o.set);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) set.push_back(std::stoul(item));
    for (std::size_t v : set)
      if (v >= g.vertex_count) throw Error(ErrorCode::BadIndex, "set vertex out of range");
    if (!o.matching_out.empty())
      write_text(o.matching_out, format_matching(ci.instance, independent_set_to_matching(g, ci.instance, set)), out);
    if (!o.witness_out.empty())
      write_text(o.witness_out, format_witness(ci.instance, table2_witness(g, ci.instance, set, c)), out);
  }
  return kOk;
}

int cmd_gen_fixed(const std::string& which, const Options& o, std::ostream& out) {
  const Rational c = c_or(o, which == "six-path" ? 2 : 4);
  const Instance inst = which == "six-path" ? six_path_gadget(c) : appendix_instance(c);
  write_text(o.out, format_instance(inst), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Popular matchings with weighted voters"};
  app.require_subcommand(1);
  Options o;
  std::string chosen;

  auto* solve_cmd = app.add_subcommand("solve", "Find a popular matching (A weighs c > 3, B weighs 1)");
  solve_cmd->add_option("instance", o.instance)->required();
  solve_cmd->add_option("--forced", o.forced, "Comma-separated a:b edges that must be used");
  solve_cmd->add_option("--forbidden", o.forbidden, "Comma-separated a:b edges that must not be used");
  solve_cmd->add_flag("--c-check", o.c_check, "Only validate the weight pattern and print c");
  solve_cmd->add_option("--matching-out", o.matching_out, "Also write the matching file");
  solve_cmd->add_option("--witness-out", o.witness_out, "Also write the witness file");

  auto* verify_cmd = app.add_subcommand("verify", "Decide popularity of a matching");
  verify_cmd->add_option("instance", o.instance)->required();
  verify_cmd->add_option("matching", o.matching)->required();

  auto* compare_cmd = app.add_subcommand("compare", "Weighted vote difference of two matchings");
  compare_cmd->add_option("instance", o.instance)->required();
  compare_cmd->add_option("m1", o.matching)->required();
  compare_cmd->add_option("m2", o.matching2)->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "List all popular matchings by brute force");
  enum_cmd->add_option("instance", o.instance)->required();
  enum_cmd->add_option("--cap", o.cap, "Enumeration limit (default POPMATCH_CAP or 10^7)");
  enum_cmd->add_flag("--omega", o.omega, "Report the popular matching of maximum edge cost");
  enum_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* check_cmd = app.add_subcommand("check-witness", "Check a witness for a matching");
  check_cmd->add_option("instance", o.instance)->required();
  check_cmd->add_option("matching", o.matching)->required();
  check_cmd->add_option("witness", o.witness)->required();

  auto* gen = app.add_subcommand("gen", "Generate gadget instances");
  gen->require_subcommand(1);
  auto* g_cond = gen->add_subcommand("condorcet", "Three A vertices, two B vertices");
  g_cond->add_option("--variant", o.variant, "zero-b | three-one | custom");
  g_cond->add_option("--weights", o.weights, "a1,a2,a3,b1,b2 for custom");
  auto* g_forced = gen->add_subcommand("forced-edges", "Replace two forced edges by gadgets");
  g_forced->add_option("--base", o.base)->required();
  g_forced->add_option("--forced", o.forced)->required();
  auto* g_sat = gen->add_subcommand("sat", "3-SAT reduction");
  g_sat->add_option("--cnf", o.cnf)->required();
  g_sat->add_option("--c", o.c, "1 < c <= 2 (default 2)");
  g_sat->add_option("--assignment", o.assignment, "x=1,y=0,...");
  g_sat->add_option("--matching-out", o.matching_out);
  g_sat->add_option("--witness-out", o.witness_out);
  auto* g_is = gen->add_subcommand("independent-set", "Independent-set reduction with edge costs");
  g_is->add_option("--graph", o.graph, "triangle | path3 | n:<k>;u-z,...")->required();
  g_is->add_option("--c", o.c, "c > 3 (default 4)");
  g_is->add_option("--set", o.set, "Comma-separated zero-based vertices");
  g_is->add_option("--matching-out", o.matching_out);
  g_is->add_option("--witness-out", o.witness_out);
  auto* g_six = gen->add_subcommand("six-path", "Standalone six-vertex path gadget");
  g_six->add_option("--c", o.c, "A weight (default 2)");
  auto* g_app = gen->add_subcommand("appendix", "Twenty-vertex worked example");
  g_app->add_option("--c", o.c, "A weight (default 4)");
  for (auto* sub : {g_cond, g_forced, g_sat, g_is, g_six, g_app}) sub->add_option("--out", o.out, "Output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*compare_cmd) return cmd_compare(o, out);
    if (*enum_cmd) return cmd_enumerate(o, out);
    if (*check_cmd) return cmd_check_witness(o, out);
    if (*g_cond) return cmd_gen_condorcet(o, out);
    if (*g_forced) return cmd_gen_forced(o, out);
    if (*g_sat) return cmd_gen_sat(o, out);
    if (*g_is) return cmd_gen_is(o, out);
    if (*g_six) return cmd_gen_fixed("six-path", o, out);
    if (*g_app) return cmd_gen_fixed("appendix", o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::ScaleLimit) return kScaleLimit;
    if (e.code() == ErrorCode::InternalInconsistency) return kInternalError;
    return kInputError;
  }
  err << "error: no command\n";
  return kInputError;
}

}  // namespace popmatch::cli
