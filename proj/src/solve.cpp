#include <set>

#include "popmatch/error.hpp"
#include "popmatch/solver.hpp"
#include "popmatch/votes.hpp"

namespace popmatch {

Pipeline prepare(const Instance& inst) {
  Pipeline p;
  p.c = validate_weights(inst);
  p.posts = compute_posts(inst);
  p.degree_two = build_degree_two_graph(inst, p.posts);
  p.cycles_cleaned = remove_cycle_incident_edges(inst, p.degree_two);
  p.pruned = prune_to_popular_edges(inst, p.cycles_cleaned);
  p.witness_sets = component_witness_sets(inst, p.pruned, p.posts, p.c);
  return p;
}

SolveResult solve(const Instance& inst, const SolveOptions& opts) {
  if (inst.a_count() == 0) {
    for (std::size_t b = 0; b < inst.b_count(); ++b)
      if (inst.weight(b_vertex(b)) != Rational(1))
        throw Error(ErrorCode::WeightPatternViolation, "vertex " + inst.name(b_vertex(b)) + " must weigh 1");
    if (!opts.forced.empty())
      throw Error(ErrorCode::EdgeNotInGraph, "instance without A vertices has no edges");
    SolveResult r;
    r.outcome = Outcome::Found;
    r.matching = Matching::empty(inst);
    r.witness = Witness::zeros(inst);
    return r;
  }
  return solve(inst, prepare(inst), opts);
}

namespace {

void check_edges(const Instance& inst, const std::vector<Edge>& edges, const char* what) {
  for (const Edge& e : edges)
    if (e.a >= inst.a_count() || e.b >= inst.b_count() || !inst.adjacent(e.a, e.b))
      throw Error(ErrorCode::EdgeNotInGraph, std::string(what) + " edge is not in the graph");
}

}  // namespace

SolveResult solve(const Instance& inst, const Pipeline& pipeline, const SolveOptions& opts) {
  check_edges(inst, opts.forced, "forced");
  check_edges(inst, opts.forbidden, "forbidden");
  {
    std::set<std::size_t> as, bs;
    for (const Edge& e : opts.forced)
      if (!as.insert(e.a).second || !bs.insert(e.b).second)
        throw Error(ErrorCode::ForcedNotAMatching, "forced edge " + inst.edge_name(e) + " shares an endpoint");
  }

  SolveResult result;
  const std::set<Edge> h(pipeline.pruned.edges.begin(), pipeline.pruned.edges.end());
  for (const Edge& e : opts.forced) {
    if (!h.count(e)) {
      result.reason = "forced edge " + inst.edge_name(e) + " lies in no popular matching";
      return result;
    }
  }

  const auto& comps = pipeline.pruned.components;
  const auto& sets = pipeline.witness_sets;
  std::vector<std::size_t> comp_of_a(inst.a_count()), comp_of_b(inst.b_count());
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (const VertexId& v : comps[i].vertices) (v.side == Side::A ? comp_of_a : comp_of_b)[v.index] = i;

  const std::set<Edge> forbidden(opts.forbidden.begin(), opts.forbidden.end());
  std::vector<std::vector<char>> dismissed(sets.size());
  std::vector<std::size_t> active(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& cands = sets[i].candidates;
    dismissed[i].assign(cands.size(), 0);
    for (std::size_t k = 0; k < cands.size(); ++k) {
      const std::set<Edge> m(cands[k].matching.begin(), cands[k].matching.end());
      for (const Edge& e : opts.forced)
        if (comp_of_a[e.a] == sets[i].component && !m.count(e)) dismissed[i][k] = 1;
      for (const Edge& e : m)
        if (forbidden.count(e)) dismissed[i][k] = 1;
    }
    active[i] = 0;
    while (active[i] < cands.size() && dismissed[i][active[i]]) ++active[i];
    if (active[i] == cands.size()) {
      result.reason = "forced and forbidden edges rule out every candidate of the component containing " +
                      inst.name(comps[sets[i].component].vertices.front());
      return result;
    }
  }

  Witness y = Witness::zeros(inst);
  std::vector<std::optional<std::size_t>> pa(inst.a_count()), pb(inst.b_count());
  auto install = [&](std::size_t i) {
    const Component& comp = comps[sets[i].component];
    const Candidate& cand = sets[i].candidates[active[i]];
    for (std::size_t k = 0; k < comp.vertices.size(); ++k) {
      const VertexId v = comp.vertices[k];
      y[v] = cand.values[k];
      (v.side == Side::A ? pa : pb)[v.index] = std::nullopt;
    }
    for (const Edge& e : cand.matching) {
      pa[e.a] = e.b;
      pb[e.b] = e.a;
    }
  };
  std::vector<std::size_t> set_of_comp(comps.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    set_of_comp[sets[i].component] = i;
    install(i);
  }

  while (true) {
    std::optional<Edge> conflict;
    for (const Edge& e : inst.edges()) {
      const VertexId a = a_vertex(e.a), b = b_vertex(e.b);
      const Rational vote = inst.weight(a) * Rational(vote_sign(inst, a, pa[e.a], e.b)) +
                            inst.weight(b) * Rational(vote_sign(inst, b, pb[e.b], e.a));
      if (y[a] + y[b] < vote) {
        conflict = e;
        break;
      }
    }
    if (!conflict) break;

    const std::size_t sa = set_of_comp[comp_of_a[conflict->a]];
    const std::size_t sb = set_of_comp[comp_of_b[conflict->b]];
    const bool a_even = sets[sa].candidates[active[sa]].parity == Parity::Even;
    const std::size_t target = a_even ? sb : sa;

    TraceStep step;
    step.conflict = *conflict;
    step.component = sets[target].component;
    step.dismissed = sets[target].candidates[active[target]].label;
    dismissed[target][active[target]] = 1;
    while (active[target] < dismissed[target].size() && dismissed[target][active[target]]) ++active[target];
    if (active[target] == dismissed[target].size()) {
      result.trace.push_back(step);
      result.reason = "every candidate witness of the component containing " +
                      inst.name(comps[step.component].vertices.front()) + " was dismissed";
      return result;
    }
    step.next = sets[target].candidates[active[target]].label;
    result.trace.push_back(step);
    install(target);
  }

  std::vector<Edge> edges;
  for (std::size_t a = 0; a < inst.a_count(); ++a)
    if (pa[a]) edges.push_back({a, *pa[a]});
  Matching m = Matching::from_edges(inst, std::move(edges));
  if (!check_witness(inst, m, y))
    throw Error(ErrorCode::InternalInconsistency, "assembled witness fails the dual check");
  result.outcome = Outcome::Found;
  result.matching = std::move(m);
  result.witness = std::move(y);
  return result;
}

}  // namespace popmatch
