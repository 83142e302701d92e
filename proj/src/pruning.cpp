#include <algorithm>
#include <map>
#include <set>

#include "popmatch/error.hpp"
#include "popmatch/solver.hpp"
#include "popmatch/verifier.hpp"
#include "popmatch/votes.hpp"

namespace popmatch {

namespace {

std::size_t flat(const Instance& inst, VertexId v) {
  return v.side == Side::A ? v.index : inst.a_count() + v.index;
}

VertexId unflat(const Instance& inst, std::size_t k) {
  return k < inst.a_count() ? a_vertex(k) : b_vertex(k - inst.a_count());
}

std::vector<std::vector<std::size_t>> adjacency(const Instance& inst, const std::vector<Edge>& edges) {
  std::vector<std::vector<std::size_t>> adj(inst.vertex_count());
  for (const Edge& e : edges) {
    const std::size_t a = flat(inst, a_vertex(e.a)), b = flat(inst, b_vertex(e.b));
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

Edge edge_between(VertexId u, VertexId v) {
  return u.side == Side::A ? Edge{u.index, v.index} : Edge{v.index, u.index};
}

// Walks a path or cycle from `start`, always taking the smallest unvisited neighbour.
std::vector<VertexId> walk(const Instance& inst, const std::vector<std::vector<std::size_t>>& adj,
                           std::size_t start, std::size_t length) {
  std::vector<VertexId> order;
  std::set<std::size_t> seen;
  std::size_t cur = start;
  while (order.size() < length) {
    order.push_back(unflat(inst, cur));
    seen.insert(cur);
    std::size_t next = SIZE_MAX;
    for (std::size_t n : adj[cur])
      if (!seen.count(n)) {
        next = n;
        break;
      }
    if (next == SIZE_MAX) break;
    cur = next;
  }
  return order;
}

// Sub-instance on a component, keeping only the component's edges.
struct LocalInstance {
  Instance inst;
  std::map<VertexId, std::size_t> to_local;
  std::vector<std::size_t> a_global, b_global;
};

LocalInstance make_local(const Instance& inst, const Component& comp) {
  LocalInstance li;
  std::vector<VertexId> sorted = comp.vertices;
  std::sort(sorted.begin(), sorted.end());
  for (const VertexId& v : sorted) {
    auto& list = v.side == Side::A ? li.a_global : li.b_global;
    li.to_local[v] = list.size();
    list.push_back(v.index);
  }
  const std::set<Edge> edges(comp.edges.begin(), comp.edges.end());
  InstanceData d;
  for (Side s : {Side::A, Side::B}) {
    const auto& globals = s == Side::A ? li.a_global : li.b_global;
    auto& prefs = s == Side::A ? d.a_prefs : d.b_prefs;
    auto& weights = s == Side::A ? d.a_weights : d.b_weights;
    auto& names = s == Side::A ? d.a_names : d.b_names;
    for (std::size_t g : globals) {
      const VertexId v{s, g};
      std::vector<std::size_t> list;
      for (std::size_t o : inst.prefs(v)) {
        const VertexId w{other(s), o};
        if (edges.count(edge_between(v, w))) list.push_back(li.to_local.at(w));
      }
      prefs.push_back(std::move(list));
      weights.push_back(inst.weight(v));
      names.push_back(inst.name(v));
    }
  }
  li.inst = build_instance(std::move(d));
  return li;
}

bool locally_popular(const Instance& inst, const Component& comp, const std::vector<Edge>& matching) {
  const LocalInstance li = make_local(inst, comp);
  std::vector<Edge> local;
  for (const Edge& e : matching)
    local.push_back({li.to_local.at(a_vertex(e.a)), li.to_local.at(b_vertex(e.b))});
  return popularity_margin(li.inst, Matching::from_edges(li.inst, local)).sign() <= 0;
}

// The two alternating perfect matchings of a cycle given in cycle order.
std::array<std::vector<Edge>, 2> alternating_matchings(const Component& cycle) {
  std::array<std::vector<Edge>, 2> out;
  const auto& vs = cycle.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i)
    out[i % 2].push_back(edge_between(vs[i], vs[(i + 1) % vs.size()]));
  for (auto& m : out) std::sort(m.begin(), m.end());
  return out;
}

PrunedGraph make_graph(const Instance& inst, Stage stage, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  PrunedGraph g;
  g.stage = stage;
  g.components = find_components(inst, edges);
  g.edges = std::move(edges);
  return g;
}

}  // namespace

std::string to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Isolated: return "ISOLATED";
    case ComponentKind::Edge: return "EDGE";
    case ComponentKind::Path: return "PATH";
    case ComponentKind::Cycle: return "CYCLE";
    case ComponentKind::Tree: return "TREE";
    case ComponentKind::Other: return "OTHER";
  }
  return "OTHER";
}

Rational validate_weights(const Instance& inst) {
  if (inst.a_count() == 0)
    throw Error(ErrorCode::WeightPatternViolation, "no A vertices, so c is undefined");
  const Rational c = inst.weight(a_vertex(0));
  for (std::size_t a = 0; a < inst.a_count(); ++a)
    if (inst.weight(a_vertex(a)) != c)
      throw Error(ErrorCode::WeightPatternViolation,
                  "vertex " + inst.name(a_vertex(a)) + " has weight " + inst.weight(a_vertex(a)).to_string() +
                      " but " + inst.name(a_vertex(0)) + " has " + c.to_string());
  for (std::size_t b = 0; b < inst.b_count(); ++b)
    if (inst.weight(b_vertex(b)) != Rational(1))
      throw Error(ErrorCode::WeightPatternViolation,
                  "vertex " + inst.name(b_vertex(b)) + " has weight " + inst.weight(b_vertex(b)).to_string() +
                      ", expected 1");
  if (c <= Rational(3)) throw Error(ErrorCode::CNotGreaterThan3, "c = " + c.to_string());
  return c;
}

std::vector<Component> find_components(const Instance& inst, const std::vector<Edge>& edges) {
  const auto adj = adjacency(inst, edges);
  const std::size_t n = inst.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<Component> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> members{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t nb : adj[members[i]])
        if (!seen[nb]) {
          seen[nb] = 1;
          members.push_back(nb);
        }
    std::sort(members.begin(), members.end());

    Component comp;
    std::size_t degree_sum = 0, max_degree = 0;
    for (std::size_t v : members) {
      degree_sum += adj[v].size();
      max_degree = std::max(max_degree, adj[v].size());
      const VertexId id = unflat(inst, v);
      if (id.side == Side::A)
        for (std::size_t nb : adj[v]) comp.edges.push_back(edge_between(id, unflat(inst, nb)));
    }
    std::sort(comp.edges.begin(), comp.edges.end());
    const std::size_t nv = members.size(), ne = degree_sum / 2;

    if (nv == 1) {
      comp.kind = ComponentKind::Isolated;
    } else if (ne + 1 == nv && max_degree <= 2) {
      comp.kind = nv == 2 ? ComponentKind::Edge : ComponentKind::Path;
    } else if (ne + 1 == nv) {
      comp.kind = ComponentKind::Tree;
    } else if (ne == nv && max_degree == 2) {
      comp.kind = ComponentKind::Cycle;
    } else {
      comp.kind = ComponentKind::Other;
    }

    if (comp.kind == ComponentKind::Edge || comp.kind == ComponentKind::Path) {
      std::vector<std::size_t> ends;
      for (std::size_t v : members)
        if (adj[v].size() == 1) ends.push_back(v);
      // Prefer an A end; ends are sorted so A ends come first.
      comp.vertices = walk(inst, adj, ends.front(), nv);
    } else if (comp.kind == ComponentKind::Cycle) {
      comp.vertices = walk(inst, adj, members.front(), nv);
    } else {
      for (std::size_t v : members) comp.vertices.push_back(unflat(inst, v));
    }
    out.push_back(std::move(comp));
  }
  return out;
}

PrunedGraph build_degree_two_graph(const Instance& inst, const PostMap& posts) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < inst.a_count(); ++a) {
    if (posts.f[a]) edges.push_back({a, *posts.f[a]});
    if (posts.s[a]) edges.push_back({a, *posts.s[a]});
  }
  return make_graph(inst, Stage::DegreeTwo, std::move(edges));
}

PrunedGraph remove_cycle_incident_edges(const Instance& inst, const PrunedGraph& h) {
  std::set<Edge> edges(h.edges.begin(), h.edges.end());
  while (true) {
    const std::vector<Edge> current(edges.begin(), edges.end());
    const auto comps = find_components(inst, current);
    const auto adj = adjacency(inst, current);
    bool changed = false;
    for (const Component& comp : comps) {
      if (comp.edges.size() < comp.vertices.size() || comp.kind == ComponentKind::Cycle) continue;
      // Strip leaves to reach the 2-core, then walk it until a vertex repeats.
      std::map<std::size_t, std::size_t> degree;
      for (const VertexId& v : comp.vertices) degree[flat(inst, v)] = adj[flat(inst, v)].size();
      bool stripped = true;
      while (stripped) {
        stripped = false;
        for (auto& [v, d] : degree) {
          if (d != 1) continue;
          d = 0;
          for (std::size_t nb : adj[v])
            if (degree[nb] > 0) --degree[nb];
          stripped = true;
        }
      }
      std::size_t start = SIZE_MAX;
      for (const auto& [v, d] : degree)
        if (d >= 2) {
          start = v;
          break;
        }
      if (start == SIZE_MAX) throw Error(ErrorCode::InternalInconsistency, "cyclic component without a core");
      std::vector<std::size_t> path{start};
      std::map<std::size_t, std::size_t> position{{start, 0}};
      std::size_t prev = SIZE_MAX, cur = start;
      std::vector<std::size_t> cycle;
      while (cycle.empty()) {
        std::size_t next = SIZE_MAX;
        for (std::size_t nb : adj[cur])
          if (nb != prev && degree[nb] >= 2) {
            next = nb;
            break;
          }
        if (auto it = position.find(next); it != position.end()) {
          cycle.assign(path.begin() + static_cast<std::ptrdiff_t>(it->second), path.end());
          break;
        }
        position[next] = path.size();
        path.push_back(next);
        prev = cur;
        cur = next;
      }
      std::set<Edge> cycle_edges;
      for (std::size_t i = 0; i < cycle.size(); ++i)
        cycle_edges.insert(
            edge_between(unflat(inst, cycle[i]), unflat(inst, cycle[(i + 1) % cycle.size()])));
      for (std::size_t v : cycle) {
        for (std::size_t nb : adj[v]) {
          const Edge e = edge_between(unflat(inst, v), unflat(inst, nb));
          if (!cycle_edges.count(e) && edges.erase(e)) changed = true;
        }
      }
      if (changed) break;
    }
    if (!changed) break;
  }
  return make_graph(inst, Stage::CyclesCleaned, std::vector<Edge>(edges.begin(), edges.end()));
}

std::vector<Edge> tree_popular_edges(const Instance& inst, const Component& tree) {
  const std::size_t n = tree.vertices.size();
  if (n <= 1) return {};
  if (tree.edges.size() + 1 != n)
    throw Error(ErrorCode::InternalInconsistency, "component handed to the tree routine is not a tree");

  // Candidate y-values shared by both sides; lower bounds and the unmatched
  // condition are enforced per state.
  const Rational c = inst.weight(tree.vertices.front().side == Side::A ? tree.vertices.front()
                                                                       : a_vertex(tree.edges.front().a));
  const std::vector<Rational> xs = {-c, Rational(1) - c, Rational(2) - c, Rational(-1), Rational(0),
                                    Rational(1), c - Rational(2), c - Rational(1), c};
  const std::size_t nx = xs.size();
  auto neg_index = [&](std::size_t xi) { return nx - 1 - xi; };

  std::map<VertexId, std::size_t> local;
  std::vector<VertexId> verts = tree.vertices;
  std::sort(verts.begin(), verts.end());
  for (std::size_t i = 0; i < n; ++i) local[verts[i]] = i;

  // incident[v] = list of (neighbour, edge index); state 0 is the empty option.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> incident(n);
  for (std::size_t k = 0; k < tree.edges.size(); ++k) {
    const std::size_t a = local.at(a_vertex(tree.edges[k].a)), b = local.at(b_vertex(tree.edges[k].b));
    incident[a].emplace_back(b, k);
    incident[b].emplace_back(a, k);
  }

  std::vector<std::size_t> order{0}, parent(n, SIZE_MAX);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& [nb, k] : incident[order[i]])
      if (!seen[nb]) {
        seen[nb] = 1;
        parent[nb] = order[i];
        order.push_back(nb);
      }

  using EdgeSet = std::vector<char>;
  // table[v][opt * nx + xi]; opt 0 = unmatched, opt j = incident[v][j-1].
  std::vector<std::vector<std::optional<EdgeSet>>> table(n);
  auto partner_of = [&](std::size_t v, std::size_t opt) -> std::optional<std::size_t> {
    if (opt == 0) return std::nullopt;
    return verts[incident[v][opt - 1].first].index;
  };
  auto option_for_edge = [&](std::size_t v, std::size_t k) {
    for (std::size_t j = 0; j < incident[v].size(); ++j)
      if (incident[v][j].second == k) return j + 1;
    return std::size_t{0};
  };

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t v = *it;
    const VertexId vid = verts[v];
    const std::size_t options = incident[v].size() + 1;
    table[v].assign(options * nx, std::nullopt);
    for (std::size_t opt = 0; opt < options; ++opt) {
      const auto pv = partner_of(v, opt);
      for (std::size_t xi = 0; xi < nx; ++xi) {
        const Rational& x = xs[xi];
        if (opt == 0 ? x != Rational(0) : x < -inst.weight(vid)) continue;
        EdgeSet acc(tree.edges.size(), 0);
        if (opt != 0) acc[incident[v][opt - 1].second] = 1;
        bool feasible = true;
        for (const auto& [child, k] : incident[v]) {
          if (child == parent[v]) continue;
          const std::size_t child_edge_opt = option_for_edge(child, k);
          if (opt != 0 && incident[v][opt - 1].second == k) {
            const auto& f = table[child][child_edge_opt * nx + neg_index(xi)];
            if (!f) {
              feasible = false;
              break;
            }
            for (std::size_t q = 0; q < acc.size(); ++q) acc[q] |= (*f)[q];
            continue;
          }
          const VertexId cid = verts[child];
          const Rational vote_v = inst.weight(vid) * Rational(vote_sign(inst, vid, pv, cid.index));
          bool any = false;
          const std::size_t child_options = incident[child].size() + 1;
          for (std::size_t copt = 0; copt < child_options; ++copt) {
            if (copt == child_edge_opt) continue;
            const Rational vote_c =
                inst.weight(cid) * Rational(vote_sign(inst, cid, partner_of(child, copt), vid.index));
            for (std::size_t cxi = 0; cxi < nx; ++cxi) {
              const auto& f = table[child][copt * nx + cxi];
              if (!f || vote_v + vote_c > x + xs[cxi]) continue;
              any = true;
              for (std::size_t q = 0; q < acc.size(); ++q) acc[q] |= (*f)[q];
            }
          }
          if (!any) {
            feasible = false;
            break;
          }
        }
        if (feasible) table[v][opt * nx + xi] = std::move(acc);
      }
    }
  }

  EdgeSet popular(tree.edges.size(), 0);
  for (const auto& f : table[0])
    if (f)
      for (std::size_t q = 0; q < popular.size(); ++q) popular[q] |= (*f)[q];
  std::vector<Edge> out;
  for (std::size_t k = 0; k < tree.edges.size(); ++k)
    if (popular[k]) out.push_back(tree.edges[k]);
  return out;
}

PrunedGraph prune_to_popular_edges(const Instance& inst, const PrunedGraph& h) {
  std::vector<Edge> edges = h.edges;
  while (true) {
    std::vector<Edge> kept;
    for (const Component& comp : find_components(inst, edges)) {
      switch (comp.kind) {
        case ComponentKind::Isolated:
          break;
        case ComponentKind::Cycle:
          for (const auto& m : alternating_matchings(comp))
            if (locally_popular(inst, comp, m)) kept.insert(kept.end(), m.begin(), m.end());
          break;
        case ComponentKind::Edge:
        case ComponentKind::Path:
        case ComponentKind::Tree: {
          const auto t = tree_popular_edges(inst, comp);
          kept.insert(kept.end(), t.begin(), t.end());
          break;
        }
        case ComponentKind::Other:
          throw Error(ErrorCode::InternalInconsistency,
                      "component containing " + inst.name(comp.vertices.front()) +
                          " is neither a tree nor a cycle");
      }
    }
    std::sort(kept.begin(), kept.end());
    if (kept == edges) break;
    edges = std::move(kept);
  }
  PrunedGraph out = make_graph(inst, Stage::Pruned, std::move(edges));
  for (const Component& comp : out.components)
    if (comp.kind == ComponentKind::Tree || comp.kind == ComponentKind::Other)
      throw Error(ErrorCode::InternalInconsistency,
                  "pruned component containing " + inst.name(comp.vertices.front()) + " has a vertex of degree > 2");
  return out;
}

}  // namespace popmatch
