#include "popmatch/gadgets.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <set>

#include "popmatch/error.hpp"

namespace popmatch {

namespace {

// Builds an instance from 1-based preference lists.
Instance from_one_based(const std::vector<std::vector<std::size_t>>& a, const std::vector<std::vector<std::size_t>>& b,
                        const Rational& wa, const Rational& wb) {
  InstanceData d;
  for (const auto& row : a) {
    d.a_prefs.emplace_back();
    for (std::size_t x : row) d.a_prefs.back().push_back(x - 1);
  }
  for (const auto& row : b) {
    d.b_prefs.emplace_back();
    for (std::size_t x : row) d.b_prefs.back().push_back(x - 1);
  }
  d.a_weights.assign(a.size(), wa);
  d.b_weights.assign(b.size(), wb);
  return build_instance(std::move(d));
}

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Instance condorcet_instance(CondorcetVariant variant, std::vector<Rational> custom) {
  std::vector<Rational> w;
  switch (variant) {
    case CondorcetVariant::ZeroB: w = {1, 1, 1, 0, 0}; break;
    case CondorcetVariant::ThreeOne: w = {3, 3, 3, 1, 1}; break;
    case CondorcetVariant::Custom:
      if (custom.size() != 5)
        throw Error(ErrorCode::BadIndex, "custom weights need five values (a1,a2,a3,b1,b2)");
      w = std::move(custom);
      break;
  }
  InstanceData d;
  d.a_prefs = {{0, 1}, {0, 1}, {0, 1}};
  d.b_prefs = {{0, 1, 2}, {0, 1, 2}};
  d.a_weights = {w[0], w[1], w[2]};
  d.b_weights = {w[3], w[4]};
  return build_instance(std::move(d));
}

Instance six_path_gadget(const Rational& c) {
  return from_one_based({{1}, {1, 2}, {2, 3}}, {{1, 2}, {2, 3}, {3}}, c, Rational(1));
}

Instance appendix_instance(const Rational& c) {
  return from_one_based(
      {{2, 8, 1}, {2, 1}, {3, 2, 6}, {3, 4}, {5, 4}, {5, 6}, {8}, {8, 7, 10}, {9, 7, 10}, {3, 8}},
      {{2, 1}, {2, 1, 3}, {4, 3, 10}, {5, 4}, {5, 6}, {6, 3}, {8, 9}, {8, 7, 10, 1}, {9}, {8, 9}}, c,
      Rational(1));
}

// ---- Forced edges ----------------------------------------------------------

ForcedEdgeReduction forced_edges_reduce(const Instance& inst, std::vector<Edge> forced) {
  for (Side s : {Side::A, Side::B})
    for (std::size_t i = 0; i < inst.count(s); ++i)
      if (inst.weight({s, i}) != Rational(1))
        throw Error(ErrorCode::WeightPatternViolation, "vertex " + inst.name({s, i}) + " must weigh 1");
  for (const Edge& e : forced)
    if (e.a >= inst.a_count() || e.b >= inst.b_count() || !inst.adjacent(e.a, e.b))
      throw Error(ErrorCode::EdgeNotInGraph, "forced edge is not in the graph");
  {
    std::set<std::size_t> as, bs;
    for (const Edge& e : forced)
      if (!as.insert(e.a).second || !bs.insert(e.b).second)
        throw Error(ErrorCode::FNotMatching, "forced edges " + inst.edge_name(e) + " share an endpoint");
  }
  if (forced.size() != 2)
    throw Error(ErrorCode::FWrongSize, "expected 2 forced edges, got " + std::to_string(forced.size()));
  std::sort(forced.begin(), forced.end());

  InstanceData d = inst.data();
  const std::size_t na = inst.a_count(), nb = inst.b_count();
  ForcedEdgeReduction red;
  red.original = inst;
  for (std::size_t k = 0; k < forced.size(); ++k) {
    EdgeGadget g;
    g.forced = forced[k];
    const std::size_t a0 = na + 5 * k, b0 = nb + 5 * k;
    g.au1 = a0;
    g.au2 = a0 + 1;
    g.az1 = a0 + 2;
    g.az2 = a0 + 3;
    g.az3 = a0 + 4;
    g.bu1 = b0;
    g.bu2 = b0 + 1;
    g.bu3 = b0 + 2;
    g.bz1 = b0 + 3;
    g.bz2 = b0 + 4;
    red.gadgets.push_back(g);
  }
  for (const EdgeGadget& g : red.gadgets) {
    const std::size_t u = g.forced.a, z = g.forced.b;
    // u keeps the rank it gave z, now for bu1; z gives u's rank to az1.
    std::replace(d.a_prefs[u].begin(), d.a_prefs[u].end(), z, g.bu1);
    std::replace(d.b_prefs[z].begin(), d.b_prefs[z].end(), u, g.az1);
    const std::string tag = inst.name(a_vertex(u)) + inst.name(b_vertex(z));
    d.a_prefs.push_back({g.bu1, g.bu2, g.bu3});
    d.a_prefs.push_back({g.bu1, g.bu2, g.bu3});
    d.a_prefs.push_back({g.bu1, z, g.bz1, g.bz2});
    d.a_prefs.push_back({g.bz1, g.bz2});
    d.a_prefs.push_back({g.bz1, g.bz2});
    d.a_weights.insert(d.a_weights.end(), {Rational(1), Rational(2), Rational(4), Rational(4), Rational(4)});
    for (const char* n : {"au1_", "au2_", "az1_", "az2_", "az3_"}) d.a_names.push_back(n + tag);
    d.b_prefs.push_back({u, g.au1, g.au2, g.az1});
    d.b_prefs.push_back({g.au1, g.au2});
    d.b_prefs.push_back({g.au1, g.au2});
    d.b_prefs.push_back({g.az1, g.az2, g.az3});
    d.b_prefs.push_back({g.az1, g.az2, g.az3});
    d.b_weights.insert(d.b_weights.end(), {Rational(4), Rational(4), Rational(4), Rational(1), Rational(1)});
    for (const char* n : {"bu1_", "bu2_", "bu3_", "bz1_", "bz2_"}) d.b_names.push_back(n + tag);
  }
  red.reduced = build_instance(std::move(d));
  return red;
}

Matching project_pi(const ForcedEdgeReduction& red, const Matching& m) {
  std::vector<Edge> out;
  std::set<Edge> forced;
  for (const EdgeGadget& g : red.gadgets) forced.insert(g.forced);
  for (const Edge& e : m.edges())
    if (!forced.count(e)) out.push_back(e);
  for (const EdgeGadget& g : red.gadgets) {
    out.push_back({g.au2, g.bu2});
    out.push_back({g.au1, g.bu3});
    out.push_back({g.az2, g.bz2});
    out.push_back({g.az3, g.bz1});
    if (m.contains(g.forced)) {
      out.push_back({g.forced.a, g.bu1});
      out.push_back({g.az1, g.forced.b});
    } else {
      out.push_back({g.az1, g.bu1});
    }
  }
  return Matching::from_edges(red.reduced, std::move(out));
}

Matching project_rho(const ForcedEdgeReduction& red, const Matching& m) {
  const std::size_t na = red.original.a_count(), nb = red.original.b_count();
  std::vector<Edge> out;
  for (const Edge& e : m.edges())
    if (e.a < na && e.b < nb) out.push_back(e);
  for (const EdgeGadget& g : red.gadgets)
    if (m.contains({g.forced.a, g.bu1}) && m.contains({g.az1, g.forced.b})) out.push_back(g.forced);
  return Matching::from_edges(red.original, std::move(out));
}

// ---- 3-SAT -----------------------------------------------------------------

CnfFormula parse_cnf(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  CnfFormula f;
  std::map<std::string, std::size_t> index;
  static const std::regex literal_re(R"(^([!~-]?)([A-Za-z_][A-Za-z0-9_]*)$)");
  std::size_t pos = 0;
  while (pos <= s.size() && !s.empty()) {
    std::size_t amp = s.find('&', pos);
    std::string clause = s.substr(pos, amp == std::string::npos ? std::string::npos : amp - pos);
    if (clause.size() >= 2 && clause.front() == '(' && clause.back() == ')')
      clause = clause.substr(1, clause.size() - 2);
    std::vector<Literal> lits;
    std::size_t p = 0;
    while (true) {
      std::size_t bar = clause.find('|', p);
      std::string lit = clause.substr(p, bar == std::string::npos ? std::string::npos : bar - p);
      std::smatch m;
      if (!std::regex_match(lit, m, literal_re))
        throw Error(ErrorCode::ParseError, "bad literal '" + lit + "' in clause '" + clause + "'");
      auto [it, fresh] = index.emplace(m[2].str(), f.variables.size());
      if (fresh) f.variables.push_back(m[2].str());
      lits.push_back({it->second, !m[1].str().empty()});
      if (bar == std::string::npos) break;
      p = bar + 1;
    }
    if (lits.size() != 3)
      throw Error(ErrorCode::ParseError, "clause '" + clause + "' has " + std::to_string(lits.size()) +
                                             " literals, expected 3");
    f.clauses.push_back({lits[0], lits[1], lits[2]});
    if (amp == std::string::npos) break;
    pos = amp + 1;
  }
  return f;
}

bool satisfies(const CnfFormula& f, const Assignment& x) {
  if (x.size() != f.variables.size())
    throw Error(ErrorCode::AssignmentDomainMismatch, "assignment size does not match variable count");
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (const Literal& l : clause) sat = sat || (x[l.variable] != l.negated);
    if (!sat) return false;
  }
  return true;
}

Instance sat_to_instance(const CnfFormula& f, const Rational& c) {
  if (c <= Rational(1) || c > Rational(2))
    throw Error(ErrorCode::COutOfRange, "c = " + c.to_string() + " must satisfy 1 < c <= 2");
  const SatLayout L{f.variables.size()};
  const std::size_t n = 3 + 2 * f.variables.size() + 6 * f.clauses.size();
  InstanceData d;
  d.a_prefs.assign(n, {});
  d.b_prefs.assign(n, {});
  d.a_names.assign(n, "");
  d.b_names.assign(n, "");

  for (std::size_t i = 0; i < 3; ++i) {
    d.a_names[i] = "a" + std::to_string(i + 1);
    d.b_names[i] = "b" + std::to_string(i + 1);
  }
  d.a_prefs[0] = {0};
  d.a_prefs[1] = {0, 1};
  d.a_prefs[2] = {1, 2};
  d.b_prefs[0] = {0, 1};
  d.b_prefs[1] = {1, 2};
  for (std::size_t x = 0; x < f.variables.size(); ++x) d.b_prefs[2].push_back(L.literal(x, false));
  d.b_prefs[2].push_back(2);

  // b^f_x collects its clause neighbours: negative occurrences between a_x and
  // abar_x, positive ones after abar_x.
  std::vector<std::vector<std::size_t>> neg_occ(f.variables.size()), pos_occ(f.variables.size());
  for (std::size_t x = 0; x < f.variables.size(); ++x) {
    const std::string& v = f.variables[x];
    const std::size_t ax = L.literal(x, false), abar = L.literal(x, true);
    const std::size_t bt = L.literal(x, false), bf = L.literal(x, true);
    d.a_names[ax] = "a_" + v;
    d.a_names[abar] = "abar_" + v;
    d.b_names[bt] = "bt_" + v;
    d.b_names[bf] = "bf_" + v;
    d.a_prefs[ax] = {bt, bf, 2};
    d.a_prefs[abar] = {bt, bf};
    d.b_prefs[bt] = {ax, abar};
  }

  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const std::string tag = "C" + std::to_string(j + 1) + "_";
    auto A = [&](std::size_t k) { return L.clause(j, k, false); };
    auto Ah = [&](std::size_t k) { return L.clause(j, k, true); };
    for (std::size_t k = 0; k < 3; ++k) {
      d.a_names[A(k)] = tag + "a" + std::to_string(k + 1);
      d.a_names[Ah(k)] = tag + "ah" + std::to_string(k + 1);
      d.b_names[A(k)] = tag + "b" + std::to_string(k + 1);
      d.b_names[Ah(k)] = tag + "bh" + std::to_string(k + 1);
    }
    // B indices coincide with A indices under this layout.
    const std::size_t b1 = A(0), b2 = A(1), b3 = A(2), bh1 = Ah(0), bh2 = Ah(1), bh3 = Ah(2);
    d.a_prefs[Ah(0)] = {b1, b2, bh1};
    d.a_prefs[A(0)] = {b1, bh1};
    d.a_prefs[Ah(1)] = {b2, b3, bh2};
    d.a_prefs[A(1)] = {b2, bh2};
    d.a_prefs[Ah(2)] = {b3, b1, bh3};
    d.a_prefs[A(2)] = {b3, bh3};
    d.b_prefs[bh1] = {A(0), Ah(0)};
    d.b_prefs[b1] = {A(0), Ah(0), Ah(2)};
    d.b_prefs[bh2] = {A(1), Ah(1)};
    d.b_prefs[b2] = {Ah(0), A(1), Ah(1)};
    d.b_prefs[bh3] = {A(2), Ah(2)};
    d.b_prefs[b3] = {A(2), Ah(2), Ah(1)};

    for (std::size_t k = 0; k < 3; ++k) {
      const Literal& lit = f.clauses[j][k];
      const std::size_t bf = L.literal(lit.variable, true);
      if (lit.negated) {
        d.a_prefs[Ah(k)].push_back(bf);
        neg_occ[lit.variable].push_back(Ah(k));
      } else {
        auto& list = d.a_prefs[A(k)];
        list.insert(list.begin() + 1, bf);
        pos_occ[lit.variable].push_back(A(k));
      }
    }
  }
  for (std::size_t x = 0; x < f.variables.size(); ++x) {
    auto& list = d.b_prefs[L.literal(x, true)];
    list.push_back(L.literal(x, false));
    list.insert(list.end(), neg_occ[x].begin(), neg_occ[x].end());
    list.push_back(L.literal(x, true));
    list.insert(list.end(), pos_occ[x].begin(), pos_occ[x].end());
  }
  d.a_weights.assign(n, c);
  d.b_weights.assign(n, Rational(1));
  return build_instance(std::move(d));
}

namespace {

std::vector<std::size_t> satisfied_positions(const CnfFormula& f, const Assignment& x) {
  if (x.size() != f.variables.size())
    throw Error(ErrorCode::AssignmentDomainMismatch, "assignment has " + std::to_string(x.size()) +
                                                         " values for " + std::to_string(f.variables.size()) +
                                                         " variables");
  std::vector<std::size_t> k;
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    std::size_t first = 3;
    for (std::size_t i = 0; i < 3 && first == 3; ++i)
      if (x[f.clauses[j][i].variable] != f.clauses[j][i].negated) first = i;
    if (first == 3) throw Error(ErrorCode::KcUndefined, "clause " + std::to_string(j + 1) + " is unsatisfied");
    k.push_back(first);
  }
  return k;
}

}  // namespace

Matching assignment_to_matching(const CnfFormula& f, const Instance& inst, const Assignment& x) {
  const auto kc = satisfied_positions(f, x);
  const SatLayout L{f.variables.size()};
  std::vector<Edge> edges{{0, 0}, {1, 1}, {2, 2}};
  for (std::size_t v = 0; v < f.variables.size(); ++v) {
    const std::size_t plain = L.literal(v, false), bar = L.literal(v, true);
    if (x[v]) {
      edges.push_back({plain, plain});
      edges.push_back({bar, bar});
    } else {
      edges.push_back({plain, bar});
      edges.push_back({bar, plain});
    }
  }
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t a = L.clause(j, k, false), ah = L.clause(j, k, true);
      if (k == kc[j]) {
        edges.push_back({a, ah});
        edges.push_back({ah, a});
      } else {
        edges.push_back({a, a});
        edges.push_back({ah, ah});
      }
    }
  }
  return Matching::from_edges(inst, std::move(edges));
}

Witness table1_witness(const CnfFormula& f, const Instance& inst, const Assignment& x, const Rational& c) {
  const auto kc = satisfied_positions(f, x);
  const SatLayout L{f.variables.size()};
  const Rational one(1), two(2);
  Witness y = Witness::zeros(inst);
  auto set = [&](std::size_t a, const Rational& ya, std::size_t b, const Rational& yb) {
    y[a_vertex(a)] = ya;
    y[b_vertex(b)] = yb;
  };
  set(0, -c, 0, c);
  set(1, -one, 1, one);
  set(2, c - two, 2, two - c);
  for (std::size_t v = 0; v < f.variables.size(); ++v) {
    const std::size_t plain = L.literal(v, false), bar = L.literal(v, true);
    if (x[v]) {
      set(plain, -one, plain, one);
      set(bar, c - two, bar, two - c);
    } else {
      set(plain, one, plain, c);
      set(bar, -c, bar, -one);
    }
  }
  // Per satisfied position: values of (a_k, b_k, ahat_k, bhat_k) for k = 1..3.
  using Row = std::array<Rational, 4>;
  const std::array<std::array<Row, 3>, 3> table = {{
      {{{one, c, -c, -one}, {-c, c, -one, one}, {-c, c, -one, one}}},
      {{{two - c, c - two, one, -one}, {one, c, -c, -one}, {two - c, c - two, one, -one}}},
      {{{two - c, c - two, one, -one}, {-c, c, -one, one}, {one, c, -c, -one}}},
  }};
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      const Row& r = table[kc[j]][k];
      const std::size_t a = L.clause(j, k, false), ah = L.clause(j, k, true);
      y[a_vertex(a)] = r[0];
      y[b_vertex(a)] = r[1];
      y[a_vertex(ah)] = r[2];
      y[b_vertex(ah)] = r[3];
    }
  }
  return y;
}

Assignment matching_to_assignment(const CnfFormula& f, const Instance& inst, const Matching& m) {
  (void)inst;
  const SatLayout L{f.variables.size()};
  Assignment x(f.variables.size());
  for (std::size_t v = 0; v < f.variables.size(); ++v) {
    const std::size_t plain = L.literal(v, false), bar = L.literal(v, true);
    const bool is_true = m.contains({plain, plain}) && m.contains({bar, bar});
    const bool is_false = m.contains({plain, bar}) && m.contains({bar, plain});
    if (!is_true && !is_false)
      throw Error(ErrorCode::VariableGadgetUnresolved, "variable " + f.variables[v] + " has no consistent pairing");
    x[v] = is_true;
  }
  return x;
}

// ---- Independent set -------------------------------------------------------

Digraph parse_graph(std::string_view text) {
  const std::string s(text);
  if (s == "triangle") return {3, {{0, 1}, {1, 2}, {2, 0}}};
  if (s == "path3") return {3, {{0, 1}, {1, 2}}};
  static const std::regex head(R"(^n:([0-9]+);?(.*)$)");
  std::smatch m;
  if (!std::regex_match(s, m, head)) throw Error(ErrorCode::ParseError, "bad graph '" + s + "'");
  Digraph g;
  g.vertex_count = std::stoul(m[1].str());
  const std::string rest = m[2].str();
  static const std::regex arc(R"(([0-9]+)-([0-9]+))");
  for (auto it = std::sregex_iterator(rest.begin(), rest.end(), arc); it != std::sregex_iterator(); ++it) {
    const std::size_t u = std::stoul((*it)[1].str()), z = std::stoul((*it)[2].str());
    if (u >= g.vertex_count || z >= g.vertex_count || u == z)
      throw Error(ErrorCode::BadIndex, "bad arc " + (*it)[0].str());
    g.arcs.emplace_back(u, z);
  }
  return g;
}

CostedInstance is_to_instance(const Digraph& g, const Rational& c) {
  if (c <= Rational(3)) throw Error(ErrorCode::COutOfRange, "c = " + c.to_string() + " must exceed 3");
  const std::size_t n = g.vertex_count;
  for (const auto& [u, z] : g.arcs)
    if (u >= n || z >= n || u == z) throw Error(ErrorCode::BadIndex, "arc endpoint out of range");
  std::vector<std::vector<std::size_t>> in(n), out(n);
  for (const auto& [u, z] : g.arcs) {
    out[u].push_back(z);
    in[z].push_back(u);
  }
  InstanceData d;
  d.a_prefs.assign(2 * n, {});
  d.b_prefs.assign(2 * n, {});
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t p = IsLayout::plain(v), h = IsLayout::hat(v);
    const std::string id = std::to_string(v + 1);
    d.a_names.push_back("a" + id);
    d.a_names.push_back("ah" + id);
    d.b_names.push_back("b" + id);
    d.b_names.push_back("bh" + id);
    d.a_prefs[p] = {p, h};
    d.a_prefs[h] = {p, h};
    for (std::size_t z : sorted_unique(in[v])) d.a_prefs[h].push_back(IsLayout::hat(z));
    d.b_prefs[p] = {p, h};
    for (std::size_t z : sorted_unique(out[v])) d.b_prefs[h].push_back(IsLayout::hat(z));
    d.b_prefs[h].push_back(p);
    d.b_prefs[h].push_back(h);
  }
  d.a_weights.assign(2 * n, c);
  d.b_weights.assign(2 * n, Rational(1));
  CostedInstance out_inst{build_instance(std::move(d)), {}};
  for (std::size_t v = 0; v < n; ++v) out_inst.costs[{IsLayout::plain(v), IsLayout::hat(v)}] = Rational(1);
  return out_inst;
}

bool is_independent(const Digraph& g, const std::vector<std::size_t>& set) {
  const std::set<std::size_t> s(set.begin(), set.end());
  for (const auto& [u, z] : g.arcs)
    if (s.count(u) && s.count(z)) return false;
  return true;
}

Matching independent_set_to_matching(const Digraph& g, const Instance& inst, const std::vector<std::size_t>& set) {
  const std::set<std::size_t> s(set.begin(), set.end());
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    const std::size_t p = IsLayout::plain(v), h = IsLayout::hat(v);
    if (s.count(v)) {
      edges.push_back({p, h});
      edges.push_back({h, p});
    } else {
      edges.push_back({p, p});
      edges.push_back({h, h});
    }
  }
  return Matching::from_edges(inst, std::move(edges));
}

Witness table2_witness(const Digraph& g, const Instance& inst, const std::vector<std::size_t>& set,
                       const Rational& c) {
  const std::set<std::size_t> s(set.begin(), set.end());
  Witness y = Witness::zeros(inst);
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    const std::size_t p = IsLayout::plain(v), h = IsLayout::hat(v);
    const bool in = s.count(v) > 0;
    y[a_vertex(p)] = in ? Rational(1) : -c;
    y[b_vertex(p)] = c;
    y[a_vertex(h)] = in ? -c : Rational(-1);
    y[b_vertex(h)] = in ? Rational(-1) : Rational(1);
  }
  return y;
}

std::vector<std::size_t> matching_to_independent_set(const Digraph& g, const Matching& m) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count; ++v)
    if (m.contains({IsLayout::plain(v), IsLayout::hat(v)})) out.push_back(v);
  return out;
}

}  // namespace popmatch
