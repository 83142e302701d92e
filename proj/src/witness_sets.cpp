#include <algorithm>
#include <map>
#include <numeric>

#include "popmatch/error.hpp"
#include "popmatch/solver.hpp"
#include "popmatch/votes.hpp"

namespace popmatch {

namespace {

Edge edge_between(VertexId u, VertexId v) {
  return u.side == Side::A ? Edge{u.index, v.index} : Edge{v.index, u.index};
}

Parity parity_of(const std::vector<Rational>& values, const Rational& c) {
  bool odd = true, even = true;
  for (const Rational& x : values) {
    odd = odd && is_odd_value(x, c);
    even = even && is_even_value(x, c);
  }
  if (odd && !values.empty()) return Parity::Odd;
  if (even) return Parity::Even;
  return Parity::Mixed;
}

std::optional<std::size_t> partner_in(const std::vector<Edge>& matching, VertexId v) {
  for (const Edge& e : matching) {
    if (v.side == Side::A && e.a == v.index) return e.b;
    if (v.side == Side::B && e.b == v.index) return e.a;
  }
  return std::nullopt;
}

// Propagates tight constraints along consecutive vertices (closing the loop for
// cycles) from a seed value at vertices[0]. Returns nullopt if the values leave
// the nice sets or violate a constraint.
std::optional<std::vector<Rational>> propagate(const Instance& inst, const Component& comp,
                                               const std::vector<Edge>& matching, const Rational& seed,
                                               const NiceValueSets& nice, bool closed) {
  const auto& vs = comp.vertices;
  const std::size_t n = vs.size();
  std::vector<std::optional<std::size_t>> partner(n);
  for (std::size_t i = 0; i < n; ++i) partner[i] = partner_in(matching, vs[i]);

  auto tight_value = [&](std::size_t i, std::size_t j, const Rational& yi) {
    const Edge e = edge_between(vs[i], vs[j]);
    if (std::find(matching.begin(), matching.end(), e) != matching.end()) return -yi;
    const Rational vote = inst.weight(vs[i]) * Rational(vote_sign(inst, vs[i], partner[i], vs[j].index)) +
                          inst.weight(vs[j]) * Rational(vote_sign(inst, vs[j], partner[j], vs[i].index));
    return vote - yi;
  };

  std::vector<Rational> y(n);
  y[0] = seed;
  for (std::size_t i = 0; i + 1 < n; ++i) y[i + 1] = tight_value(i, i + 1, y[i]);
  if (closed && tight_value(n - 1, 0, y[n - 1]) != y[0]) return std::nullopt;

  for (std::size_t i = 0; i < n; ++i) {
    if (!nice.contains(vs[i].side, y[i])) return std::nullopt;
    if (!partner[i] && y[i] != Rational(0)) return std::nullopt;
    if (partner[i] && y[i] < -inst.weight(vs[i])) return std::nullopt;
  }
  return y;
}

// Non-strict dominance of candidate p over q on the component's B vertices,
// with q's B values lowered by `shift`.
bool candidate_dominates(const Instance& inst, const Component& comp, const Candidate& p, const Candidate& q,
                         const Rational& shift) {
  for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
    const VertexId v = comp.vertices[i];
    if (v.side != Side::B) continue;
    if (!dominates_at(inst, v.index, p.values[i], partner_in(p.matching, v), q.values[i] - shift,
                      partner_in(q.matching, v), DominanceMode::AllowEqualPartner))
      return false;
  }
  return true;
}

bool candidate_weakly_dominates(const Instance& inst, const Component& comp, const Candidate& p,
                                const Candidate& q) {
  if (candidate_dominates(inst, comp, p, q, Rational(0))) return true;
  return q.parity == Parity::Even && candidate_dominates(inst, comp, p, q, Rational(1));
}

[[noreturn]] void inconsistent(const Instance& inst, const Component& comp, const std::string& what) {
  throw Error(ErrorCode::InternalInconsistency,
              to_string(comp.kind) + " component containing " + inst.name(comp.vertices.front()) + ": " + what);
}

// Odd candidates in a dominance chain followed by the even ones.
std::vector<Candidate> order_candidates(const Instance& inst, const Component& comp,
                                        std::vector<Candidate> found) {
  std::vector<Candidate> odd, even;
  for (auto& cand : found) {
    if (cand.parity == Parity::Odd) odd.push_back(std::move(cand));
    else if (cand.parity == Parity::Even) even.push_back(std::move(cand));
    else inconsistent(inst, comp, "candidate witness mixes odd and even values");
  }
  if (even.size() > 1) inconsistent(inst, comp, "more than one even candidate witness");

  std::vector<std::size_t> perm(odd.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool chain = true;
    for (std::size_t i = 0; chain && i + 1 < perm.size(); ++i)
      chain = candidate_weakly_dominates(inst, comp, odd[perm[i]], odd[perm[i + 1]]);
    if (chain && !even.empty() && !perm.empty())
      chain = candidate_weakly_dominates(inst, comp, odd[perm.back()], even.front());
    if (chain) {
      std::vector<Candidate> out;
      for (std::size_t i : perm) out.push_back(odd[i]);
      for (auto& e : even) out.push_back(e);
      return out;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  inconsistent(inst, comp, "candidate witnesses admit no dominance order");
}

Candidate make_candidate(std::string label, std::vector<Rational> values, std::vector<Edge> matching,
                         const Rational& c) {
  Candidate cand;
  cand.label = std::move(label);
  cand.parity = parity_of(values, c);
  cand.values = std::move(values);
  std::sort(matching.begin(), matching.end());
  cand.matching = std::move(matching);
  return cand;
}

std::vector<Candidate> edge_candidates(const Component& comp, const PostMap& posts, const Rational& c) {
  const Edge e = comp.edges.front();
  const bool f_case = posts.f[e.a] == e.b;
  // comp.vertices is {a, b}.
  const Rational one(1), two(2), zero(0);
  std::vector<std::pair<Rational, Rational>> pairs =
      f_case ? std::vector<std::pair<Rational, Rational>>{{-c, c}, {two - c, c - two}, {one - c, c - one}}
             : std::vector<std::pair<Rational, Rational>>{{-one, one}, {one, -one}, {zero, zero}};
  const char* labels[] = {"e1", "e2", "e_even"};
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < 3; ++i)
    out.push_back(make_candidate(labels[i], {pairs[i].first, pairs[i].second}, {e}, c));
  return out;
}

std::vector<Candidate> chain_candidates(const Instance& inst, const Component& comp, const Rational& c,
                                        bool closed) {
  const auto& vs = comp.vertices;
  const std::size_t n = vs.size();
  if (n % 2 != 0) inconsistent(inst, comp, "odd number of vertices");
  std::array<std::vector<Edge>, 2> matchings;
  for (std::size_t i = 0; i + 1 < n + (closed ? 1 : 0); ++i)
    matchings[i % 2].push_back(edge_between(vs[i], vs[(i + 1) % n]));

  const NiceValueSets nice = NiceValueSets::for_c(c);
  std::vector<Candidate> found;
  for (std::size_t k = 0; k < 2; ++k) {
    std::vector<Edge> sorted = matchings[k];
    std::sort(sorted.begin(), sorted.end());
    for (const Rational& seed : nice.values(vs[0].side)) {
      auto y = propagate(inst, comp, sorted, seed, nice, closed);
      if (!y) continue;
      Candidate cand = make_candidate("", std::move(*y), sorted, c);
      const bool dup = std::any_of(found.begin(), found.end(), [&](const Candidate& o) {
        return o.values == cand.values && o.matching == cand.matching;
      });
      if (!dup) found.push_back(std::move(cand));
    }
  }
  return found;
}

}  // namespace

std::vector<ComponentWitnessSet> component_witness_sets(const Instance& inst, const PrunedGraph& h,
                                                        const PostMap& posts, const Rational& c) {
  std::vector<ComponentWitnessSet> out;
  for (std::size_t i = 0; i < h.components.size(); ++i) {
    const Component& comp = h.components[i];
    ComponentWitnessSet set;
    set.component = i;
    switch (comp.kind) {
      case ComponentKind::Isolated:
        set.candidates.push_back(make_candidate("zero", {Rational(0)}, {}, c));
        break;
      case ComponentKind::Edge:
        set.candidates = edge_candidates(comp, posts, c);
        break;
      case ComponentKind::Path: {
        auto found = order_candidates(inst, comp, chain_candidates(inst, comp, c, false));
        if (found.size() != 2 || found[1].parity != Parity::Even)
          inconsistent(inst, comp, "expected one odd and one even candidate, found " + std::to_string(found.size()));
        found[0].label = "p_odd";
        found[1].label = "p_even";
        set.candidates = std::move(found);
        break;
      }
      case ComponentKind::Cycle: {
        auto found = order_candidates(inst, comp, chain_candidates(inst, comp, c, true));
        if (found.size() == 4 && found[3].parity == Parity::Even) {
          const char* labels[] = {"c1", "c0", "c3", "c_even"};
          for (std::size_t k = 0; k < 4; ++k) found[k].label = labels[k];
        } else if (found.size() == 2 && found[1].parity == Parity::Odd) {
          found[0].label = "c1";
          found[1].label = "c3";
        } else {
          inconsistent(inst, comp, "unexpected candidate count " + std::to_string(found.size()));
        }
        set.candidates = std::move(found);
        break;
      }
      default:
        inconsistent(inst, comp, "component shape has no witness candidates");
    }
    out.push_back(std::move(set));
  }
  return out;
}

}  // namespace popmatch
