#include "popmatch/witness.hpp"

#include "popmatch/error.hpp"
#include "popmatch/votes.hpp"

namespace popmatch {

Rational Witness::sum() const {
  Rational s;
  for (const auto& x : a_) s += x;
  for (const auto& x : b_) s += x;
  return s;
}

WitnessReport inspect_witness(const Instance& inst, const Matching& m, const Witness& y) {
  if (y.a_count() != inst.a_count() || y.b_count() != inst.b_count())
    throw Error(ErrorCode::WitnessDomainMismatch,
                "witness covers " + std::to_string(y.a_count()) + "+" + std::to_string(y.b_count()) +
                    " vertices, instance has " + std::to_string(inst.a_count()) + "+" +
                    std::to_string(inst.b_count()));
  WitnessReport r;
  r.sum = y.sum();
  for (Side s : {Side::A, Side::B}) {
    for (std::size_t i = 0; i < inst.count(s); ++i) {
      const VertexId v{s, i};
      if (y[v] < vote_loop(inst, m, v)) r.bound_violations.push_back(v);
    }
  }
  for (const Edge& e : inst.edges())
    if (y[a_vertex(e.a)] + y[b_vertex(e.b)] < vote_edge(inst, m, e)) r.conflicts.push_back(e);
  return r;
}

bool check_witness(const Instance& inst, const Matching& m, const Witness& y) {
  return inspect_witness(inst, m, y).ok();
}

std::vector<Edge> conflicting_edges(const Instance& inst, const Matching& m, const Witness& y) {
  return inspect_witness(inst, m, y).conflicts;
}

NiceValueSets NiceValueSets::for_c(const Rational& c) {
  NiceValueSets n;
  n.a_values = {-c, Rational(1) - c, Rational(2) - c, Rational(-1), Rational(0), Rational(1)};
  n.b_values = {Rational(-1), Rational(0), Rational(1), c - Rational(2), c - Rational(1), c};
  return n;
}

bool NiceValueSets::contains(Side s, const Rational& x) const {
  for (const auto& v : values(s))
    if (v == x) return true;
  return false;
}

bool is_nice(const Instance& inst, const Witness& y, const Rational& c) {
  if (y.a_count() != inst.a_count() || y.b_count() != inst.b_count())
    throw Error(ErrorCode::WitnessDomainMismatch, "witness does not match the instance");
  const NiceValueSets sets = NiceValueSets::for_c(c);
  for (Side s : {Side::A, Side::B})
    for (std::size_t i = 0; i < inst.count(s); ++i)
      if (!sets.contains(s, y[{s, i}])) return false;
  return true;
}

bool is_odd_value(const Rational& x, const Rational& c) {
  return x == -c || x == Rational(2) - c || x == Rational(-1) || x == Rational(1) ||
         x == c - Rational(2) || x == c;
}

bool is_even_value(const Rational& x, const Rational& c) {
  return x == Rational(1) - c || x == Rational(0) || x == c - Rational(1);
}

Parity parity_on_component(const Witness& y, std::span<const VertexId> component, const Rational& c) {
  bool all_odd = true, all_even = true;
  for (const VertexId& v : component) {
    all_odd = all_odd && is_odd_value(y[v], c);
    all_even = all_even && is_even_value(y[v], c);
  }
  if (all_odd && !component.empty()) return Parity::Odd;
  if (all_even) return Parity::Even;
  return Parity::Mixed;
}

bool dominates_at(const Instance& inst, std::size_t b, const Rational& y1_b,
                  std::optional<std::size_t> m1_partner, const Rational& y2_b,
                  std::optional<std::size_t> m2_partner, DominanceMode mode) {
  if (y1_b >= y2_b + Rational(2)) return true;
  if (y1_b < y2_b) return false;
  if (m1_partner == m2_partner) return mode == DominanceMode::AllowEqualPartner;
  if (!m1_partner) return false;
  return inst.prefers(b_vertex(b), *m1_partner, m2_partner);
}

bool dominates_at(const Instance& inst, const Witness& y1, const Matching& m1, const Witness& y2,
                  const Matching& m2, std::size_t b, DominanceMode mode) {
  return dominates_at(inst, b, y1[b_vertex(b)], m1.partner_of_b(b), y2[b_vertex(b)], m2.partner_of_b(b),
                      mode);
}

bool dominates(const Instance& inst, const Witness& y1, const Matching& m1, const Witness& y2,
               const Matching& m2, std::span<const VertexId> component) {
  for (const VertexId& v : component)
    if (v.side == Side::B &&
        !dominates_at(inst, y1, m1, y2, m2, v.index, DominanceMode::AllowEqualPartner))
      return false;
  return true;
}

bool weakly_dominates(const Instance& inst, const Witness& y1, const Matching& m1, const Witness& y2,
                      const Matching& m2, std::span<const VertexId> component, const Rational& c) {
  if (dominates(inst, y1, m1, y2, m2, component)) return true;
  if (parity_on_component(y2, component, c) != Parity::Even) return false;
  for (const VertexId& v : component) {
    if (v.side != Side::B) continue;
    if (!dominates_at(inst, v.index, y1[v], m1.partner_of_b(v.index), y2[v] - Rational(1),
                      m2.partner_of_b(v.index), DominanceMode::AllowEqualPartner))
      return false;
  }
  return true;
}

}  // namespace popmatch
