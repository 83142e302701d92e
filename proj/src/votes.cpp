#include "popmatch/votes.hpp"

#include "popmatch/error.hpp"

namespace popmatch {

namespace {

void require_adjacent(const Instance& inst, VertexId u, VertexId v) {
  if (u.side == v.side || v.index >= inst.count(v.side) || !inst.rank(u, v.index))
    throw Error(ErrorCode::NotAdjacent, inst.name(u) + " and the given vertex are not adjacent");
}

// +1 if v prefers `mine` to `theirs`, -1 for the reverse, 0 if equal.
int compare_partners(const Instance& inst, VertexId v, std::optional<std::size_t> mine,
                     std::optional<std::size_t> theirs) {
  if (mine == theirs) return 0;
  if (!mine) return -1;
  if (!theirs) return 1;
  return inst.prefers(v, *mine, theirs) ? 1 : -1;
}

}  // namespace

int vote_sign(const Instance& inst, VertexId u, std::optional<std::size_t> partner, std::size_t v) {
  if (partner == v) return 0;
  return inst.prefers(u, v, partner) ? 1 : -1;
}

Rational vote(const Instance& inst, const Matching& m, VertexId u, VertexId v) {
  require_adjacent(inst, u, v);
  return inst.weight(u) * Rational(vote_sign(inst, u, m.partner(u), v.index));
}

Rational vote_edge(const Instance& inst, const Matching& m, Edge e) {
  const VertexId a = a_vertex(e.a);
  const VertexId b = b_vertex(e.b);
  return vote(inst, m, a, b) + vote(inst, m, b, a);
}

Rational vote_loop(const Instance& inst, const Matching& m, VertexId v) {
  return m.partner(v) ? -inst.weight(v) : Rational(0);
}

Rational delta_w(const Instance& inst, const Matching& m, const Matching& other) {
  Rational total;
  for (Side s : {Side::A, Side::B}) {
    for (std::size_t i = 0; i < inst.count(s); ++i) {
      const VertexId v{s, i};
      const int c = compare_partners(inst, v, m.partner(v), other.partner(v));
      if (c > 0) total += inst.weight(v);
      if (c < 0) total -= inst.weight(v);
    }
  }
  return total;
}

bool set_prefers(const Instance& inst, std::span<const VertexId> x, const Matching& m,
                 const Matching& other) {
  Rational total;
  for (const VertexId& v : x) {
    if (v.index >= inst.count(v.side)) throw Error(ErrorCode::BadIndex, "vertex index out of range");
    const int c = compare_partners(inst, v, m.partner(v), other.partner(v));
    if (c > 0) total += inst.weight(v);
    if (c < 0) total -= inst.weight(v);
  }
  return total.sign() > 0;
}

}  // namespace popmatch
