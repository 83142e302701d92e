#pragma once

#include <optional>
#include <span>

#include "popmatch/instance.hpp"

namespace popmatch {

// Sign of u's vote for neighbour v when u's partner is `partner`:
// 0 if partner == v, +1 if u is unmatched or prefers v, -1 otherwise.
int vote_sign(const Instance& inst, VertexId u, std::optional<std::size_t> partner, std::size_t v);

// Weighted vote of u for v with respect to M. Throws NOT_ADJACENT.
Rational vote(const Instance& inst, const Matching& m, VertexId u, VertexId v);

// vote_u(v) + vote_v(u) for an edge.
Rational vote_edge(const Instance& inst, const Matching& m, Edge e);

// Vote on the loop {v,v}: -w(v) if v is matched, else 0.
Rational vote_loop(const Instance& inst, const Matching& m, VertexId v);

// Weighted difference: sum over vertices preferring M minus those preferring other.
Rational delta_w(const Instance& inst, const Matching& m, const Matching& other);

// True iff the vertices in X have strictly positive total weight preferring M over other.
bool set_prefers(const Instance& inst, std::span<const VertexId> x, const Matching& m,
                 const Matching& other);

}  // namespace popmatch
