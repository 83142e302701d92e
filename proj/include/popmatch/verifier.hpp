#pragma once

#include <optional>

#include "popmatch/instance.hpp"

namespace popmatch {

struct VerifyResult {
  bool is_popular = false;
  // max over matchings M' of delta_w(M', M); never negative.
  Rational margin;
  // Present iff margin > 0.
  std::optional<Matching> counterexample;
};

struct PopularResponse {
  Rational margin;
  // Maximiser of delta_w(M', M). Among co-optimal maximisers made of edges that
  // each contribute positively, the one that includes the earliest canonical edges.
  Matching response;
};

// Exact maximum of delta_w(M', M) over all matchings M'.
Rational popularity_margin(const Instance& inst, const Matching& m);

PopularResponse most_popular_response(const Instance& inst, const Matching& m);

VerifyResult is_popular(const Instance& inst, const Matching& m);

// Unweighted house-allocation test: every A vertex is matched to f(a) or s(a),
// and every f-post is matched.
bool is_popular_house_allocation(const Instance& inst, const Matching& m);

}  // namespace popmatch
