#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "popmatch/instance.hpp"

namespace popmatch {

// Exhaustive reference answers for small instances.

struct OracleOptions {
  std::uint64_t cap = 10'000'000;  // enumeration limit before SCALE_LIMIT
  unsigned jobs = 1;               // worker threads for popularity filtering
};

struct OracleReport {
  std::vector<Matching> popular;    // in enumeration order
  std::vector<Edge> popular_edges;  // canonical order
  std::size_t max_cardinality = 0;  // over popular matchings; 0 if none
  std::uint64_t total = 0;          // number of matchings enumerated
};

struct CostedMatching {
  Matching matching;
  Rational cost;
};

// Depth-first over canonical edges, excluding an edge before including it, so the
// empty matching comes first. Stops with false from the visitor. Throws SCALE_LIMIT
// once more than `cap` matchings would be produced. Returns the number visited.
std::uint64_t enumerate_matchings(const Instance& inst, const std::function<bool(const Matching&)>& visit,
                                  std::uint64_t cap = OracleOptions{}.cap);

std::vector<Matching> all_matchings(const Instance& inst, std::uint64_t cap = OracleOptions{}.cap);

OracleReport popular_matchings_bruteforce(const Instance& inst, const OracleOptions& opts = {});

// First popular matching in enumeration order, if any.
std::optional<Matching> popular_exists(const Instance& inst, const OracleOptions& opts = {});

// Popular matching of maximum total edge cost; ties go to the earliest enumerated.
std::optional<CostedMatching> max_cost_popular(const Instance& inst, const EdgeCosts& costs,
                                               const OracleOptions& opts = {});

Rational matching_cost(const Matching& m, const EdgeCosts& costs);

}  // namespace popmatch
