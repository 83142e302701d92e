#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "popmatch/instance.hpp"
#include "popmatch/witness.hpp"

namespace popmatch {

// ---- Small fixed instances -------------------------------------------------

enum class CondorcetVariant { ZeroB, ThreeOne, Custom };

// a1,a2,a3 each rank b1 over b2; b1 and b2 rank a1 > a2 > a3.
// ZeroB weighs (1,1,1,0,0), ThreeOne (3,3,3,1,1); Custom takes five weights
// ordered a1,a2,a3,b1,b2.
Instance condorcet_instance(CondorcetVariant variant, std::vector<Rational> custom = {});

// Path a1-b1-a2-b2-a3-b3 on its own (b3 only lists a3); A weighs c, B weighs 1.
Instance six_path_gadget(const Rational& c);

// Twenty-vertex worked example with two cycles, a path, an edge and two
// isolated vertices once pruned. A weighs c, B weighs 1.
Instance appendix_instance(const Rational& c);

// ---- Forced edges ----------------------------------------------------------

// Indices (in the reduced instance) of one edge gadget.
struct EdgeGadget {
  Edge forced;  // {u, z} in the original instance
  std::size_t au1, au2, az1, az2, az3;  // A side
  std::size_t bu1, bu2, bu3, bz1, bz2;  // B side
};

struct ForcedEdgeReduction {
  Instance original;
  Instance reduced;
  std::vector<EdgeGadget> gadgets;
};

// Replaces each of the two forced edges of a unit-weight instance by a weighted
// gadget. Throws F_NOT_MATCHING, F_WRONG_SIZE, EDGE_NOT_IN_GRAPH or WEIGHT_PATTERN_VIOLATION.
ForcedEdgeReduction forced_edges_reduce(const Instance& inst, std::vector<Edge> forced);

// Original matching -> reduced matching.
Matching project_pi(const ForcedEdgeReduction& red, const Matching& m);
// Reduced matching -> original matching.
Matching project_rho(const ForcedEdgeReduction& red, const Matching& m);

// ---- 3-SAT -----------------------------------------------------------------

struct Literal {
  std::size_t variable = 0;
  bool negated = false;
};

struct CnfFormula {
  std::vector<std::string> variables;
  std::vector<std::array<Literal, 3>> clauses;
};

// Parses "(x|y|z)&(!x|y|w)"; every clause must have exactly three literals.
CnfFormula parse_cnf(std::string_view text);

using Assignment = std::vector<bool>;

bool satisfies(const CnfFormula& f, const Assignment& x);

// Builds the reduction instance for 1 < c <= 2 (else C_OUT_OF_RANGE).
Instance sat_to_instance(const CnfFormula& f, const Rational& c);

// Throws ASSIGNMENT_DOMAIN_MISMATCH or K_C_UNDEFINED.
Matching assignment_to_matching(const CnfFormula& f, const Instance& inst, const Assignment& x);
Witness table1_witness(const CnfFormula& f, const Instance& inst, const Assignment& x, const Rational& c);
// Throws VARIABLE_GADGET_UNRESOLVED.
Assignment matching_to_assignment(const CnfFormula& f, const Instance& inst, const Matching& m);

// Index layout of the reduction instance (identical on both sides).
struct SatLayout {
  std::size_t variable_count = 0;
  static constexpr std::size_t path(std::size_t i) { return i; }  // i in 0..2
  std::size_t literal(std::size_t x, bool bar) const { return 3 + 2 * x + (bar ? 1 : 0); }
  // Clause vertex k (0..2); `hat` selects the hatted copy.
  std::size_t clause(std::size_t j, std::size_t k, bool hat) const {
    return 3 + 2 * variable_count + 6 * j + (hat ? 3 : 0) + k;
  }
};

// ---- Independent set -------------------------------------------------------

struct Digraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;  // (u, z) means u -> z
};

// "triangle", "path3", or "n:<count>;u-z,u-z,..." with zero-based vertices.
Digraph parse_graph(std::string_view text);

struct CostedInstance {
  Instance instance;
  EdgeCosts costs;
};

// Requires c > 3 (else C_OUT_OF_RANGE). Edge {a_v, bhat_v} costs 1, all others 0.
CostedInstance is_to_instance(const Digraph& g, const Rational& c);

struct IsLayout {
  static constexpr std::size_t plain(std::size_t v) { return 2 * v; }
  static constexpr std::size_t hat(std::size_t v) { return 2 * v + 1; }
};

Matching independent_set_to_matching(const Digraph& g, const Instance& inst, const std::vector<std::size_t>& set);
Witness table2_witness(const Digraph& g, const Instance& inst, const std::vector<std::size_t>& set,
                       const Rational& c);
std::vector<std::size_t> matching_to_independent_set(const Digraph& g, const Matching& m);

bool is_independent(const Digraph& g, const std::vector<std::size_t>& set);

}  // namespace popmatch
