#pragma once

#include <optional>
#include <string>
#include <vector>

#include "popmatch/instance.hpp"
#include "popmatch/posts.hpp"
#include "popmatch/witness.hpp"

namespace popmatch {

// Solver for instances where every A vertex weighs c > 3 and every B vertex weighs 1.

// Returns c. Throws WEIGHT_PATTERN_VIOLATION (naming the vertex) or C_NOT_GREATER_THAN_3.
Rational validate_weights(const Instance& inst);

enum class ComponentKind { Isolated, Edge, Path, Cycle, Tree, Other };
enum class Stage { DegreeTwo, CyclesCleaned, Pruned };

std::string to_string(ComponentKind kind);

struct Component {
  ComponentKind kind = ComponentKind::Isolated;
  // Edge/Path: in path order starting from an A end. Cycle: in cycle order
  // starting from its smallest vertex. Otherwise sorted.
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;  // canonical order
};

struct PrunedGraph {
  Stage stage = Stage::DegreeTwo;
  std::vector<Edge> edges;             // canonical order
  std::vector<Component> components;   // sorted by smallest vertex; covers every vertex
};

// Connected components of (V(inst), edges) with their shape.
std::vector<Component> find_components(const Instance& inst, const std::vector<Edge>& edges);

// Keeps only {a, f(a)} and {a, s(a)}.
PrunedGraph build_degree_two_graph(const Instance& inst, const PostMap& posts);

// For each cycle, deletes edges incident to its vertices that are not on it.
PrunedGraph remove_cycle_incident_edges(const Instance& inst, const PrunedGraph& h);

// Edges lying in some popular matching of the instance restricted to a tree component.
std::vector<Edge> tree_popular_edges(const Instance& inst, const Component& tree);

// Repeats tree and cycle pruning until nothing changes; every component of the
// result is an isolated vertex, an edge, a path or a cycle.
PrunedGraph prune_to_popular_edges(const Instance& inst, const PrunedGraph& h);

struct Candidate {
  std::string label;
  std::vector<Rational> values;  // aligned with Component::vertices
  std::vector<Edge> matching;    // canonical order, inside the component
  Parity parity = Parity::Mixed;
};

struct ComponentWitnessSet {
  std::size_t component = 0;
  // Ordered so that each candidate weakly dominates the next; the even one is last.
  std::vector<Candidate> candidates;
};

std::vector<ComponentWitnessSet> component_witness_sets(const Instance& inst, const PrunedGraph& h,
                                                        const PostMap& posts, const Rational& c);

// Everything computed before the dismissal loop.
struct Pipeline {
  Rational c;
  PostMap posts;
  PrunedGraph degree_two;
  PrunedGraph cycles_cleaned;
  PrunedGraph pruned;
  std::vector<ComponentWitnessSet> witness_sets;
};

Pipeline prepare(const Instance& inst);

enum class Outcome { Found, NoPopularMatching };

struct TraceStep {
  Edge conflict;
  std::size_t component = 0;           // index into Pipeline::pruned.components
  std::string dismissed;               // label of the dismissed candidate
  std::optional<std::string> next;     // new active label, or nullopt if exhausted
};

struct SolveOptions {
  std::vector<Edge> forced;
  std::vector<Edge> forbidden;
};

struct SolveResult {
  Outcome outcome = Outcome::NoPopularMatching;
  std::optional<Matching> matching;
  std::optional<Witness> witness;
  std::vector<TraceStep> trace;
  std::string reason;  // short explanation when no matching is returned
};

SolveResult solve(const Instance& inst, const SolveOptions& opts = {});

// Same as solve but reuses a prepared pipeline.
SolveResult solve(const Instance& inst, const Pipeline& pipeline, const SolveOptions& opts = {});

}  // namespace popmatch
