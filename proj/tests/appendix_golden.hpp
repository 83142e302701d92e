#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "popmatch/instance.hpp"

// Golden data for the twenty-vertex worked example, transcribed by hand from
// its published figures and value table (independent of the solver).
namespace popmatch::golden {

using NamePair = std::pair<std::string, std::string>;

// Edges that survive all three pruning stages.
inline const std::vector<NamePair> kPrunedEdges = {
    {"a1", "b1"}, {"a1", "b2"}, {"a2", "b1"}, {"a2", "b2"}, {"a3", "b3"}, {"a3", "b6"},
    {"a4", "b3"}, {"a4", "b4"}, {"a5", "b4"}, {"a5", "b5"}, {"a6", "b5"}, {"a6", "b6"},
    {"a7", "b8"}, {"a8", "b7"}, {"a8", "b8"}, {"a9", "b9"}};
// Removed by tree pruning.
inline const NamePair kTreePruned = {"a9", "b7"};
// Removed as the only edge touching a cycle from outside.
inline const NamePair kCycleIncident = {"a10", "b3"};

inline std::set<Edge> edge_set(const Instance& inst, const std::vector<NamePair>& pairs) {
  std::set<Edge> out;
  for (const auto& [a, b] : pairs) out.insert({inst.find(a)->index, inst.find(b)->index});
  return out;
}

struct Stages {
  std::set<Edge> degree_two, cycles_cleaned, pruned;
};

inline Stages stages(const Instance& inst) {
  Stages s;
  s.pruned = edge_set(inst, kPrunedEdges);
  s.cycles_cleaned = s.pruned;
  s.cycles_cleaned.merge(edge_set(inst, {kTreePruned}));
  s.degree_two = s.cycles_cleaned;
  s.degree_two.merge(edge_set(inst, {kCycleIncident}));
  return s;
}

using Row = std::map<std::string, Rational>;

struct TableRow {
  std::string anchor;  // a vertex of the component
  std::string label;
  Row values;
};

// Every candidate row, as a function of c.
inline std::vector<TableRow> table(const Rational& c) {
  const Rational one(1), two(2), zero(0);
  return {
      {"a1", "c1", {{"a2", -c}, {"a1", -one}, {"b2", c}, {"b1", one}}},
      {"a1", "c0", {{"a2", one}, {"a1", -c}, {"b2", c}, {"b1", -one}}},
      {"a1", "c3", {{"a2", two - c}, {"a1", one}, {"b2", c - two}, {"b1", -one}}},
      {"a1", "c_even", {{"a2", one - c}, {"a1", zero}, {"b2", c - one}, {"b1", zero}}},
      {"a3", "c1", {{"a4", -c}, {"b4", -one}, {"a3", -one}, {"b3", c}, {"a6", -c}, {"b6", one}, {"a5", one}, {"b5", c}}},
      {"a3", "c3", {{"a4", one}, {"b4", -one}, {"a3", -c}, {"b3", c}, {"a6", one}, {"b6", -one}, {"a5", two - c}, {"b5", c - two}}},
      {"a8", "p_odd", {{"a8", one}, {"b8", c}, {"a7", -c}, {"b7", -one}}},
      {"a8", "p_even", {{"a8", one - c}, {"b8", c - one}, {"a7", zero}, {"b7", zero}}},
      {"a9", "e1", {{"a9", -c}, {"b9", c}}},
      {"a9", "e2", {{"a9", two - c}, {"b9", c - two}}},
      {"a9", "e_even", {{"a9", one - c}, {"b9", c - one}}},
      {"a10", "zero", {{"a10", zero}}},
      {"b10", "zero", {{"b10", zero}}},
  };
}

// Edges the published final matching is stated to contain.
inline const std::vector<NamePair> kFinalMatchingCore = {{"a2", "b1"}, {"a1", "b2"}, {"a8", "b8"}, {"a9", "b9"}};

}  // namespace popmatch::golden
