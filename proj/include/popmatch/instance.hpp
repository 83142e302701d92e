#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "popmatch/rational.hpp"

namespace popmatch {

enum class Side : std::uint8_t { A, B };

constexpr Side other(Side s) { return s == Side::A ? Side::B : Side::A; }

// A vertex is a side plus a zero-based index within that side.
// The derived ordering (all of A before all of B) is the canonical vertex order.
struct VertexId {
  Side side = Side::A;
  std::size_t index = 0;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

constexpr VertexId a_vertex(std::size_t i) { return {Side::A, i}; }
constexpr VertexId b_vertex(std::size_t i) { return {Side::B, i}; }

// Undirected edge stored as (A index, B index); the derived ordering is canonical.
struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Raw description handed to build_instance. Preference lists are best first and
// hold indices into the opposite side. Names are optional; defaults are a1.., b1..
struct InstanceData {
  std::vector<std::vector<std::size_t>> a_prefs;
  std::vector<std::vector<std::size_t>> b_prefs;
  std::vector<Rational> a_weights;
  std::vector<Rational> b_weights;
  std::vector<std::string> a_names;
  std::vector<std::string> b_names;
};

class Instance {
 public:
  Instance() = default;

  std::size_t a_count() const { return a_prefs_.size(); }
  std::size_t b_count() const { return b_prefs_.size(); }
  std::size_t count(Side s) const { return s == Side::A ? a_count() : b_count(); }
  std::size_t vertex_count() const { return a_count() + b_count(); }

  std::span<const std::size_t> prefs(VertexId v) const;
  const Rational& weight(VertexId v) const;
  const std::string& name(VertexId v) const;
  std::optional<VertexId> find(std::string_view name) const;

  // Zero-based position of `other` in v's list, or nullopt if not adjacent.
  std::optional<std::size_t> rank(VertexId v, std::size_t other) const;
  bool adjacent(std::size_t a, std::size_t b) const { return rank(a_vertex(a), b).has_value(); }

  // True iff v strictly prefers neighbour x to y, where nullopt means unmatched.
  bool prefers(VertexId v, std::size_t x, std::optional<std::size_t> y) const;

  // All edges in canonical order.
  const std::vector<Edge>& edges() const { return edges_; }
  std::string edge_name(Edge e) const;

  // Same graph and names with new weights (validated).
  Instance with_weights(std::vector<Rational> a_weights, std::vector<Rational> b_weights) const;

  InstanceData data() const;

  friend Instance build_instance(InstanceData data);

 private:
  std::vector<std::vector<std::size_t>> a_prefs_;
  std::vector<std::vector<std::size_t>> b_prefs_;
  // Per vertex: (neighbour, rank) sorted by neighbour.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> a_rank_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> b_rank_;
  std::vector<Rational> a_weights_;
  std::vector<Rational> b_weights_;
  std::vector<std::string> a_names_;
  std::vector<std::string> b_names_;
  std::unordered_map<std::string, VertexId> by_name_;
  std::vector<Edge> edges_;
};

// Validates symmetry, duplicates, indices and weights. Throws Error.
Instance build_instance(InstanceData data);

// Matching over an instance. Partners are nullopt for unmatched vertices.
class Matching {
 public:
  Matching() = default;

  // Validates that every edge exists and that edges are pairwise disjoint.
  static Matching from_edges(const Instance& inst, std::vector<Edge> edges);
  static Matching empty(const Instance& inst) { return from_edges(inst, {}); }

  std::optional<std::size_t> partner_of_a(std::size_t a) const { return a_partner_.at(a); }
  std::optional<std::size_t> partner_of_b(std::size_t b) const { return b_partner_.at(b); }
  std::optional<std::size_t> partner(VertexId v) const {
    return v.side == Side::A ? partner_of_a(v.index) : partner_of_b(v.index);
  }
  bool contains(Edge e) const { return a_partner_.at(e.a) == e.b; }

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

  friend bool operator==(const Matching& l, const Matching& r) { return l.edges_ == r.edges_; }
  friend auto operator<=>(const Matching& l, const Matching& r) { return l.edges_ <=> r.edges_; }

 private:
  std::vector<Edge> edges_;  // canonical order
  std::vector<std::optional<std::size_t>> a_partner_;
  std::vector<std::optional<std::size_t>> b_partner_;
};

// Optional per-edge cost used by the costed variant; absent edges cost 0.
using EdgeCosts = std::map<Edge, Rational>;

std::string describe(const Instance& inst, const Matching& m);

}  // namespace popmatch
