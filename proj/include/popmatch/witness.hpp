#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "popmatch/instance.hpp"

namespace popmatch {

// Vertex-indexed rational vector (a dual certificate for popularity).
class Witness {
 public:
  Witness() = default;
  Witness(std::size_t a_count, std::size_t b_count) : a_(a_count), b_(b_count) {}
  static Witness zeros(const Instance& inst) { return Witness(inst.a_count(), inst.b_count()); }

  Rational& operator[](VertexId v) { return v.side == Side::A ? a_.at(v.index) : b_.at(v.index); }
  const Rational& operator[](VertexId v) const {
    return v.side == Side::A ? a_.at(v.index) : b_.at(v.index);
  }
  std::size_t a_count() const { return a_.size(); }
  std::size_t b_count() const { return b_.size(); }
  Rational sum() const;

  friend bool operator==(const Witness&, const Witness&) = default;

 private:
  std::vector<Rational> a_;
  std::vector<Rational> b_;
};

// Detailed outcome of a witness check.
struct WitnessReport {
  Rational sum;
  std::vector<Edge> conflicts;             // y_a + y_b < vote_M(e)
  std::vector<VertexId> bound_violations;  // y_v below its loop bound
  bool ok() const { return sum.sign() == 0 && conflicts.empty() && bound_violations.empty(); }
};

// Throws WITNESS_DOMAIN_MISMATCH if y does not cover exactly the instance's vertices.
WitnessReport inspect_witness(const Instance& inst, const Matching& m, const Witness& y);
bool check_witness(const Instance& inst, const Matching& m, const Witness& y);
std::vector<Edge> conflicting_edges(const Instance& inst, const Matching& m, const Witness& y);

// The value sets that a nice witness may use for weights c on A and 1 on B.
struct NiceValueSets {
  std::array<Rational, 6> a_values;  // {-c, 1-c, 2-c, -1, 0, 1}
  std::array<Rational, 6> b_values;  // {-1, 0, 1, c-2, c-1, c}
  static NiceValueSets for_c(const Rational& c);
  bool contains(Side s, const Rational& x) const;
  std::span<const Rational> values(Side s) const {
    return s == Side::A ? std::span<const Rational>(a_values) : std::span<const Rational>(b_values);
  }
};

bool is_nice(const Instance& inst, const Witness& y, const Rational& c);

enum class Parity { Odd, Even, Mixed };

// Odd values are {-c, 2-c, -1, 1, c-2, c}; even values are {1-c, 0, c-1}.
bool is_odd_value(const Rational& x, const Rational& c);
bool is_even_value(const Rational& x, const Rational& c);
Parity parity_on_component(const Witness& y, std::span<const VertexId> component, const Rational& c);

// How a tie in y-values is broken when comparing two witnesses at a B vertex.
enum class DominanceMode {
  // y1 >= y2 + 2, or y1 >= y2 and b strictly prefers its M1 partner.
  StrictPreference,
  // As above, but equal partners also count (b does not prefer its M2 partner).
  AllowEqualPartner,
};

// Primitive form on values and partners at a single B vertex b.
bool dominates_at(const Instance& inst, std::size_t b, const Rational& y1_b,
                  std::optional<std::size_t> m1_partner, const Rational& y2_b,
                  std::optional<std::size_t> m2_partner,
                  DominanceMode mode = DominanceMode::StrictPreference);

bool dominates_at(const Instance& inst, const Witness& y1, const Matching& m1, const Witness& y2,
                  const Matching& m2, std::size_t b, DominanceMode mode = DominanceMode::StrictPreference);

// (y1,M1) dominates (y2,M2) on a component: dominance at every B vertex of it,
// with equal partners allowed.
bool dominates(const Instance& inst, const Witness& y1, const Matching& m1, const Witness& y2,
               const Matching& m2, std::span<const VertexId> component);

// Dominance, or y2 is even on the component and y1 dominates y2 - 1.
bool weakly_dominates(const Instance& inst, const Witness& y1, const Matching& m1, const Witness& y2,
                      const Matching& m2, std::span<const VertexId> component, const Rational& c);

}  // namespace popmatch
