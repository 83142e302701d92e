#include <gtest/gtest.h>

#include <random>

#include "popmatch/error.hpp"
#include "popmatch/gadgets.hpp"
#include "popmatch/oracle.hpp"
#include "popmatch/solver.hpp"
#include "popmatch/verifier.hpp"
#include "popmatch/votes.hpp"
#include "popmatch/witness.hpp"
#include "support.hpp"

namespace popmatch {
namespace {

// The four-cycle a1,b1,a2,b2 of the worked example as a standalone instance.
struct FourCycle {
  Instance inst;
  Rational c{4};
  FourCycle() {
    InstanceData d;
    d.a_prefs = {{1, 0}, {1, 0}};  // a1: b2 > b1, a2: b2 > b1
    d.b_prefs = {{1, 0}, {1, 0}};  // b1: a2 > a1, b2: a2 > a1
    d.a_weights = {c, c};
    d.b_weights = {1, 1};
    inst = build_instance(d);
  }
  Witness values(Rational a1, Rational b1, Rational a2, Rational b2) const {
    Witness y = Witness::zeros(inst);
    y[a_vertex(0)] = a1;
    y[b_vertex(0)] = b1;
    y[a_vertex(1)] = a2;
    y[b_vertex(1)] = b2;
    return y;
  }
};

TEST(Witness, StandaloneCycleCandidatePasses) {
  FourCycle f;
  const Rational c = f.c;
  const Matching m = Matching::from_edges(f.inst, {{1, 1}, {0, 0}});
  const Witness y = f.values(Rational(-1), Rational(1), -c, c);
  EXPECT_TRUE(check_witness(f.inst, m, y));
  EXPECT_TRUE(is_nice(f.inst, y, c));
  EXPECT_TRUE(is_popular(f.inst, m).is_popular);
}

TEST(Witness, BumpedValueIsRejected) {
  FourCycle f;
  const Matching m = Matching::from_edges(f.inst, {{1, 1}, {0, 0}});
  Witness y = f.values(Rational(-1), Rational(1), -f.c, f.c);
  y[b_vertex(0)] -= Rational(1);
  const WitnessReport r = inspect_witness(f.inst, m, y);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.sum, Rational(-1));
  Witness z = f.values(Rational(-1), Rational(1), -f.c, f.c);
  z[a_vertex(0)] -= Rational(1);
  z[b_vertex(0)] += Rational(1);
  const auto conflicts = conflicting_edges(f.inst, m, z);
  ASSERT_EQ(conflicts.size(), 1u);
  EXPECT_EQ(conflicts.front(), (Edge{0, 1}));
}

TEST(Witness, UnmatchedVertexMustNotGoNegative) {
  InstanceData d;
  d.a_prefs = {{0}, {}};
  d.b_prefs = {{0}};
  d.a_weights = {1, 1};
  d.b_weights = {1};
  const Instance inst = build_instance(d);
  const Matching m = Matching::from_edges(inst, {{0, 0}});
  Witness y = Witness::zeros(inst);
  y[a_vertex(1)] = Rational(-1);
  y[a_vertex(0)] = Rational(1);
  const WitnessReport r = inspect_witness(inst, m, y);
  ASSERT_EQ(r.bound_violations.size(), 1u);
  EXPECT_EQ(r.bound_violations.front(), a_vertex(1));
}

TEST(Witness, DomainMismatchIsReported) {
  FourCycle f;
  try {
    (void)check_witness(f.inst, Matching::empty(f.inst), Witness(1, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WitnessDomainMismatch);
  }
}

TEST(NiceValues, SetsAndParity) {
  const Rational c(7, 2);
  const NiceValueSets s = NiceValueSets::for_c(c);
  EXPECT_TRUE(s.contains(Side::A, Rational(-7, 2)));
  EXPECT_TRUE(s.contains(Side::A, Rational(-5, 2)));
  EXPECT_FALSE(s.contains(Side::A, Rational(5, 2)));
  EXPECT_TRUE(s.contains(Side::B, Rational(5, 2)));
  EXPECT_FALSE(s.contains(Side::B, Rational(-7, 2)));
  for (const Rational& x : s.a_values) EXPECT_NE(is_odd_value(x, c), is_even_value(x, c));
  for (const Rational& x : s.b_values) EXPECT_NE(is_odd_value(x, c), is_even_value(x, c));
  EXPECT_TRUE(is_even_value(Rational(0), c));
  EXPECT_TRUE(is_odd_value(c - Rational(2), c));
}

TEST(Dominance, ExamplesFromTheFourCycle) {
  FourCycle f;
  const Rational c = f.c;
  const Matching m1 = Matching::from_edges(f.inst, {{1, 1}, {0, 0}});
  const Matching m0 = Matching::from_edges(f.inst, {{1, 0}, {0, 1}});
  const Witness y1 = f.values(Rational(-1), Rational(1), -c, c);
  const Witness y0 = f.values(-c, Rational(-1), Rational(1), c);
  const Witness y3 = f.values(Rational(1), Rational(-1), Rational(2) - c, c - Rational(2));
  const Witness ye = f.values(Rational(0), Rational(0), Rational(1) - c, c - Rational(1));
  const std::vector<VertexId> comp = {a_vertex(0), b_vertex(0), a_vertex(1), b_vertex(1)};

  EXPECT_TRUE(dominates_at(f.inst, y1, m1, y3, m1, 1));  // c versus c - 2
  EXPECT_FALSE(dominates_at(f.inst, y1, m1, y1, m1, 1));  // strict form needs a preference
  EXPECT_TRUE(dominates_at(f.inst, y1, m1, y1, m1, 1, DominanceMode::AllowEqualPartner));
  EXPECT_TRUE(dominates(f.inst, y1, m1, y0, m0, comp));
  EXPECT_TRUE(dominates(f.inst, y0, m0, y3, m1, comp));
  EXPECT_FALSE(dominates(f.inst, y3, m1, ye, m1, comp));
  EXPECT_TRUE(weakly_dominates(f.inst, y3, m1, ye, m1, comp, c));
  EXPECT_EQ(parity_on_component(ye, comp, c), Parity::Even);
  EXPECT_EQ(parity_on_component(y0, comp, c), Parity::Odd);
}

// Every solver witness is a valid dual certificate and satisfies
// complementary slackness: matched edges tight, unmatched vertices at 0.
TEST(Witness, ComplementarySlacknessOnSolverOutput) {
  int checked = 0;
  for (const Instance& inst : testing::c_suite(404, 120)) {
    const SolveResult r = solve(inst);
    if (r.outcome != Outcome::Found) continue;
    const Matching& m = *r.matching;
    const Witness& y = *r.witness;
    ASSERT_TRUE(check_witness(inst, m, y));
    for (const Edge& e : m.edges()) EXPECT_EQ(y[a_vertex(e.a)] + y[b_vertex(e.b)], Rational(0));
    for (Side s : {Side::A, Side::B})
      for (std::size_t i = 0; i < inst.count(s); ++i)
        if (!m.partner(VertexId{s, i})) EXPECT_EQ(y[(VertexId{s, i})], Rational(0));
    EXPECT_TRUE(is_nice(inst, y, inst.weight(a_vertex(0))));
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

// A matching with a valid witness is popular (weak duality), checked on
// witnesses obtained from the solver and then perturbed.
TEST(Witness, ValidWitnessImpliesPopular) {
  std::mt19937 rng(8);
  for (const Instance& inst : testing::c_suite(99, 60)) {
    const SolveResult r = solve(inst);
    if (r.outcome != Outcome::Found) continue;
    EXPECT_TRUE(is_popular(inst, *r.matching).is_popular);
    Witness y = *r.witness;
    std::uniform_int_distribution<std::size_t> pick(0, inst.a_count() - 1);
    y[a_vertex(pick(rng))] += Rational(1);
    EXPECT_FALSE(check_witness(inst, *r.matching, y));  // sum is now 1
  }
}

}  // namespace
}  // namespace popmatch
