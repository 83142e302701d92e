#include <gtest/gtest.h>

#include <random>
#include <set>

#include "popmatch/error.hpp"
#include "popmatch/gadgets.hpp"
#include "popmatch/oracle.hpp"
#include "popmatch/posts.hpp"
#include "popmatch/verifier.hpp"
#include "popmatch/votes.hpp"
#include "popmatch/witness.hpp"
#include "support.hpp"

namespace popmatch {
namespace {

ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::ParseError;
}

std::vector<Assignment> all_assignments(std::size_t n) {
  std::vector<Assignment> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Assignment x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i) & 1u;
    out.push_back(x);
  }
  return out;
}

TEST(CondorcetGadget, NoPopularMatchingInEitherVariant) {
  for (CondorcetVariant v : {CondorcetVariant::ZeroB, CondorcetVariant::ThreeOne}) {
    const OracleReport r = popular_matchings_bruteforce(condorcet_instance(v));
    EXPECT_EQ(r.total, 13u);
    EXPECT_TRUE(r.popular.empty());
  }
  EXPECT_EQ(error_of([] { (void)condorcet_instance(CondorcetVariant::Custom, {Rational(1)}); }),
            ErrorCode::BadIndex);
}

TEST(SixPath, ThresholdBetweenTwoAndFour) {
  EXPECT_TRUE(popular_exists(six_path_gadget(Rational(2))));
  EXPECT_FALSE(popular_exists(six_path_gadget(Rational(4))));
  const PostMap p = compute_posts(six_path_gadget(Rational(4)));
  EXPECT_EQ(p.f[2], 1u);  // f(a3) = b2
  EXPECT_FALSE(p.s[1]);   // so a2 has no s-post
}

Instance random_unit(std::mt19937& rng) {
  for (;;) {
    const Instance inst = testing::random_instance(rng, 3, 3, 0.8, Rational(1), Rational(1));
    if (inst.a_count() < 2 || inst.b_count() < 2) continue;
    return inst;
  }
}

std::optional<std::vector<Edge>> two_disjoint_edges(std::mt19937& rng, const Instance& inst) {
  std::vector<Edge> e = inst.edges();
  std::shuffle(e.begin(), e.end(), rng);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (e[i].a != e[j].a && e[i].b != e[j].b) return std::vector<Edge>{e[i], e[j]};
  return std::nullopt;
}

TEST(ForcedEdges, ReductionShapeAndProjections) {
  std::mt19937 rng(12);
  int done = 0;
  while (done < 15) {
    const Instance inst = random_unit(rng);
    const auto f = two_disjoint_edges(rng, inst);
    if (!f) continue;
    const ForcedEdgeReduction red = forced_edges_reduce(inst, *f);
    EXPECT_EQ(red.reduced.a_count(), inst.a_count() + 10);
    EXPECT_EQ(red.reduced.b_count(), inst.b_count() + 10);
    EXPECT_EQ(red.reduced.edges().size(), inst.edges().size() + 2 * 14);
    const auto all = all_matchings(inst);
    for (const Matching& m : all) EXPECT_EQ(project_rho(red, project_pi(red, m)), m);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int k = 0; k < 20; ++k) {
      const Matching& m1 = all[pick(rng)];
      const Matching& m2 = all[pick(rng)];
      EXPECT_EQ(delta_w(inst, m1, m2), delta_w(red.reduced, project_pi(red, m1), project_pi(red, m2)));
    }
    ++done;
  }
}

TEST(ForcedEdges, Errors) {
  InstanceData d;
  d.a_prefs = {{0, 1}, {0, 1}};
  d.b_prefs = {{0, 1}, {0, 1}};
  d.a_weights = {1, 1};
  d.b_weights = {1, 1};
  const Instance inst = build_instance(d);
  EXPECT_EQ(error_of([&] { (void)forced_edges_reduce(inst, {{0, 0}}); }), ErrorCode::FWrongSize);
  EXPECT_EQ(error_of([&] { (void)forced_edges_reduce(inst, {{0, 0}, {0, 1}}); }), ErrorCode::FNotMatching);
  EXPECT_EQ(error_of([&] { (void)forced_edges_reduce(inst, {{0, 0}, {1, 5}}); }), ErrorCode::EdgeNotInGraph);
  const Instance heavy = inst.with_weights({Rational(2), Rational(1)}, {Rational(1), Rational(1)});
  EXPECT_EQ(error_of([&] { (void)forced_edges_reduce(heavy, {{0, 0}, {1, 1}}); }),
            ErrorCode::WeightPatternViolation);
}

TEST(Sat, ParsingAndSize) {
  const CnfFormula f = parse_cnf("(x|y|z)&(!x|y|w)");
  ASSERT_EQ(f.variables.size(), 4u);
  ASSERT_EQ(f.clauses.size(), 2u);
  EXPECT_TRUE(f.clauses[1][0].negated);
  const Instance inst = sat_to_instance(f, Rational(2));
  EXPECT_EQ(inst.a_count(), 3u + 2 * 4 + 6 * 2);
  EXPECT_EQ(inst.b_count(), inst.a_count());
  EXPECT_EQ(sat_to_instance(parse_cnf("(x|y|z)"), Rational(2)).vertex_count(), 30u);
  EXPECT_EQ(error_of([] { (void)parse_cnf("(x|y)"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { (void)parse_cnf("(x|y|z)&"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([&] { (void)sat_to_instance(f, Rational(3)); }), ErrorCode::COutOfRange);
  EXPECT_EQ(error_of([&] { (void)sat_to_instance(f, Rational(1)); }), ErrorCode::COutOfRange);
}

TEST(Sat, TableWitnessCertifiesEverySatisfyingAssignment) {
  for (const char* text : {"(x|y|z)", "(!x|y|!z)&(x|!y|w)", "(x|x|x)&(!y|!y|z)"}) {
    const CnfFormula f = parse_cnf(text);
    for (const Rational c : {Rational(2), Rational(3, 2)}) {
      const Instance inst = sat_to_instance(f, c);
      for (const Assignment& x : all_assignments(f.variables.size())) {
        if (!satisfies(f, x)) {
          EXPECT_EQ(error_of([&] { (void)table1_witness(f, inst, x, c); }), ErrorCode::KcUndefined);
          continue;
        }
        const Matching m = assignment_to_matching(f, inst, x);
        EXPECT_TRUE(check_witness(inst, m, table1_witness(f, inst, x, c))) << text;
        EXPECT_EQ(matching_to_assignment(f, inst, m), x);
      }
    }
  }
}

TEST(Sat, AssignmentErrors) {
  const CnfFormula f = parse_cnf("(x|y|z)");
  const Instance inst = sat_to_instance(f, Rational(2));
  EXPECT_EQ(error_of([&] { (void)assignment_to_matching(f, inst, {true}); }), ErrorCode::AssignmentDomainMismatch);
  EXPECT_EQ(error_of([&] { (void)matching_to_assignment(f, inst, Matching::empty(inst)); }),
            ErrorCode::VariableGadgetUnresolved);
}

// Every popular matching of a small reduction decodes to a satisfying assignment.
TEST(Sat, PopularMatchingsDecodeToSatisfyingAssignments) {
  const CnfFormula f = parse_cnf("(x|x|x)");
  const Instance inst = sat_to_instance(f, Rational(2));
  const OracleReport r = popular_matchings_bruteforce(inst);
  ASSERT_FALSE(r.popular.empty());
  for (const Matching& m : r.popular) EXPECT_TRUE(satisfies(f, matching_to_assignment(f, inst, m)));
}

TEST(IndependentSet, TriangleConstruction) {
  const Digraph g = parse_graph("triangle");
  const CostedInstance ci = is_to_instance(g, Rational(4));
  EXPECT_EQ(ci.instance.vertex_count(), 12u);
  EXPECT_EQ(ci.costs.size(), 3u);
  for (const auto& [e, w] : ci.costs) {
    EXPECT_EQ(w, Rational(1));
    EXPECT_EQ(e.b, e.a + 1);  // {a_v, bhat_v}
  }
  EXPECT_EQ(error_of([&] { (void)is_to_instance(g, Rational(3)); }), ErrorCode::COutOfRange);
  EXPECT_EQ(error_of([] { (void)parse_graph("square"); }), ErrorCode::ParseError);
  const Digraph h = parse_graph("n:4;0-1,2-3");
  EXPECT_EQ(h.vertex_count, 4u);
  EXPECT_EQ(h.arcs.size(), 2u);
}

TEST(IndependentSet, TableWitnessAndRoundTrip) {
  for (const char* text : {"triangle", "path3", "n:4;0-1,1-2,2-3,3-0", "n:4;0-1,0-2,0-3"}) {
    const Digraph g = parse_graph(text);
    const CostedInstance ci = is_to_instance(g, Rational(4));
    for (unsigned mask = 0; mask < (1u << g.vertex_count); ++mask) {
      std::vector<std::size_t> set;
      for (std::size_t v = 0; v < g.vertex_count; ++v)
        if ((mask >> v) & 1u) set.push_back(v);
      if (!is_independent(g, set)) continue;
      const Matching m = independent_set_to_matching(g, ci.instance, set);
      EXPECT_TRUE(check_witness(ci.instance, m, table2_witness(g, ci.instance, set, Rational(4)))) << text;
      EXPECT_EQ(matching_to_independent_set(g, m), set);
      EXPECT_EQ(matching_cost(m, ci.costs), Rational(static_cast<long>(set.size())));
    }
  }
}

TEST(IndependentSet, IsIndependent) {
  const Digraph g = parse_graph("path3");
  EXPECT_TRUE(is_independent(g, {0, 2}));
  EXPECT_FALSE(is_independent(g, {0, 1}));
  EXPECT_TRUE(is_independent(g, {}));
}

}  // namespace
}  // namespace popmatch
