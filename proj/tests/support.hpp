#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "popmatch/instance.hpp"
#include "popmatch/oracle.hpp"
#include "popmatch/votes.hpp"

namespace popmatch::testing {

// Random bipartite instance with shuffled strict lists. Each edge is present
// with probability `density`; weights are uniform per side.
inline Instance random_instance(std::mt19937& rng, std::size_t max_a, std::size_t max_b, double density,
                                const Rational& wa, const Rational& wb) {
  std::uniform_int_distribution<std::size_t> na_dist(1, max_a), nb_dist(1, max_b);
  std::bernoulli_distribution keep(density);
  const std::size_t na = na_dist(rng), nb = nb_dist(rng);
  InstanceData d;
  d.a_prefs.assign(na, {});
  d.b_prefs.assign(nb, {});
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b)
      if (keep(rng)) {
        d.a_prefs[a].push_back(b);
        d.b_prefs[b].push_back(a);
      }
  for (auto& l : d.a_prefs) std::shuffle(l.begin(), l.end(), rng);
  for (auto& l : d.b_prefs) std::shuffle(l.begin(), l.end(), rng);
  d.a_weights.assign(na, wa);
  d.b_weights.assign(nb, wb);
  return build_instance(std::move(d));
}

// Same, with the density itself drawn from [0.3, 1.0].
inline Instance random_instance(std::mt19937& rng, std::size_t max_a, std::size_t max_b, const Rational& wa,
                                const Rational& wb) {
  std::uniform_real_distribution<double> dens(0.3, 1.0);
  return random_instance(rng, max_a, max_b, dens(rng), wa, wb);
}

// Random integer weights in [0, max_weight] on every vertex.
inline Instance with_random_weights(std::mt19937& rng, const Instance& inst, int max_weight) {
  std::uniform_int_distribution<int> w(0, max_weight);
  std::vector<Rational> wa, wb;
  for (std::size_t i = 0; i < inst.a_count(); ++i) wa.emplace_back(w(rng));
  for (std::size_t i = 0; i < inst.b_count(); ++i) wb.emplace_back(w(rng));
  return inst.with_weights(wa, wb);
}

// max over all matchings M' of delta_w(M', M), by enumeration.
inline Rational brute_margin(const Instance& inst, const Matching& m, const std::vector<Matching>& all) {
  Rational best = delta_w(inst, m, m);
  for (const Matching& other : all) best = std::max(best, delta_w(inst, other, m));
  return best;
}

// The criterion-3 style suite: |A|,|B| in [1,5], c cycling through 7/2, 4, 10.
inline std::vector<Instance> c_suite(unsigned seed, std::size_t count) {
  std::mt19937 rng(seed);
  const Rational cs[] = {Rational(7, 2), Rational(4), Rational(10)};
  std::vector<Instance> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_instance(rng, 5, 5, cs[i % 3], Rational(1)));
  return out;
}

}  // namespace popmatch::testing
