#include "popmatch/verifier.hpp"

#include <cstdint>
#include <numeric>

#include "assignment.hpp"
#include "popmatch/posts.hpp"
#include "popmatch/votes.hpp"

namespace popmatch {

namespace {

// delta_w(M', M) = sum over e in M' of gain(e) - W(M), where
// gain({a,b}) = vote_M({a,b}) + w(a)[a matched in M] + w(b)[b matched in M]
// and W(M) is the total weight of vertices matched in M. Maximising over M'
// is therefore a maximum-weight bipartite matching on the gains.
struct GainTable {
  std::vector<Edge> positive;       // edges with gain > 0, canonical order
  std::vector<Rational> gain;       // aligned with `positive`
  Rational matched_weight;
};

GainTable build_gains(const Instance& inst, const Matching& m) {
  GainTable t;
  for (Side s : {Side::A, Side::B})
    for (std::size_t i = 0; i < inst.count(s); ++i)
      if (m.partner({s, i})) t.matched_weight += inst.weight({s, i});
  for (const Edge& e : inst.edges()) {
    Rational g = vote_edge(inst, m, e);
    if (m.partner_of_a(e.a)) g += inst.weight(a_vertex(e.a));
    if (m.partner_of_b(e.b)) g += inst.weight(b_vertex(e.b));
    if (g.sign() > 0) {
      t.positive.push_back(e);
      t.gain.push_back(std::move(g));
    }
  }
  return t;
}

// Max-weight matching over a subset of positive-gain edges, with numbers of type T.
template <typename T>
class MaxWeight {
 public:
  MaxWeight(std::size_t na, std::size_t nb, const std::vector<Edge>& edges, std::vector<T> gains)
      : na_(na), nb_(nb), edges_(edges), gains_(std::move(gains)) {}

  // Optimum when rows/cols flagged in the masks are unavailable.
  T optimum(const std::vector<char>& a_blocked, const std::vector<char>& b_blocked) const {
    std::vector<std::size_t> row_of(na_, SIZE_MAX), col_of(nb_, SIZE_MAX);
    std::size_t rows = 0, cols = 0;
    for (std::size_t i = 0; i < na_; ++i)
      if (!a_blocked[i]) row_of[i] = rows++;
    for (std::size_t j = 0; j < nb_; ++j)
      if (!b_blocked[j]) col_of[j] = cols++;
    const std::size_t n = std::max(rows, cols);
    if (n == 0) return T{};
    std::vector<std::vector<T>> cost(n, std::vector<T>(n));
    std::vector<std::vector<char>> real(n, std::vector<char>(n, 0));
    bool any = false;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const Edge& e = edges_[k];
      if (row_of[e.a] == SIZE_MAX || col_of[e.b] == SIZE_MAX) continue;
      cost[row_of[e.a]][col_of[e.b]] = T{} - gains_[k];
      real[row_of[e.a]][col_of[e.b]] = 1;
      any = true;
    }
    if (!any) return T{};
    const auto assign = detail::min_cost_assignment(cost);
    T total{};
    for (std::size_t r = 0; r < n; ++r)
      if (real[r][assign[r]]) total = total - cost[r][assign[r]];
    return total;
  }

  // Greedy over canonical edges, keeping each edge whose inclusion preserves the optimum.
  std::vector<Edge> lexicographic_optimum(const T& best) const {
    std::vector<char> a_used(na_, 0), b_used(nb_, 0);
    std::vector<Edge> chosen;
    T chosen_sum{};
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const Edge& e = edges_[k];
      if (a_used[e.a] || b_used[e.b]) continue;
      a_used[e.a] = b_used[e.b] = 1;
      const T with = chosen_sum + gains_[k] + optimum(a_used, b_used);
      if (with == best) {
        chosen.push_back(e);
        chosen_sum = chosen_sum + gains_[k];
      } else {
        a_used[e.a] = b_used[e.b] = 0;
      }
    }
    return chosen;
  }

  T optimum_all() const {
    return optimum(std::vector<char>(na_, 0), std::vector<char>(nb_, 0));
  }

 private:
  std::size_t na_, nb_;
  const std::vector<Edge>& edges_;
  std::vector<T> gains_;
};

// Scales gains to integers when they fit comfortably in 64 bits.
std::optional<std::vector<std::int64_t>> integer_gains(const GainTable& t, mpz_class& scale) {
  scale = 1;
  for (const Rational& g : t.gain) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), g.denominator().get_mpz_t());
  const mpz_class limit = mpz_class(1) << 40;
  std::vector<std::int64_t> out;
  out.reserve(t.gain.size());
  mpz_class total = 0;
  for (const Rational& g : t.gain) {
    mpz_class v = g.numerator() * (scale / g.denominator());
    total += v;
    if (v >= limit || total >= limit) return std::nullopt;
    out.push_back(v.get_si());
  }
  return out;
}

struct Solved {
  Rational best_gain;
  std::vector<Edge> response;
};

Solved solve_gains(const Instance& inst, const GainTable& t, bool want_response) {
  Solved out;
  mpz_class scale;
  if (auto ints = integer_gains(t, scale)) {
    MaxWeight<std::int64_t> mw(inst.a_count(), inst.b_count(), t.positive, std::move(*ints));
    const std::int64_t best = mw.optimum_all();
    out.best_gain = Rational(mpq_class(mpz_class(static_cast<long>(best)), scale));
    if (want_response) out.response = mw.lexicographic_optimum(best);
  } else {
    MaxWeight<Rational> mw(inst.a_count(), inst.b_count(), t.positive, t.gain);
    const Rational best = mw.optimum_all();
    out.best_gain = best;
    if (want_response) out.response = mw.lexicographic_optimum(best);
  }
  return out;
}

}  // namespace

Rational popularity_margin(const Instance& inst, const Matching& m) {
  const GainTable t = build_gains(inst, m);
  return solve_gains(inst, t, false).best_gain - t.matched_weight;
}

PopularResponse most_popular_response(const Instance& inst, const Matching& m) {
  const GainTable t = build_gains(inst, m);
  Solved s = solve_gains(inst, t, true);
  return PopularResponse{s.best_gain - t.matched_weight, Matching::from_edges(inst, std::move(s.response))};
}

VerifyResult is_popular(const Instance& inst, const Matching& m) {
  VerifyResult r;
  r.margin = popularity_margin(inst, m);
  r.is_popular = r.margin.sign() <= 0;
  if (!r.is_popular) r.counterexample = most_popular_response(inst, m).response;
  return r;
}

bool is_popular_house_allocation(const Instance& inst, const Matching& m) {
  const PostMap posts = compute_posts(inst);
  for (std::size_t a = 0; a < inst.a_count(); ++a) {
    if (!posts.f[a]) continue;
    const auto p = m.partner_of_a(a);
    if (p != posts.f[a] && p != posts.s[a]) return false;
  }
  for (std::size_t b = 0; b < inst.b_count(); ++b)
    if (posts.is_f_post[b] && !m.partner_of_b(b)) return false;
  return true;
}

}  // namespace popmatch
