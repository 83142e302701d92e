#include "popmatch/oracle.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "popmatch/error.hpp"
#include "popmatch/verifier.hpp"

namespace popmatch {

namespace {

class Enumerator {
 public:
  Enumerator(const Instance& inst, const std::function<bool(const Matching&)>& visit, std::uint64_t cap)
      : inst_(inst), visit_(visit), cap_(cap), a_used_(inst.a_count(), 0), b_used_(inst.b_count(), 0) {}

  std::uint64_t run() {
    recurse(0);
    return count_;
  }

 private:
  bool recurse(std::size_t k) {
    const auto& edges = inst_.edges();
    if (k == edges.size()) {
      if (++count_ > cap_)
        throw Error(ErrorCode::ScaleLimit, "more than " + std::to_string(cap_) + " matchings");
      return visit_(Matching::from_edges(inst_, chosen_));
    }
    if (!recurse(k + 1)) return false;
    const Edge& e = edges[k];
    if (a_used_[e.a] || b_used_[e.b]) return true;
    a_used_[e.a] = b_used_[e.b] = 1;
    chosen_.push_back(e);
    const bool go_on = recurse(k + 1);
    chosen_.pop_back();
    a_used_[e.a] = b_used_[e.b] = 0;
    return go_on;
  }

  const Instance& inst_;
  const std::function<bool(const Matching&)>& visit_;
  std::uint64_t cap_;
  std::uint64_t count_ = 0;
  std::vector<char> a_used_, b_used_;
  std::vector<Edge> chosen_;
};

// An edge between two unmatched vertices of positive total weight is an
// improving move, so such matchings are unpopular without running the verifier.
bool obviously_unpopular(const Instance& inst, const Matching& m) {
  for (const Edge& e : inst.edges()) {
    if (m.partner_of_a(e.a) || m.partner_of_b(e.b)) continue;
    if ((inst.weight(a_vertex(e.a)) + inst.weight(b_vertex(e.b))).sign() > 0) return true;
  }
  return false;
}

bool popular(const Instance& inst, const Matching& m) {
  return !obviously_unpopular(inst, m) && popularity_margin(inst, m).sign() <= 0;
}

// Streams matchings in batches, filters each batch in parallel, then reports
// popular ones in enumeration order. `on_popular` returns false to stop.
std::uint64_t scan_popular(const Instance& inst, const OracleOptions& opts,
                           const std::function<bool(const Matching&)>& on_popular) {
  const std::size_t batch_size = 4096;
  const unsigned jobs = std::max(1u, opts.jobs);
  std::vector<Matching> batch;
  bool stopped = false;

  auto flush = [&]() -> bool {
    std::vector<char> ok(batch.size(), 0);
    if (jobs == 1 || batch.size() < 2 * jobs) {
      for (std::size_t i = 0; i < batch.size(); ++i) ok[i] = popular(inst, batch[i]);
    } else {
      std::vector<std::jthread> workers;
      for (unsigned t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t] {
          for (std::size_t i = t; i < batch.size(); i += jobs) ok[i] = popular(inst, batch[i]);
        });
      }
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (ok[i] && !on_popular(batch[i])) {
        batch.clear();
        return false;
      }
    }
    batch.clear();
    return true;
  };

  const std::uint64_t total = enumerate_matchings(
      inst,
      [&](const Matching& m) {
        batch.push_back(m);
        if (batch.size() < batch_size) return true;
        stopped = !flush();
        return !stopped;
      },
      opts.cap);
  if (!stopped) flush();
  return total;
}

}  // namespace

std::uint64_t enumerate_matchings(const Instance& inst, const std::function<bool(const Matching&)>& visit,
                                  std::uint64_t cap) {
  return Enumerator(inst, visit, cap).run();
}

std::vector<Matching> all_matchings(const Instance& inst, std::uint64_t cap) {
  std::vector<Matching> out;
  enumerate_matchings(
      inst,
      [&](const Matching& m) {
        out.push_back(m);
        return true;
      },
      cap);
  return out;
}

OracleReport popular_matchings_bruteforce(const Instance& inst, const OracleOptions& opts) {
  OracleReport r;
  std::set<Edge> edges;
  r.total = scan_popular(inst, opts, [&](const Matching& m) {
    r.popular.push_back(m);
    edges.insert(m.edges().begin(), m.edges().end());
    r.max_cardinality = std::max(r.max_cardinality, m.size());
    return true;
  });
  r.popular_edges.assign(edges.begin(), edges.end());
  return r;
}

std::optional<Matching> popular_exists(const Instance& inst, const OracleOptions& opts) {
  std::optional<Matching> found;
  scan_popular(inst, opts, [&](const Matching& m) {
    found = m;
    return false;
  });
  return found;
}

Rational matching_cost(const Matching& m, const EdgeCosts& costs) {
  Rational total;
  for (const Edge& e : m.edges()) {
    auto it = costs.find(e);
    if (it != costs.end()) total += it->second;
  }
  return total;
}

std::optional<CostedMatching> max_cost_popular(const Instance& inst, const EdgeCosts& costs,
                                               const OracleOptions& opts) {
  std::optional<CostedMatching> best;
  scan_popular(inst, opts, [&](const Matching& m) {
    Rational c = matching_cost(m, costs);
    if (!best || c > best->cost) best = CostedMatching{m, std::move(c)};
    return true;
  });
  return best;
}

}  // namespace popmatch
