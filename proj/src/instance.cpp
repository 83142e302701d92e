#include "popmatch/instance.hpp"

#include <algorithm>
#include <sstream>

#include "popmatch/error.hpp"

namespace popmatch {

namespace {

using RankTable = std::vector<std::vector<std::pair<std::size_t, std::size_t>>>;

RankTable build_ranks(const std::vector<std::vector<std::size_t>>& prefs) {
  RankTable out(prefs.size());
  for (std::size_t v = 0; v < prefs.size(); ++v) {
    auto& row = out[v];
    row.reserve(prefs[v].size());
    for (std::size_t r = 0; r < prefs[v].size(); ++r) row.emplace_back(prefs[v][r], r);
    std::sort(row.begin(), row.end());
  }
  return out;
}

std::string default_name(Side s, std::size_t i) {
  return (s == Side::A ? "a" : "b") + std::to_string(i + 1);
}

}  // namespace

Instance build_instance(InstanceData data) {
  Instance inst;
  const std::size_t na = data.a_prefs.size();
  const std::size_t nb = data.b_prefs.size();

  auto fill_names = [](std::vector<std::string>& names, std::size_t n, Side s) {
    if (names.empty()) {
      for (std::size_t i = 0; i < n; ++i) names.push_back(default_name(s, i));
    } else if (names.size() != n) {
      throw Error(ErrorCode::BadIndex, "name list has " + std::to_string(names.size()) +
                                           " entries for " + std::to_string(n) + " vertices");
    }
  };
  fill_names(data.a_names, na, Side::A);
  fill_names(data.b_names, nb, Side::B);

  for (std::size_t i = 0; i < na; ++i) {
    if (!inst.by_name_.emplace(data.a_names[i], a_vertex(i)).second)
      throw Error(ErrorCode::ParseError, "duplicate vertex name " + data.a_names[i]);
  }
  for (std::size_t i = 0; i < nb; ++i) {
    if (!inst.by_name_.emplace(data.b_names[i], b_vertex(i)).second)
      throw Error(ErrorCode::ParseError, "duplicate vertex name " + data.b_names[i]);
  }

  auto check_weights = [](const std::vector<Rational>& w, std::size_t n,
                          const std::vector<std::string>& names, const char* side) {
    if (w.size() != n)
      throw Error(ErrorCode::BadIndex, std::string("weight list for side ") + side + " has " +
                                           std::to_string(w.size()) + " entries, expected " +
                                           std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
      if (w[i].sign() < 0)
        throw Error(ErrorCode::NegativeWeight, "vertex " + names[i] + " has weight " + w[i].to_string());
  };
  check_weights(data.a_weights, na, data.a_names, "A");
  check_weights(data.b_weights, nb, data.b_names, "B");

  auto check_lists = [](const std::vector<std::vector<std::size_t>>& prefs, std::size_t other_n,
                        const std::vector<std::string>& names) {
    for (std::size_t v = 0; v < prefs.size(); ++v) {
      std::vector<std::size_t> seen = prefs[v];
      for (std::size_t x : seen)
        if (x >= other_n)
          throw Error(ErrorCode::BadIndex, "vertex " + names[v] + " lists neighbour index " +
                                               std::to_string(x) + " out of range");
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw Error(ErrorCode::DuplicatePreference, "vertex " + names[v] + " lists a neighbour twice");
    }
  };
  check_lists(data.a_prefs, nb, data.a_names);
  check_lists(data.b_prefs, na, data.b_names);

  inst.a_rank_ = build_ranks(data.a_prefs);
  inst.b_rank_ = build_ranks(data.b_prefs);

  auto has = [](const RankTable& t, std::size_t v, std::size_t x) {
    const auto& row = t[v];
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(x, std::size_t{0}));
    return it != row.end() && it->first == x;
  };
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b : data.a_prefs[a])
      if (!has(inst.b_rank_, b, a))
        throw Error(ErrorCode::AsymmetricAdjacency,
                    "vertex " + data.a_names[a] + " lists " + data.b_names[b] + " but not vice versa");
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t a : data.b_prefs[b])
      if (!has(inst.a_rank_, a, b))
        throw Error(ErrorCode::AsymmetricAdjacency,
                    "vertex " + data.b_names[b] + " lists " + data.a_names[a] + " but not vice versa");

  for (std::size_t a = 0; a < na; ++a)
    for (const auto& [b, r] : inst.a_rank_[a]) inst.edges_.push_back({a, b});

  inst.a_prefs_ = std::move(data.a_prefs);
  inst.b_prefs_ = std::move(data.b_prefs);
  inst.a_weights_ = std::move(data.a_weights);
  inst.b_weights_ = std::move(data.b_weights);
  inst.a_names_ = std::move(data.a_names);
  inst.b_names_ = std::move(data.b_names);
  return inst;
}

std::span<const std::size_t> Instance::prefs(VertexId v) const {
  return v.side == Side::A ? std::span<const std::size_t>(a_prefs_.at(v.index))
                           : std::span<const std::size_t>(b_prefs_.at(v.index));
}

const Rational& Instance::weight(VertexId v) const {
  return v.side == Side::A ? a_weights_.at(v.index) : b_weights_.at(v.index);
}

const std::string& Instance::name(VertexId v) const {
  return v.side == Side::A ? a_names_.at(v.index) : b_names_.at(v.index);
}

std::optional<VertexId> Instance::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Instance::rank(VertexId v, std::size_t other) const {
  const auto& row = v.side == Side::A ? a_rank_.at(v.index) : b_rank_.at(v.index);
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(other, std::size_t{0}));
  if (it == row.end() || it->first != other) return std::nullopt;
  return it->second;
}

bool Instance::prefers(VertexId v, std::size_t x, std::optional<std::size_t> y) const {
  const auto rx = rank(v, x);
  if (!rx) throw Error(ErrorCode::NotAdjacent, name(v) + " is not adjacent to index " + std::to_string(x));
  if (!y) return true;
  const auto ry = rank(v, *y);
  if (!ry) throw Error(ErrorCode::NotAdjacent, name(v) + " is not adjacent to index " + std::to_string(*y));
  return *rx < *ry;
}

std::string Instance::edge_name(Edge e) const {
  return "{" + name(a_vertex(e.a)) + "," + name(b_vertex(e.b)) + "}";
}

Instance Instance::with_weights(std::vector<Rational> a_weights, std::vector<Rational> b_weights) const {
  InstanceData d = data();
  d.a_weights = std::move(a_weights);
  d.b_weights = std::move(b_weights);
  return build_instance(std::move(d));
}

InstanceData Instance::data() const {
  return InstanceData{a_prefs_, b_prefs_, a_weights_, b_weights_, a_names_, b_names_};
}

Matching Matching::from_edges(const Instance& inst, std::vector<Edge> edges) {
  Matching m;
  m.a_partner_.assign(inst.a_count(), std::nullopt);
  m.b_partner_.assign(inst.b_count(), std::nullopt);
  std::sort(edges.begin(), edges.end());
  for (const Edge& e : edges) {
    if (e.a >= inst.a_count() || e.b >= inst.b_count() || !inst.adjacent(e.a, e.b)) {
      std::string what = (e.a < inst.a_count() && e.b < inst.b_count())
                             ? inst.edge_name(e)
                             : "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
      throw Error(ErrorCode::EdgeNotInGraph, "edge " + what + " is not in the graph");
    }
    if (m.a_partner_[e.a] || m.b_partner_[e.b])
      throw Error(ErrorCode::OverlappingEdges, "edge " + inst.edge_name(e) + " shares an endpoint");
    m.a_partner_[e.a] = e.b;
    m.b_partner_[e.b] = e.a;
  }
  m.edges_ = std::move(edges);
  return m;
}

std::string describe(const Instance& inst, const Matching& m) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < m.edges().size(); ++i) {
    if (i) os << ", ";
    os << inst.edge_name(m.edges()[i]);
  }
  os << "}";
  return os.str();
}

}  // namespace popmatch
