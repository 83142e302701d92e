#include "popmatch/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "popmatch/error.hpp"

namespace popmatch {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

// Tokenised non-empty lines after checking the header.
std::vector<Line> lex(std::istream& in, const std::string& header) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  bool saw_header = false;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (line.tokens.empty()) continue;
    if (!saw_header) {
      if (line.tokens.size() != 2 || line.tokens[0] != header)
        fail(number, "expected header '" + header + " 1'");
      if (line.tokens[1] != "1") fail(number, "unsupported version " + line.tokens[1]);
      saw_header = true;
      continue;
    }
    out.push_back(std::move(line));
  }
  if (!saw_header) fail(number, "missing header '" + header + " 1'");
  return out;
}

Rational parse_value(const Line& line, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    fail(line.number, "bad number '" + text + "'");
  }
}

VertexId lookup(const Instance& inst, const Line& line, const std::string& name, std::optional<Side> side) {
  auto v = inst.find(name);
  if (!v) fail(line.number, "unknown vertex '" + name + "'");
  if (side && v->side != *side) fail(line.number, "vertex '" + name + "' is on the wrong side");
  return *v;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return in;
}

}  // namespace

LoadedInstance read_instance(std::istream& in) {
  const auto lines = lex(in, "popmatch-instance");
  std::optional<std::pair<std::size_t, std::size_t>> sizes;
  std::vector<const Line*> a_lines, b_lines, cost_lines;
  for (const Line& l : lines) {
    const std::string& kind = l.tokens[0];
    if (kind == "sizes") {
      if (l.tokens.size() != 3) fail(l.number, "expected 'sizes <|A|> <|B|>'");
      try {
        sizes = std::make_pair(std::stoul(l.tokens[1]), std::stoul(l.tokens[2]));
      } catch (const std::exception&) {
        fail(l.number, "bad sizes");
      }
    } else if (kind == "a" || kind == "b") {
      if (l.tokens.size() < 4 || l.tokens[3] != ":") fail(l.number, "expected '" + kind + " <name> <weight> : ...'");
      (kind == "a" ? a_lines : b_lines).push_back(&l);
    } else if (kind == "cost") {
      if (l.tokens.size() != 4) fail(l.number, "expected 'cost <a> <b> <value>'");
      cost_lines.push_back(&l);
    } else {
      fail(l.number, "unknown record '" + kind + "'");
    }
  }
  if (sizes && (sizes->first != a_lines.size() || sizes->second != b_lines.size()))
    throw Error(ErrorCode::ParseError, "sizes line says " + std::to_string(sizes->first) + "+" +
                                           std::to_string(sizes->second) + " but " + std::to_string(a_lines.size()) +
                                           "+" + std::to_string(b_lines.size()) + " vertices are listed");

  std::map<std::string, std::size_t> a_index, b_index;
  InstanceData d;
  for (const Line* l : a_lines) {
    if (!a_index.emplace(l->tokens[1], a_index.size()).second) fail(l->number, "duplicate name " + l->tokens[1]);
    d.a_names.push_back(l->tokens[1]);
    d.a_weights.push_back(parse_value(*l, l->tokens[2]));
  }
  for (const Line* l : b_lines) {
    if (!b_index.emplace(l->tokens[1], b_index.size()).second) fail(l->number, "duplicate name " + l->tokens[1]);
    d.b_names.push_back(l->tokens[1]);
    d.b_weights.push_back(parse_value(*l, l->tokens[2]));
  }
  auto resolve = [](const Line* l, const std::map<std::string, std::size_t>& idx) {
    std::vector<std::size_t> out;
    for (std::size_t i = 4; i < l->tokens.size(); ++i) {
      auto it = idx.find(l->tokens[i]);
      if (it == idx.end()) fail(l->number, "unknown neighbour '" + l->tokens[i] + "'");
      out.push_back(it->second);
    }
    return out;
  };
  for (const Line* l : a_lines) d.a_prefs.push_back(resolve(l, b_index));
  for (const Line* l : b_lines) d.b_prefs.push_back(resolve(l, a_index));

  LoadedInstance out{build_instance(std::move(d)), {}};
  for (const Line* l : cost_lines) {
    const VertexId a = lookup(out.instance, *l, l->tokens[1], Side::A);
    const VertexId b = lookup(out.instance, *l, l->tokens[2], Side::B);
    if (!out.instance.adjacent(a.index, b.index))
      throw Error(ErrorCode::EdgeNotInGraph, "line " + std::to_string(l->number) + ": cost on a non-edge");
    out.costs[{a.index, b.index}] = parse_value(*l, l->tokens[3]);
  }
  return out;
}

std::string format_instance(const Instance& inst, const EdgeCosts& costs) {
  std::ostringstream os;
  os << "popmatch-instance 1\n";
  os << "sizes " << inst.a_count() << " " << inst.b_count() << "\n";
  for (Side s : {Side::A, Side::B}) {
    for (std::size_t i = 0; i < inst.count(s); ++i) {
      const VertexId v{s, i};
      os << (s == Side::A ? "a " : "b ") << inst.name(v) << " " << inst.weight(v) << " :";
      for (std::size_t o : inst.prefs(v)) os << " " << inst.name({other(s), o});
      os << "\n";
    }
  }
  for (const auto& [e, value] : costs)
    os << "cost " << inst.name(a_vertex(e.a)) << " " << inst.name(b_vertex(e.b)) << " " << value << "\n";
  return os.str();
}

Matching read_matching(const Instance& inst, std::istream& in) {
  std::vector<Edge> edges;
  for (const Line& l : lex(in, "popmatch-matching")) {
    if (l.tokens.size() != 2) fail(l.number, "expected '<a> <b>'");
    const VertexId a = lookup(inst, l, l.tokens[0], Side::A);
    const VertexId b = lookup(inst, l, l.tokens[1], Side::B);
    edges.push_back({a.index, b.index});
  }
  return Matching::from_edges(inst, std::move(edges));
}

std::string format_matching(const Instance& inst, const Matching& m) {
  std::ostringstream os;
  os << "popmatch-matching 1\n";
  for (const Edge& e : m.edges()) os << inst.name(a_vertex(e.a)) << " " << inst.name(b_vertex(e.b)) << "\n";
  return os.str();
}

Witness read_witness(const Instance& inst, std::istream& in) {
  Witness y = Witness::zeros(inst);
  std::map<VertexId, bool> given;
  for (const Line& l : lex(in, "popmatch-witness")) {
    if (l.tokens.size() != 2) fail(l.number, "expected '<vertex> <value>'");
    auto v = inst.find(l.tokens[0]);
    if (!v) throw Error(ErrorCode::WitnessDomainMismatch, "witness names unknown vertex '" + l.tokens[0] + "'");
    if (given[*v]) fail(l.number, "vertex '" + l.tokens[0] + "' given twice");
    given[*v] = true;
    y[*v] = parse_value(l, l.tokens[1]);
  }
  for (Side s : {Side::A, Side::B})
    for (std::size_t i = 0; i < inst.count(s); ++i)
      if (!given[{s, i}])
        throw Error(ErrorCode::WitnessDomainMismatch, "witness has no value for " + inst.name({s, i}));
  return y;
}

std::string format_witness(const Instance& inst, const Witness& y) {
  std::ostringstream os;
  os << "popmatch-witness 1\n";
  for (Side s : {Side::A, Side::B})
    for (std::size_t i = 0; i < inst.count(s); ++i) os << inst.name({s, i}) << " " << y[{s, i}] << "\n";
  return os.str();
}

LoadedInstance load_instance_file(const std::string& path) {
  auto in = open(path);
  return read_instance(in);
}

Matching load_matching_file(const Instance& inst, const std::string& path) {
  auto in = open(path);
  return read_matching(inst, in);
}

Witness load_witness_file(const Instance& inst, const std::string& path) {
  auto in = open(path);
  return read_witness(inst, in);
}

}  // namespace popmatch
