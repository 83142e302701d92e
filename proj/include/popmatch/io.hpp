#pragma once

#include <iosfwd>
#include <string>

#include "popmatch/instance.hpp"
#include "popmatch/witness.hpp"

namespace popmatch {

// Line-oriented text formats. Each file starts with a header naming the format
// and version; '#' starts a comment and blank lines are ignored.
//
//   popmatch-instance 1
//   sizes <|A|> <|B|>
//   a <name> <weight> : <neighbour names, best first>
//   b <name> <weight> : <neighbour names, best first>
//   cost <a name> <b name> <value>          (optional)
//
//   popmatch-matching 1
//   <a name> <b name>
//
//   popmatch-witness 1
//   <vertex name> <value>
//
// Weights and values are integers or p/q. Errors are PARSE_ERROR with a line number.

struct LoadedInstance {
  Instance instance;
  EdgeCosts costs;
};

LoadedInstance read_instance(std::istream& in);
std::string format_instance(const Instance& inst, const EdgeCosts& costs = {});

Matching read_matching(const Instance& inst, std::istream& in);
std::string format_matching(const Instance& inst, const Matching& m);

Witness read_witness(const Instance& inst, std::istream& in);
std::string format_witness(const Instance& inst, const Witness& y);

LoadedInstance load_instance_file(const std::string& path);
Matching load_matching_file(const Instance& inst, const std::string& path);
Witness load_witness_file(const Instance& inst, const std::string& path);

}  // namespace popmatch
