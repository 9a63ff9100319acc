#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "ctf/graph.hpp"

namespace ctf {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads the line-based graph format:
///   # comment
///   v <count>
///   e <u> <v>      (one per edge, 0-indexed, reference orientation u -> v)
MultiGraph parse_graph(std::istream& in);
MultiGraph parse_graph_string(const std::string& text);
MultiGraph load_graph(const std::string& path);

std::string format_graph(const MultiGraph& g);

} // namespace ctf
