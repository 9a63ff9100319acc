#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ctf/graph.hpp"

namespace ctf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Largest graphs accepted without an explicit --budget.
inline constexpr std::size_t kPolynomialEdgeLimit = 12;
inline constexpr std::size_t kCountEdgeLimit = 20;

/// Runs one command line (without the program name). Output goes to `out`
/// in a single write; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The worked example graph: three vertices, five edges.
MultiGraph example_graph();

} // namespace ctf::cli
