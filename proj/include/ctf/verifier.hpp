#pragma once

#include <set>
#include <string>
#include <vector>

#include "ctf/polyengine.hpp"

namespace ctf {

struct IdentityEntry {
    std::string id;
    std::string tag;
    bool passed = false;
    std::string witness; ///< first counterexample, empty on success
};

struct IdentityReport {
    std::vector<IdentityEntry> entries;
    /// Informational values that are not identities under test.
    std::vector<std::string> notices;

    bool all_passed() const;
    const IdentityEntry* find(const std::string& id) const;
};

struct VerifyOptions {
    PolynomialOptions polynomials;
    /// Graphs with more edges are rejected before any work starts.
    std::size_t edge_limit = 12;
    /// Identity ids forced to fail; used to exercise failure paths.
    std::set<std::string> forced_failures;
};

/// Ids checked by verify_graph, in report order.
const std::vector<std::string>& identity_ids();

/// Checks every identity on g. Exceptions raised inside one check (budget,
/// interpolation, internal cross-check) turn that entry into a failure.
IdentityReport verify_graph(const MultiGraph& g, const VerifyOptions& options = {});

/// All multigraphs with at most max_edges edges on 1..max_edges+1 vertices,
/// one per isomorphism class, ordered by edge count then vertex count.
std::vector<MultiGraph> corpus_graphs(std::size_t max_edges, bool include_loops);

struct CorpusEntry {
    MultiGraph graph;
    IdentityReport report;
};

std::vector<CorpusEntry> verify_corpus(std::size_t max_edges, bool include_loops, const VerifyOptions& options = {});

nlohmann::json to_json(const IdentityReport& report);
std::string to_text(const IdentityReport& report);

} // namespace ctf
