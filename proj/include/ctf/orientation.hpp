#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ctf/graph.hpp"

namespace ctf {

/// Thrown when an exhaustive sweep would exceed its configured size.
class EnumerationLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default cap on the number of edges for sweeps over all 2^|E| orientations.
inline constexpr std::size_t kDefaultOrientationLimit = 20;

/// An orientation of a multigraph, stored as the set of edges reversed
/// relative to the reference orientation. Loops carry a bit as well: the
/// two values of a loop are its two orientations.
struct Orientation {
    EdgeSet domain; ///< edge ids of the graph this orientation lives on
    EdgeSet flips;  ///< subset of domain

    static Orientation reference(const MultiGraph& g) { return {g.edge_ids(), {}}; }
    static Orientation from_string(const MultiGraph& g, std::string_view bits);

    bool flipped(EdgeId id) const { return flips.contains(id); }

    /// `0`/`1` per edge in increasing id order.
    std::string to_string() const;

    Orientation reversed() const { return {domain, domain - flips}; }
    Orientation flipped_on(EdgeSet s) const { return {domain, flips ^ (s & domain)}; }

    /// Same flips, restricted to the edges of `g` (for minors of the original graph).
    Orientation induced_on(const MultiGraph& g) const;

    friend bool operator==(const Orientation&, const Orientation&) = default;
};

/// Lexicographic order of the string forms.
bool lex_less(const Orientation& a, const Orientation& b);

/// +1 if the edge at `position` keeps its reference direction under `o`, -1 if reversed.
int direction(const MultiGraph& g, const Orientation& o, std::size_t position);

/// epsilon(v, e). A loop at v carries both signs, reported as (first, second).
struct IncidenceSign {
    int first = 0;
    int second = 0;
    bool is_double = false;
    int total() const { return first + second; }
};
IncidenceSign incidence_sign(const MultiGraph& g, const Orientation& o, Vertex v, std::size_t position);

/// (boundary g)(v) = sum_e epsilon(v,e) g(e); loops cancel.
std::vector<std::int64_t> boundary(const MultiGraph& g, const Orientation& o, const EdgeVector& values);

/// modulus 0 means the integers.
bool is_flow(const MultiGraph& g, const Orientation& o, const EdgeVector& values, std::int64_t modulus = 0);
bool is_tension(const MultiGraph& g, const Orientation& o, const EdgeVector& values, std::int64_t modulus = 0);

/// Edges on directed circuits vs edges on directed bonds.
struct MintyPartition {
    EdgeSet bond_part;
    EdgeSet circuit_part;
    friend bool operator==(const MintyPartition&, const MintyPartition&) = default;
};
MintyPartition minty_partition(const MultiGraph& g, const Orientation& o);

struct OrientationClassification {
    bool is_acyclic = false;
    bool is_totally_cyclic = false;
    MintyPartition partition;
};
OrientationClassification classify(const MultiGraph& g, const Orientation& o);

/// [R,S](e): +1 where R and S agree, -1 where they differ (position-indexed).
EdgeVector coupling(const MultiGraph& g, const Orientation& r, const Orientation& s);
/// I_{R,S}(e) = (1 - [R,S](e)) / 2.
EdgeVector indicator(const MultiGraph& g, const Orientation& r, const Orientation& s);

enum class Relation { cut, eulerian, cut_eulerian };
enum class OrientationFilter { all, acyclic, totally_cyclic };
enum class RepresentativeChoice { smallest, largest };

std::string to_string(Relation r);
std::string to_string(OrientationFilter f);
std::optional<Relation> parse_relation(std::string_view s);
std::optional<OrientationFilter> parse_filter(std::string_view s);

bool equivalent(const MultiGraph& g, const Orientation& r, const Orientation& s, Relation relation);

/// All orientations passing `filter`, in increasing flip-mask order.
std::vector<Orientation> all_orientations(const MultiGraph& g, OrientationFilter filter = OrientationFilter::all,
                                          std::size_t limit = kDefaultOrientationLimit);

struct ClassPartition {
    Relation relation = Relation::cut_eulerian;
    OrientationFilter filter = OrientationFilter::all;
    std::vector<std::vector<Orientation>> classes; ///< ordered by representative
    std::vector<Orientation> representatives;

    std::size_t class_count() const { return classes.size(); }
    std::optional<std::size_t> class_of(const Orientation& o) const;
    std::size_t class_size_of(const Orientation& o) const;

    std::unordered_map<std::uint64_t, std::size_t> index; ///< flips bits -> class
};

/// Union-find closure of pairwise `equivalent` over the filtered orientations.
ClassPartition enumerate_classes(const MultiGraph& g, Relation relation,
                                 OrientationFilter filter = OrientationFilter::all,
                                 std::size_t limit = kDefaultOrientationLimit,
                                 RepresentativeChoice choice = RepresentativeChoice::smallest);

} // namespace ctf
