#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ctf/graph.hpp"
#include "ctf/group.hpp"
#include "ctf/orientation.hpp"

namespace ctf {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when two independent computations of the same quantity disagree.
class InternalCheckFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Default cap on the number of candidate vectors one enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

using EdgeVectorVisitor = std::function<void(const EdgeVector&)>;

// --- modular -------------------------------------------------------------

/// Image of the coboundary: one tension per potential with the root of each
/// component fixed at 0. Visits |A|^r(G) distinct tensions.
void for_each_modular_tension(const MultiGraph& g, const Orientation& o, const AbelianGroup& group,
                              const EdgeVectorVisitor& visit, std::uint64_t budget = kDefaultBudget);

/// Kernel of the boundary: free values on non-forest edges, forest values
/// fixed by the fundamental circuits. Visits |A|^n(G) distinct flows.
void for_each_modular_flow(const MultiGraph& g, const Orientation& o, const AbelianGroup& group,
                           const EdgeVectorVisitor& visit, std::uint64_t budget = kDefaultBudget);

std::vector<EdgeVector> enum_modular_tensions(const MultiGraph& g, const Orientation& o, const AbelianGroup& group,
                                              std::uint64_t budget = kDefaultBudget);
std::vector<EdgeVector> enum_modular_flows(const MultiGraph& g, const Orientation& o, const AbelianGroup& group,
                                           std::uint64_t budget = kDefaultBudget);

// --- integral boxes ------------------------------------------------------

struct EdgeBound {
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    bool strict_lower = false;
    bool strict_upper = false;

    std::int64_t min_value() const { return strict_lower ? lower + 1 : lower; }
    std::int64_t max_value() const { return strict_upper ? upper - 1 : upper; }
    bool admits(std::int64_t v) const { return v >= min_value() && v <= max_value(); }
};

struct Box {
    std::vector<EdgeBound> bounds; ///< one per edge position
    bool nowhere_zero = false;

    static Box uniform(std::size_t edges, EdgeBound bound, bool nowhere_zero = false) {
        return {std::vector<EdgeBound>(edges, bound), nowhere_zero};
    }
    /// |f(e)| < q.
    static Box open_symmetric(std::size_t edges, std::int64_t q, bool nowhere_zero) {
        return uniform(edges, {-q, q, true, true}, nowhere_zero);
    }
    /// 0 < f(e) < q.
    static Box open_positive(std::size_t edges, std::int64_t q) { return uniform(edges, {0, q, true, true}); }
    /// 0 <= f(e) <= q.
    static Box closed_nonnegative(std::size_t edges, std::int64_t q) { return uniform(edges, {0, q, false, false}); }
};

/// Integer tensions of (G, o) inside the box: forest-edge values range over
/// their own bounds, non-forest values follow from the fundamental circuits
/// and are then filtered.
void for_each_integer_tension(const MultiGraph& g, const Orientation& o, const Box& box,
                              const EdgeVectorVisitor& visit, std::uint64_t budget = kDefaultBudget);
/// Integer flows of (G, o) inside the box, parametrised by non-forest values.
void for_each_integer_flow(const MultiGraph& g, const Orientation& o, const Box& box, const EdgeVectorVisitor& visit,
                           std::uint64_t budget = kDefaultBudget);

std::vector<EdgeVector> enum_integer_tensions_box(const MultiGraph& g, const Orientation& o, const Box& box,
                                                  std::uint64_t budget = kDefaultBudget);
std::vector<EdgeVector> enum_integer_flows_box(const MultiGraph& g, const Orientation& o, const Box& box,
                                               std::uint64_t budget = kDefaultBudget);

// --- counting ------------------------------------------------------------

enum class Family {
    tau_mod,
    phi_mod,
    tau_int,
    phi_int,
    tau_local,
    phi_local,
    tau_bar_local,
    phi_bar_local,
    tau_bar_int,
    phi_bar_int,
    tau_bar_mod,
    phi_bar_mod,
    kappa_mod,
    kappa_int,
    kappa_local,
    kappa_bar_local,
    kappa_bar_int,
    kappa_bar_mod,
};

struct FamilyTraits {
    std::string_view name;
    bool uses_x;                ///< depends on p
    bool uses_y;                ///< depends on q
    bool closed;                ///< defined on nonnegative arguments (bar families)
    bool local;                 ///< needs an orientation rho
    bool modular;               ///< counts over finite abelian groups
    bool integer_coefficients;  ///< interpolated polynomial must have integer coefficients
};

const FamilyTraits& traits(Family f);
std::optional<Family> parse_family(std::string_view name);
const std::vector<Family>& all_families();

struct CountQuery {
    Family family = Family::kappa_mod;
    std::int64_t p = 1;
    std::int64_t q = 1;
    /// rho for local families; the reference digraph epsilon for the others
    /// (defaults to the reference orientation).
    std::optional<Orientation> orientation;
    std::optional<AbelianGroup> group_p; ///< defaults to Z_p
    std::optional<AbelianGroup> group_q; ///< defaults to Z_q
    std::uint64_t budget = kDefaultBudget;
    std::size_t orientation_limit = kDefaultOrientationLimit;
    /// Representative choice for the *_bar_mod families.
    RepresentativeChoice representatives = RepresentativeChoice::smallest;
};

/// Exact count by exhaustive enumeration.
std::uint64_t count(const CountQuery& query, const MultiGraph& g);

// --- maps between tension-flows ------------------------------------------

struct TensionFlowPair {
    EdgeVector f;
    EdgeVector g;
    friend bool operator==(const TensionFlowPair&, const TensionFlowPair&) = default;
};

/// ker f == supp g, i.e. f(e) g(e) = 0 and (f(e), g(e)) != (0, 0) everywhere.
bool is_complementary(const TensionFlowPair& pair);

/// Componentwise reduction (f mod p, g mod q) into [0,p) x [0,q).
TensionFlowPair mod_map(const MultiGraph& g, const Orientation& o, const TensionFlowPair& pair, std::int64_t p,
                        std::int64_t q);

/// P_{R,S}: edgewise product with the coupling [R,S].
EdgeVector reorient_p(const MultiGraph& g, const Orientation& r, const Orientation& s, const EdgeVector& v);

/// Q^bound_{R,S,subset}: v(e) -> bound - v(e) on edges of `subset` where R and S differ.
EdgeVector reorient_q(const MultiGraph& g, const Orientation& r, const Orientation& s, EdgeSet subset,
                      std::int64_t bound, const EdgeVector& v);

/// Bitmask (by edge position) of the zero entries of v.
std::uint64_t zero_mask(const EdgeVector& v);

} // namespace ctf
