#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctf/graph.hpp"
#include "ctf/orientation.hpp"
#include "ctf/polynomial.hpp"
#include "ctf/tfspace.hpp"

namespace ctf {

/// Largest edge count accepted by the subset expansion of R_G.
inline constexpr std::size_t kSubsetLimit = 24;

/// R_G(x,y) = sum over X of x^(r<E>-r<X>) y^(n<X>).
BivariatePolynomial rank_generating(const MultiGraph& g, std::size_t limit = kSubsetLimit);

/// Deletion-contraction: loop -> y T(G-e), bridge -> x T(G/e), otherwise
/// T(G-e) + T(G/e); edgeless graphs give 1. Memoized on the edge list.
BivariatePolynomial tutte(const MultiGraph& g);

struct PolynomialOptions {
    std::uint64_t budget = kDefaultBudget;
    std::size_t orientation_limit = kDefaultOrientationLimit;
    /// epsilon for the families that depend on a reference digraph.
    std::optional<Orientation> reference;
    RepresentativeChoice representatives = RepresentativeChoice::smallest;
};

/// Sample points used to interpolate a family on g, plus two held-out points.
struct SampleGrid {
    std::vector<std::int64_t> xs;
    std::vector<std::int64_t> ys;
    std::vector<std::pair<std::int64_t, std::int64_t>> held_out;
};

/// Degree bounds (r(G), n(G)); open families sample {1..d+1}, closed ones
/// {0..d}; an unused variable gets a single sample.
SampleGrid sample_grid(const MultiGraph& g, Family family);

/// Interpolated polynomial of a graph-level family (not a *_local one).
/// Throws InterpolationError if a held-out point disagrees or an
/// integer-coefficient family comes out fractional.
BivariatePolynomial counting_polynomial(const MultiGraph& g, Family family, const PolynomialOptions& options = {});

/// Interpolated polynomial of a *_local family for the orientation rho.
BivariatePolynomial local_polynomial(const MultiGraph& g, Family family, const Orientation& rho,
                                     const PolynomialOptions& options = {});

/// The graph-level families carried by a PolynomialReport.
const std::vector<Family>& report_families();

struct PolynomialReport {
    BivariatePolynomial tutte;
    BivariatePolynomial rank_generating;
    std::map<Family, BivariatePolynomial> families;
};

PolynomialReport polynomial_report(const MultiGraph& g, const PolynomialOptions& options = {});

nlohmann::json to_json(const PolynomialReport& report);
std::string to_text(const PolynomialReport& report);

} // namespace ctf
