#ifndef EQUITANGENT_SAMPLING_HPP
#define EQUITANGENT_SAMPLING_HPP

#include <cstddef>
#include <random>

#include "equitangent/circle_chain.hpp"
#include "equitangent/framed_polygon.hpp"

namespace equitangent {

using Rng = std::mt19937_64;

/// Quality margins for sampled generic chains.
struct ChainMargins {
    double min_edge = 0.25;             // shortest center-polygon edge
    double min_sin_theta = 0.15;        // vertex angle margin for the fields
    double min_tangency_sep_rel = 1e-2; // tangency separation / diameter
};

/// Random non-degenerate polygon with side lengths and turning angles bounded
/// away from zero; star-shaped outcomes are allowed.
Polygon random_polygon(std::size_t n, Rng& rng, double min_side = 0.25);

/// Random convex polygon inscribed in a random circle, angular gaps bounded
/// away from 0 and 2*pi.
Polygon random_cyclic_polygon(std::size_t n, Rng& rng);

/// Random cyclic polygon with one vertex pushed off the circumcircle of the
/// other three by the given relative amount.
Polygon random_perturbed_cyclic_quadrilateral(Rng& rng, double relative_push);

/// Random polygon with oriented edges and zero signed perimeter: random
/// vertices and edge signs, then one vertex is moved onto the hyperbola (or
/// perpendicular bisector) with foci at its neighbors that closes the signed
/// sum exactly.
ZeroLengthPolygon sample_zero_length_polygon(std::size_t n, Rng& rng);

/// Random generic chain: a zero-signed-perimeter polygon lifted with a random
/// first radius, rejection-sampled until the margins hold.
OrientedChain sample_generic_chain(std::size_t n, Rng& rng,
                                   const ChainMargins& margins = {});

/// Measures the margins of an existing chain (used by the rejection loop).
bool chain_meets_margins(const OrientedChain& chain, const ChainMargins& margins);

} // namespace equitangent

#endif // EQUITANGENT_SAMPLING_HPP
