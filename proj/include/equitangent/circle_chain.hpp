#ifndef EQUITANGENT_CIRCLE_CHAIN_HPP
#define EQUITANGENT_CIRCLE_CHAIN_HPP

#include <cstddef>
#include <vector>

#include "equitangent/framed_polygon.hpp"
#include "equitangent/geometry.hpp"

namespace equitangent {

/// A cyclic chain of pairwise-tangent circles with consistent sign labels:
/// opposite signs across an external tangency, equal signs across an internal
/// one. Consequently |O_i O_{i+1}| = |r_{i+1} - r_i| for the signed radii, and
/// all signs may be flipped simultaneously (positive sign = counterclockwise
/// gear rotation).
struct OrientedChain {
    std::vector<Point2> centers;
    std::vector<double> signed_radii;

    OrientedChain() = default;
    OrientedChain(std::vector<Point2> centers_in, std::vector<double> radii_in,
                  double tol = kGeomTol);

    std::size_t size() const { return centers.size(); }
    const Point2& center(std::ptrdiff_t i) const;
    double radius(std::ptrdiff_t i) const;

    /// Max over edges of | |O_i O_{i+1}| - |r_{i+1} - r_i| |.
    double tangency_residual() const;
    /// Diameter of the union of the chain's disks.
    double diameter() const;
    /// Representative of the sign-flip quotient: first nonzero radius > 0.
    OrientedChain canonical() const;
};

/// Adds c to every signed radius; centers and tangencies are unchanged.
OrientedChain add_constant(const OrientedChain& chain, double c);

/// An n-gon with oriented edges and zero signed perimeter: the sum of edge
/// lengths, each taken with + when the edge's own orientation agrees with the
/// traversal order and - otherwise, telescopes to zero.
struct ZeroLengthPolygon {
    std::vector<Point2> vertices;
    std::vector<int> edge_orientations;  // +1: edge i points from vertex i to i+1

    double signed_perimeter() const;
};

/// The center polygon of a chain, edges oriented toward the larger signed
/// radius. Throws EqualSignedRadii when some r_i == r_{i+1}.
ZeroLengthPolygon centers_polygon(const OrientedChain& chain);

/// Reconstructs a chain over a zero-signed-perimeter polygon by propagating
/// r_{i+1} = r_i +- |O_i O_{i+1}| along the edge orientations, starting from
/// the given first radius. Throws InconsistentClosure when the propagation
/// does not close around the cycle.
OrientedChain lift_polygon(const ZeroLengthPolygon& e, double r1,
                           double tol = kGeomTol);

struct TangencyPoint {
    Point2 point;
    double index;  // half-integer label j: touches circles j-1/2 and j+1/2
};

/// Tangency point of circles i and i+1 (0-based), label i + 1/2.
std::vector<TangencyPoint> tangency_points(const OrientedChain& chain);

/// A chain is non-generic when the two tangency points on some circle
/// coincide (within rel_tol times the chain diameter).
bool is_generic_chain(const OrientedChain& chain, double rel_tol = 1e-7);

/// The framed polygon of a generic chain: vertices are the tangency points,
/// framed by the gear-rotation velocity directions (common tangent at each
/// tangency, positive sign rotating counterclockwise).
FramedPolygon chain_to_framed(const OrientedChain& chain, double tol = kGeomTol);

/// Inverse of chain_to_framed: circle i passes through vertices i-1 and i,
/// tangent to the framing vectors there; signed radii from the rotation
/// sense. Throws NonGenericFramedPolygon, or OrientationObstruction when the
/// resulting signed radii fail the chain tangency (reported, never patched).
OrientedChain framed_to_chain(const FramedPolygon& fp, double tol = kGeomTol);

} // namespace equitangent

#endif // EQUITANGENT_CIRCLE_CHAIN_HPP
