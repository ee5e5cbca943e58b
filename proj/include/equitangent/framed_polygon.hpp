#ifndef EQUITANGENT_FRAMED_POLYGON_HPP
#define EQUITANGENT_FRAMED_POLYGON_HPP

#include <cstddef>
#include <vector>

#include "equitangent/geometry.hpp"

namespace equitangent {

/// A cyclic list of plane vertices. Non-degenerate: no two consecutive
/// vertices coincide. Indices are 0-based and cyclic throughout.
struct Polygon {
    std::vector<Point2> vertices;

    Polygon() = default;
    explicit Polygon(std::vector<Point2> v);

    std::size_t size() const { return vertices.size(); }
    const Point2& vertex(std::ptrdiff_t i) const;
    /// Unit direction of side i (from vertex i to vertex i+1).
    Vec2 side_direction(std::ptrdiff_t i) const;
    double side_length(std::ptrdiff_t i) const;
};

struct SideData {
    std::vector<double> directions;       // phi_i, direction of side i
    std::vector<double> exterior_angles;  // theta_i = phi_i - phi_{i-1} in (-pi, pi]
};

SideData side_data(const Polygon& p);

/// Polygon plus framing directions alpha_i: the unit vector at each vertex
/// makes equal angles with the adjacent side, seen from both of its ends:
/// alpha_i + alpha_{i+1} == 2 phi_i mod 2*pi. A framing is defined up to the
/// simultaneous flip alpha_i -> alpha_i + pi.
struct FramedPolygon {
    Polygon polygon;
    std::vector<double> framing_angles;

    std::size_t size() const { return polygon.size(); }
    UnitVector framing(std::ptrdiff_t i) const;
    /// Max over sides of the framing-condition defect (radians mod 2*pi).
    double framing_residual() const;
    FramedPolygon flipped() const;
};

/// The unique framing of an odd polygon: alternating sums of side directions.
FramedPolygon compute_framing_odd(const Polygon& p);

/// Residue of the alternating exterior-angle sum mod pi, in [-pi/2, pi/2).
/// Zero (within tolerance) iff an even polygon admits a framing.
double framing_obstruction_even(const Polygon& p);

/// A member of the 1-parameter framing family of an even polygon. The base
/// (s = 0) framing direction at vertex 0 is the counterclockwise tangent of
/// the circle through vertices n-1, 0, 1; any two members differ by adding s
/// at even (1-based) vertices and subtracting s at odd ones.
FramedPolygon framing_family_even(const Polygon& p, double s, double tol = kGeomTol);

/// A framed polygon is non-generic when, at some vertex, the three framing
/// vectors u_{i-1}, u_i, u_{i+1} are all tangent to the circle through the
/// three surrounding vertices (the line through them when collinear).
bool is_generic(const FramedPolygon& fp, double tol = 1e-7);

} // namespace equitangent

#endif // EQUITANGENT_FRAMED_POLYGON_HPP
