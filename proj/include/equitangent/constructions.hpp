#ifndef EQUITANGENT_CONSTRUCTIONS_HPP
#define EQUITANGENT_CONSTRUCTIONS_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "equitangent/geometry.hpp"

namespace equitangent {

/// A counterclockwise circular arc from start_angle over a positive extent.
struct Arc {
    Point2 center;
    double radius = 1.0;  // > 0
    double start_angle = 0.0;
    double extent = kPi;  // in (0, 2*pi)

    double end_angle() const { return start_angle + extent; }
    Point2 point_at(double angle) const;
    Vec2 tangent_at(double angle) const;  // counterclockwise
    Point2 start_point() const { return point_at(start_angle); }
    Point2 end_point() const { return point_at(end_angle()); }
    /// Whether the (mod 2*pi) angle falls within the arc's angular span.
    bool contains_angle(double angle) const;
};

/// A closed strictly convex C^1 curve made of counterclockwise arcs meeting
/// with matching points and tangents.
struct PiecewiseCircularCurve {
    std::vector<Arc> arcs;

    /// Max joint defect: point gap plus tangent-direction gap.
    double c1_residual() const;
    bool is_single_circle(double tol = 1e-12) const;
    /// Dense boundary polyline (at least min_per_arc samples per arc).
    std::vector<Point2> sample_boundary(std::size_t min_per_arc = 16) const;
    bool contains(const Point2& p) const;
    double scale() const;  // bounding radius around the centroid
};

/// Rounds a regular n-gon (unit circumradius, n >= 7) into a C^1 strictly
/// convex curve: each vertex becomes an arc of the small corner radius, each
/// side an arc of the large side radius, 2n arcs in all, dihedral symmetry.
PiecewiseCircularCurve smooth_regular_ngon(int n, double corner_radius,
                                           double side_radius);

struct TangentSegments {
    double l1 = 0.0, l2 = 0.0;
    Point2 t1, t2;       // tangency points on the curve
    int arc1 = -1, arc2 = -1;
    bool at_joint = false;  // a tangency sits within tolerance of an arc joint
};

/// The two tangent segments from an exterior point to the curve.
TangentSegments tangent_segment_lengths(const PiecewiseCircularCurve& curve,
                                        const Point2& x);

/// The line of equal power with respect to two circles; perpendicular to the
/// center line at signed distance (d^2 + r1^2 - r2^2) / (2 d) from c1.
Line radical_axis(const Circle& c1, const Circle& c2);

struct PolyLine {
    std::vector<Point2> points;
    bool closed = false;
};

struct EquitangentLocus {
    /// A circle's equitangent locus is its whole exterior; no polyline then.
    bool whole_exterior = false;
    PolyLine polyline;
    /// Arc-index pair whose radical axis carries each polyline segment
    /// (segment k runs from vertex k to vertex k+1).
    std::vector<std::pair<int, int>> segment_pairs;
};

/// Assembles the closed locus of equal tangent segments around the curve by
/// walking radical-axis segments of the arc pairs visited by the rotating
/// chord; every transition vertex is the exact intersection of consecutive
/// radical axes.
EquitangentLocus equitangent_locus(const PiecewiseCircularCurve& curve);

/// Winding test of p against a closed polyline.
bool point_inside_polyline(const PolyLine& poly, const Point2& p);

/// One step of the discrete chord rotation in a regular n-gon: the chord
/// between two vertices plus the support side at each end.
struct ChordStep {
    int chord_from = 0;
    int chord_to = 0;
    int support_first = 0;   // side index (side k joins vertices k, k+1)
    int support_second = 0;
};

/// The 2n-step alternating schedule carrying a chord around a regular n-gon
/// (n >= 7) with the two-point framing condition holding at every step.
std::vector<ChordStep> chord_schedule(int n);

} // namespace equitangent

#endif // EQUITANGENT_CONSTRUCTIONS_HPP
