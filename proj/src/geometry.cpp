#include "equitangent/geometry.hpp"

namespace equitangent {

OrientedCircle circle_through_point_pair_tangent_to_directions(
    const Point2& b1, const UnitVector& u1,
    const Point2& b2, const UnitVector& u2,
    double tol) {
    const Vec2 chord = b2 - b1;
    const double len = norm(chord);
    if (len == 0.0) throw DegenerateCircle("tangency points coincide");
    const UnitVector chord_dir = UnitVector::of(chord);

    // Two-point framing condition, measured mod 2*pi.
    const double lhs = angle_between(u1, chord_dir).value;
    const double rhs = angle_between(chord_dir, u2).value;
    const double residual = std::abs(reduce_angle_signed(lhs - rhs));
    if (residual > std::max(tol, 1e-12))
        throw FramingViolated("two-point framing condition residual " +
                              std::to_string(residual));

    // Center = (perpendicular bisector of the chord) \cap (normal to u1 at B1).
    // Writing center = B1 + t*J(u1), the bisector condition gives
    // t = |chord| / (2 * (u1 x chord_hat)); this is singular exactly when u1
    // is parallel to the chord, in which case the "circle" is a line.
    const double denom = cross(u1.vec(), chord / len);
    if (std::abs(denom) < 1e-12)
        throw DegenerateCircle("framing parallel to chord: infinite radius");
    const double t = len / (2.0 * denom);

    const Point2 center = b1 + t * rotate90(u1.vec());
    const double radius = std::abs(t);

    // The counterclockwise velocity at B1 is t*u1, so sign(t) is the rotation
    // sense matching u1. Check that the same sense matches u2 at B2.
    const Vec2 v2 = rotate90(b2 - center);
    if (dot(v2, u2.vec()) * t < 0.0)
        throw FramingViolated("rotation sense inconsistent between endpoints");

    OrientedCircle out;
    out.circle = Circle{center, radius};
    out.rotation_sign = t > 0.0 ? 1 : -1;
    out.signed_radius = t;
    return out;
}

Point2 intersect_lines(const Line& a, const Line& b, double parallel_tol) {
    const double denom = cross(a.direction, b.direction);
    if (std::abs(denom) < parallel_tol)
        throw DegenerateCircle("lines nearly parallel");
    const double t = cross(b.point - a.point, b.direction) / denom;
    return a.point + t * a.direction;
}

Circle circumcircle(const Point2& a, const Point2& b, const Point2& c,
                    double collinear_tol) {
    const double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    const double scale = std::max({norm(b - a), norm(c - b), norm(a - c)});
    if (std::abs(d) < collinear_tol * scale * scale)
        throw DegenerateCircle("points nearly collinear");
    const double a2 = squared_norm(a), b2 = squared_norm(b), c2 = squared_norm(c);
    Point2 center{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                  (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
    return Circle{center, distance(center, a)};
}

} // namespace equitangent
