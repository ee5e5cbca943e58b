#ifndef EQUITANGENT_GEOMETRY_HPP
#define EQUITANGENT_GEOMETRY_HPP

#include <cmath>
#include <numbers>

#include "equitangent/errors.hpp"

namespace equitangent {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Default absolute tolerance for geometric residuals.
inline constexpr double kGeomTol = 1e-9;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Vec2&) const = default;
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
};

using Point2 = Vec2;

inline Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
inline Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
inline Vec2 operator*(double s, Vec2 v) { return v *= s; }
inline Vec2 operator*(Vec2 v, double s) { return v *= s; }
inline Vec2 operator/(Vec2 v, double s) { return v *= (1.0 / s); }
inline Vec2 operator-(const Vec2& v) { return {-v.x, -v.y}; }

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }
inline double squared_norm(const Vec2& v) { return v.x * v.x + v.y * v.y; }
inline double distance(const Point2& a, const Point2& b) { return norm(b - a); }

/// The quarter-turn J: (x, y) -> (-y, x). J(J(v)) = -v.
inline Vec2 rotate90(const Vec2& v) { return {-v.y, v.x}; }

inline Vec2 rotate(const Vec2& v, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

inline Vec2 normalized(const Vec2& v) {
    const double n = norm(v);
    if (n == 0.0) throw DegeneratePolygon("cannot normalize zero vector");
    return v / n;
}

/// Reduce an angle to [0, 2*pi).
inline double reduce_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    if (a == kTwoPi) a = 0.0;
    return a;
}

/// Reduce an angle to (-pi, pi].
inline double reduce_angle_signed(double a) {
    a = reduce_angle(a);
    return a > kPi ? a - kTwoPi : a;
}

/// Reduce a residue mod pi to [-pi/2, pi/2).
inline double reduce_mod_pi(double a) {
    a = std::fmod(a, kPi);
    if (a < -kPi / 2.0) a += kPi;
    if (a >= kPi / 2.0) a -= kPi;
    return a;
}

/// Distance between two angles on the circle, in [0, pi].
inline double circular_distance(double a, double b) {
    return std::abs(reduce_angle_signed(a - b));
}

/// A unit vector stored by its direction angle (mod 2*pi).
struct UnitVector {
    double angle = 0.0;

    UnitVector() = default;
    explicit UnitVector(double direction) : angle(reduce_angle(direction)) {}

    static UnitVector of(const Vec2& v) {
        if (v.x == 0.0 && v.y == 0.0)
            throw DegeneratePolygon("direction of zero vector undefined");
        return UnitVector(std::atan2(v.y, v.x));
    }

    Vec2 vec() const { return {std::cos(angle), std::sin(angle)}; }
    UnitVector flipped() const { return UnitVector(angle + kPi); }
};

/// A counterclockwise rotation angle, reduced to [0, 2*pi).
struct DirectedAngle {
    double value = 0.0;

    DirectedAngle() = default;
    explicit DirectedAngle(double v) : value(reduce_angle(v)) {}

    /// The same rotation expressed in (-pi, pi].
    double signed_value() const { return reduce_angle_signed(value); }
};

/// The counterclockwise rotation taking u to v.
/// angle_between(u, v) + angle_between(v, u) == 0 mod 2*pi.
inline DirectedAngle angle_between(const UnitVector& u, const UnitVector& v) {
    return DirectedAngle(v.angle - u.angle);
}

struct Circle {
    Point2 center;
    double radius = 1.0;  // > 0
};

/// A circle together with a rotation sense: +1 means the counterclockwise
/// rotation of the circle moves its tangency points in the framing direction.
struct OrientedCircle {
    Circle circle;
    int rotation_sign = 1;
    /// Radius carrying the rotation sign.
    double signed_radius = 1.0;
};

/// The unique circle through B1 and B2 tangent to the lines spanned by u1, u2,
/// with rotation sense matching both framing vectors. Requires the two-point
/// framing condition angle(u1, B1B2) == angle(B1B2, u2) mod 2*pi.
OrientedCircle circle_through_point_pair_tangent_to_directions(
    const Point2& b1, const UnitVector& u1,
    const Point2& b2, const UnitVector& u2,
    double tol = kGeomTol);

struct Line {
    Point2 point;
    Vec2 direction;  // unit
};

inline double distance_to_line(const Line& line, const Point2& p) {
    return std::abs(cross(line.direction, p - line.point));
}

/// Intersection of two lines; throws DegenerateCircle when nearly parallel.
Point2 intersect_lines(const Line& a, const Line& b, double parallel_tol = 1e-12);

/// Circle through three points, or throws DegenerateCircle when collinear.
Circle circumcircle(const Point2& a, const Point2& b, const Point2& c,
                    double collinear_tol = 1e-12);

} // namespace equitangent

#endif // EQUITANGENT_GEOMETRY_HPP
