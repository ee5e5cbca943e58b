#include "equitangent/framed_polygon.hpp"

#include <algorithm>
#include <string>

namespace equitangent {

namespace {

std::size_t wrap(std::ptrdiff_t i, std::size_t n) {
    std::ptrdiff_t m = i % static_cast<std::ptrdiff_t>(n);
    if (m < 0) m += static_cast<std::ptrdiff_t>(n);
    return static_cast<std::size_t>(m);
}

} // namespace

Polygon::Polygon(std::vector<Point2> v) : vertices(std::move(v)) {
    if (vertices.size() < 2)
        throw DegeneratePolygon("polygon needs at least 2 vertices");
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (distance(vertices[i], vertices[(i + 1) % n]) == 0.0)
            throw DegeneratePolygon("consecutive vertices coincide at index " +
                                    std::to_string(i));
    }
}

const Point2& Polygon::vertex(std::ptrdiff_t i) const {
    return vertices[wrap(i, vertices.size())];
}

Vec2 Polygon::side_direction(std::ptrdiff_t i) const {
    return normalized(vertex(i + 1) - vertex(i));
}

double Polygon::side_length(std::ptrdiff_t i) const {
    return distance(vertex(i), vertex(i + 1));
}

SideData side_data(const Polygon& p) {
    const std::size_t n = p.size();
    SideData out;
    out.directions.resize(n);
    out.exterior_angles.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.directions[i] = UnitVector::of(p.vertex(static_cast<std::ptrdiff_t>(i) + 1) -
                                           p.vertex(static_cast<std::ptrdiff_t>(i))).angle;
    for (std::size_t i = 0; i < n; ++i) {
        const double prev = out.directions[(i + n - 1) % n];
        double theta = reduce_angle_signed(out.directions[i] - prev);
        if (theta == -kPi) theta = kPi;  // representative in (-pi, pi]
        out.exterior_angles[i] = theta;
    }
    return out;
}

UnitVector FramedPolygon::framing(std::ptrdiff_t i) const {
    return UnitVector(framing_angles[wrap(i, framing_angles.size())]);
}

double FramedPolygon::framing_residual() const {
    const std::size_t n = size();
    const SideData sd = side_data(polygon);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double sum = framing_angles[i] + framing_angles[(i + 1) % n];
        worst = std::max(worst, circular_distance(sum, 2.0 * sd.directions[i]));
    }
    return worst;
}

FramedPolygon FramedPolygon::flipped() const {
    FramedPolygon out = *this;
    for (double& a : out.framing_angles) a = reduce_angle(a + kPi);
    return out;
}

FramedPolygon compute_framing_odd(const Polygon& p) {
    const std::size_t n = p.size();
    if (n % 2 == 0) throw EvenOrder("unique framing requires odd order");
    if (n < 3) throw DegeneratePolygon("order must be at least 3");
    const SideData sd = side_data(p);

    FramedPolygon out;
    out.polygon = p;
    out.framing_angles.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double alpha = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double phi = sd.directions[(i + j) % n];
            alpha += (j % 2 == 0) ? phi : -phi;
        }
        out.framing_angles[i] = reduce_angle(alpha);
    }
    return out;
}

double framing_obstruction_even(const Polygon& p) {
    const std::size_t n = p.size();
    if (n % 2 != 0) throw OddOrder("obstruction defined for even order");
    const SideData sd = side_data(p);
    // Alternating sum of exterior angles; each class of the mod-2 vertex
    // partition is a multiple of pi exactly when a framing exists.
    double sum = 0.0;
    for (std::size_t i = 0; i < n; i += 2) sum += sd.exterior_angles[i];
    return reduce_mod_pi(sum);
}

FramedPolygon framing_family_even(const Polygon& p, double s, double tol) {
    const std::size_t n = p.size();
    if (n % 2 != 0) throw OddOrder("framing family defined for even order");
    if (n >= 4) {
        const double obstruction = framing_obstruction_even(p);
        if (std::abs(obstruction) > tol)
            throw NoFraming("framing obstruction " + std::to_string(obstruction));
    }
    const SideData sd = side_data(p);

    // Base direction at vertex 0: counterclockwise tangent of the circle
    // through vertices n-1, 0, 1. For a cyclic polygon this propagates to the
    // tangent framing. A 2-gon has no such circle; use the perpendicular.
    double alpha0;
    if (n == 2) {
        alpha0 = reduce_angle(sd.directions[0] + kPi / 2.0);
    } else {
        try {
            const Circle c = circumcircle(p.vertex(-1), p.vertex(0), p.vertex(1));
            alpha0 = UnitVector::of(rotate90(p.vertex(0) - c.center)).angle;
        } catch (const DegenerateCircle&) {
            alpha0 = UnitVector::of(p.vertex(1) - p.vertex(-1)).angle;
        }
    }

    FramedPolygon out;
    out.polygon = p;
    out.framing_angles.resize(n);
    out.framing_angles[0] = reduce_angle(alpha0 - s);  // vertex 0 is 1-based odd
    for (std::size_t i = 0; i + 1 < n; ++i)
        out.framing_angles[i + 1] =
            reduce_angle(2.0 * sd.directions[i] - out.framing_angles[i]);

    const double closure = out.framing_residual();
    if (closure > std::max(tol, 1e-9) * 10.0)
        throw NoFraming("framing family does not close: residual " +
                        std::to_string(closure));
    return out;
}

bool is_generic(const FramedPolygon& fp, double tol) {
    const std::size_t n = fp.size();
    if (n < 3) throw DegeneratePolygon("genericity defined for order >= 3");
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        const Point2& a = fp.polygon.vertex(i - 1);
        const Point2& b = fp.polygon.vertex(i);
        const Point2& c = fp.polygon.vertex(i + 1);
        bool all_tangent = true;
        try {
            const Circle circ = circumcircle(a, b, c);
            const Point2 pts[3] = {a, b, c};
            for (int k = 0; k < 3; ++k) {
                const Vec2 radial = normalized(pts[k] - circ.center);
                const Vec2 u = fp.framing(i - 1 + k).vec();
                if (std::abs(dot(radial, u)) > tol) { all_tangent = false; break; }
            }
        } catch (const DegenerateCircle&) {
            // Collinear triple: test tangency against the line through them.
            const Vec2 dir = normalized(c - a);
            for (int k = 0; k < 3; ++k) {
                const Vec2 u = fp.framing(i - 1 + k).vec();
                if (std::abs(cross(dir, u)) > tol) { all_tangent = false; break; }
            }
        }
        if (all_tangent) return false;
    }
    return true;
}

} // namespace equitangent
