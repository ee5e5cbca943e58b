#include "equitangent/circle_chain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace equitangent {

namespace {

std::size_t wrap(std::ptrdiff_t i, std::size_t n) {
    std::ptrdiff_t m = i % static_cast<std::ptrdiff_t>(n);
    if (m < 0) m += static_cast<std::ptrdiff_t>(n);
    return static_cast<std::size_t>(m);
}

} // namespace

OrientedChain::OrientedChain(std::vector<Point2> centers_in,
                             std::vector<double> radii_in, double tol)
    : centers(std::move(centers_in)), signed_radii(std::move(radii_in)) {
    const std::size_t n = centers.size();
    if (n < 2 || signed_radii.size() != n)
        throw InputError("chain needs matching center and radius lists, n >= 2");
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        if (signed_radii[i] == signed_radii[j] &&
            distance(centers[i], centers[j]) == 0.0)
            throw EqualSignedRadii("consecutive circles coincide at index " +
                                   std::to_string(i));
    }
    const double res = tangency_residual();
    const double scale = std::max(1.0, diameter());
    if (res > tol * scale)
        throw PreconditionError("chain tangency residual " + std::to_string(res));
}

const Point2& OrientedChain::center(std::ptrdiff_t i) const {
    return centers[wrap(i, centers.size())];
}

double OrientedChain::radius(std::ptrdiff_t i) const {
    return signed_radii[wrap(i, signed_radii.size())];
}

double OrientedChain::tangency_residual() const {
    const std::size_t n = size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const double d = distance(centers[i], centers[j]);
        worst = std::max(worst, std::abs(d - std::abs(signed_radii[j] - signed_radii[i])));
    }
    return worst;
}

double OrientedChain::diameter() const {
    const std::size_t n = size();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i; k < n; ++k)
            best = std::max(best, distance(centers[i], centers[k]) +
                                      std::abs(signed_radii[i]) +
                                      std::abs(signed_radii[k]));
    return best;
}

OrientedChain OrientedChain::canonical() const {
    for (double r : signed_radii) {
        if (r != 0.0) {
            if (r > 0.0) return *this;
            OrientedChain out = *this;
            for (double& ri : out.signed_radii) ri = -ri;
            return out;
        }
    }
    return *this;
}

OrientedChain add_constant(const OrientedChain& chain, double c) {
    OrientedChain out = chain;
    for (double& r : out.signed_radii) r += c;
    return out;
}

double ZeroLengthPolygon::signed_perimeter() const {
    const std::size_t n = vertices.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        sum += edge_orientations[i] * distance(vertices[i], vertices[(i + 1) % n]);
    return sum;
}

ZeroLengthPolygon centers_polygon(const OrientedChain& chain) {
    const std::size_t n = chain.size();
    ZeroLengthPolygon out;
    out.vertices = chain.centers;
    out.edge_orientations.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double dr = chain.signed_radii[(i + 1) % n] - chain.signed_radii[i];
        if (dr == 0.0)
            throw EqualSignedRadii("edge orientation undefined at index " +
                                   std::to_string(i));
        out.edge_orientations[i] = dr > 0.0 ? 1 : -1;
    }
    return out;
}

OrientedChain lift_polygon(const ZeroLengthPolygon& e, double r1, double tol) {
    const std::size_t n = e.vertices.size();
    if (n < 2 || e.edge_orientations.size() != n)
        throw InputError("zero-length polygon needs n >= 2 oriented edges");

    std::vector<double> radii(n);
    radii[0] = r1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double len = distance(e.vertices[i], e.vertices[i + 1]);
        if (len == 0.0) throw EqualSignedRadii("zero-length edge in lift");
        radii[i + 1] = radii[i] + e.edge_orientations[i] * len;
    }
    const double closing = distance(e.vertices[n - 1], e.vertices[0]);
    const double back = radii[n - 1] + e.edge_orientations[n - 1] * closing;
    const double scale = std::max(1.0, std::abs(e.signed_perimeter()) +
                                           std::abs(back) + std::abs(r1));
    if (std::abs(back - r1) > tol * scale)
        throw InconsistentClosure("signed perimeter " +
                                  std::to_string(back - r1));
    return OrientedChain(e.vertices, std::move(radii), tol);
}

std::vector<TangencyPoint> tangency_points(const OrientedChain& chain) {
    const std::size_t n = chain.size();
    std::vector<TangencyPoint> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const double dr = chain.signed_radii[j] - chain.signed_radii[i];
        if (dr == 0.0)
            throw EqualSignedRadii("tangency point undefined for equal radii");
        // Lies on the center line and on both circles.
        out[i].point = chain.centers[i] -
                       (chain.signed_radii[i] / dr) * (chain.centers[j] - chain.centers[i]);
        out[i].index = static_cast<double>(i) + 0.5;
    }
    return out;
}

bool is_generic_chain(const OrientedChain& chain, double rel_tol) {
    const std::vector<TangencyPoint> pts = tangency_points(chain);
    const std::size_t n = pts.size();
    const double sep = rel_tol * chain.diameter();
    for (std::size_t i = 0; i < n; ++i) {
        // The two tangency points on circle i+1 are pts[i] and pts[i+1].
        if (distance(pts[i].point, pts[(i + 1) % n].point) < sep) return false;
    }
    return true;
}

FramedPolygon chain_to_framed(const OrientedChain& chain, double tol) {
    if (!is_generic_chain(chain))
        throw NonGenericChain("coincident tangency points");
    const std::size_t n = chain.size();
    const std::vector<TangencyPoint> pts = tangency_points(chain);

    FramedPolygon out;
    std::vector<Point2> verts(n);
    out.framing_angles.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        verts[i] = pts[i].point;
        // Gear velocity at the tangency point, the same from both circles:
        // J(B - O_i)/r_i = -J(O_{i+1} - O_i)/(r_{i+1} - r_i), already unit.
        const double dr = chain.signed_radii[j] - chain.signed_radii[i];
        const Vec2 u = (-1.0 / dr) * rotate90(chain.centers[j] - chain.centers[i]);
        out.framing_angles[i] = UnitVector::of(u).angle;
    }
    out.polygon = Polygon(std::move(verts));

    const double res = out.framing_residual();
    if (res > std::max(tol, 1e-9))
        throw NumericalError("chain framing residual " + std::to_string(res));
    return out;
}

OrientedChain framed_to_chain(const FramedPolygon& fp, double tol) {
    if (!is_generic(fp))
        throw NonGenericFramedPolygon("framed polygon is non-generic");
    const std::size_t n = fp.size();

    std::vector<Point2> centers(n);
    std::vector<double> radii(n);
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        const OrientedCircle oc = circle_through_point_pair_tangent_to_directions(
            fp.polygon.vertex(i - 1), fp.framing(i - 1),
            fp.polygon.vertex(i), fp.framing(i), tol);
        centers[static_cast<std::size_t>(i)] = oc.circle.center;
        radii[static_cast<std::size_t>(i)] = oc.signed_radius;
    }

    // The rotation-consistent signs must already produce a tangent chain;
    // a failure means the framing was inconsistent mod 2*pi.
    try {
        return OrientedChain(std::move(centers), std::move(radii), tol);
    } catch (const PreconditionError& e) {
        throw OrientationObstruction(
            std::string("sign assignment does not close: ") + e.what());
    }
}

} // namespace equitangent
