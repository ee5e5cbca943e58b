#include "equitangent/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace equitangent {

namespace {

Point2 random_point(Rng& rng, double half_width) {
    std::uniform_real_distribution<double> u(-half_width, half_width);
    return {u(rng), u(rng)};
}

} // namespace

Polygon random_polygon(std::size_t n, Rng& rng, double min_side) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Point2> pts(n);
        for (auto& p : pts) p = random_point(rng, 2.0);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            ok = distance(pts[i], pts[(i + 1) % n]) >= min_side;
        if (ok) return Polygon(std::move(pts));
    }
    throw NumericalError("random_polygon: rejection sampling exhausted");
}

Polygon random_cyclic_polygon(std::size_t n, Rng& rng) {
    std::uniform_real_distribution<double> gap_u(0.25, 1.0);
    std::uniform_real_distribution<double> radius_u(0.5, 2.0);
    std::vector<double> gaps(n);
    for (auto& g : gaps) g = gap_u(rng);
    const double total = std::accumulate(gaps.begin(), gaps.end(), 0.0);
    const Point2 center = random_point(rng, 1.0);
    const double radius = radius_u(rng);
    std::uniform_real_distribution<double> phase_u(0.0, kTwoPi);
    double psi = phase_u(rng);
    std::vector<Point2> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        pts[i] = center + radius * Vec2{std::cos(psi), std::sin(psi)};
        psi += gaps[i] * kTwoPi / total;
    }
    return Polygon(std::move(pts));
}

Polygon random_perturbed_cyclic_quadrilateral(Rng& rng, double relative_push) {
    Polygon p = random_cyclic_polygon(4, rng);
    std::uniform_int_distribution<std::size_t> pick(0, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    const std::size_t k = pick(rng);
    const Circle circ = circumcircle(p.vertex(static_cast<std::ptrdiff_t>(k) + 1),
                                     p.vertex(static_cast<std::ptrdiff_t>(k) + 2),
                                     p.vertex(static_cast<std::ptrdiff_t>(k) + 3));
    const Vec2 radial = normalized(p.vertices[k] - circ.center);
    const double push = (coin(rng) ? 1.0 : -1.0) * relative_push * circ.radius;
    std::vector<Point2> pts = p.vertices;
    pts[k] = circ.center + (circ.radius + push) * radial;
    return Polygon(std::move(pts));
}

ZeroLengthPolygon sample_zero_length_polygon(std::size_t n, Rng& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_real_distribution<double> branch_u(-1.2, 1.2);
    for (int attempt = 0; attempt < 20000; ++attempt) {
        Polygon poly = random_polygon(n, rng, 0.3);
        std::vector<Point2> pts = poly.vertices;
        std::vector<int> eps(n);
        int plus = 0;
        for (auto& e : eps) {
            e = coin(rng) ? 1 : -1;
            plus += e > 0;
        }
        if (plus == 0 || plus == static_cast<int>(n)) continue;

        // Correct one vertex whose adjacent edges carry opposite signs: move
        // it onto the hyperbola with foci at its neighbors that zeroes the
        // signed sum. |PF1| - |PF2| ranges over (-|F1F2|, |F1F2|) only.
        std::vector<std::size_t> candidates;
        for (std::size_t k = 0; k < n; ++k)
            if (eps[(k + n - 1) % n] != eps[k]) candidates.push_back(k);
        std::shuffle(candidates.begin(), candidates.end(), rng);

        for (std::size_t k : candidates) {
            const Point2 f1 = pts[(k + n - 1) % n];
            const Point2 f2 = pts[(k + 1) % n];
            double rest = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == k || i == (k + n - 1) % n) continue;
                rest += eps[i] * distance(pts[i], pts[(i + 1) % n]);
            }
            const double tau = -rest * eps[(k + n - 1) % n];  // |PF1| - |PF2|
            const double d = distance(f1, f2);
            std::vector<Point2> moved = pts;
            const Vec2 e1 = (f2 - f1) / d;
            if (std::abs(tau) < 0.9 * d) {
                const Vec2 e2 = rotate90(e1);
                const double a = tau / 2.0;
                const double b = std::sqrt(d * d / 4.0 - a * a);
                const double s = branch_u(rng);
                moved[k] =
                    0.5 * (f1 + f2) + a * std::cosh(s) * e1 + b * std::sinh(s) * e2;
            } else if (std::abs(std::abs(tau) - d) < 1e-9 * d) {
                // Degenerate hyperbola (always the case for n = 3): the
                // closing point sits on the focal line beyond one focus.
                const double t = 0.3 + std::abs(branch_u(rng));
                moved[k] = tau > 0.0 ? f2 + t * e1 : f1 - t * e1;
            } else {
                continue;
            }

            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i)
                ok = distance(moved[i], moved[(i + 1) % n]) >= 0.05;
            if (!ok) continue;

            ZeroLengthPolygon out;
            out.vertices = std::move(moved);
            out.edge_orientations = eps;
            if (std::abs(out.signed_perimeter()) < 1e-10) return out;
        }
    }
    throw NumericalError("sample_zero_length_polygon: rejection sampling exhausted");
}

bool chain_meets_margins(const OrientedChain& chain, const ChainMargins& margins) {
    const std::size_t n = chain.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (distance(chain.centers[i], chain.centers[(i + 1) % n]) < margins.min_edge)
            return false;
    }
    // Oriented edge units and vertex half-angles.
    std::vector<Vec2> u(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const double dr = chain.signed_radii[j] - chain.signed_radii[i];
        if (dr == 0.0) return false;
        u[i] = (dr > 0.0 ? 1.0 : -1.0) * normalized(chain.centers[j] - chain.centers[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& in = u[(i + n - 1) % n];
        const double two_theta =
            reduce_angle(std::atan2(cross(in, u[i]), dot(in, u[i])));
        if (std::sin(two_theta / 2.0) < margins.min_sin_theta) return false;
    }
    return is_generic_chain(chain, margins.min_tangency_sep_rel);
}

OrientedChain sample_generic_chain(std::size_t n, Rng& rng,
                                   const ChainMargins& margins) {
    std::uniform_real_distribution<double> r_u(-2.0, 2.0);
    for (int attempt = 0; attempt < 20000; ++attempt) {
        const ZeroLengthPolygon e = sample_zero_length_polygon(n, rng);
        const OrientedChain chain = lift_polygon(e, r_u(rng));
        if (chain_meets_margins(chain, margins)) return chain;
    }
    throw NumericalError("sample_generic_chain: rejection sampling exhausted");
}

} // namespace equitangent
