#include "equitangent/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace equitangent {

namespace {

struct ArcTangency {
    Point2 point;
    double angle = 0.0;  // radial angle on the arc's circle
    bool near_joint = false;
};

// Tangency point from an exterior point to the arc's circle, kept only when
// it falls within the arc's angular span.
std::optional<ArcTangency> tangency_on_arc(const Arc& arc, const Point2& x,
                                           double joint_slack = 1e-9) {
    const Vec2 m = x - arc.center;
    const double dist = norm(m);
    if (dist <= arc.radius) return std::nullopt;
    const double chi = std::acos(arc.radius / dist);
    const double base = std::atan2(m.y, m.x);
    for (const double sign : {+1.0, -1.0}) {
        const double angle = base + sign * chi;
        if (!arc.contains_angle(angle)) continue;
        ArcTangency out;
        out.angle = angle;
        out.point = arc.point_at(angle);
        const double off_start = reduce_angle(angle - arc.start_angle);
        out.near_joint =
            off_start < joint_slack || arc.extent - off_start < joint_slack;
        return out;
    }
    return std::nullopt;
}

} // namespace

Point2 Arc::point_at(double angle) const {
    return center + radius * Vec2{std::cos(angle), std::sin(angle)};
}

Vec2 Arc::tangent_at(double angle) const {
    return {-std::sin(angle), std::cos(angle)};
}

bool Arc::contains_angle(double angle) const {
    return reduce_angle(angle - start_angle) <= extent;
}

double PiecewiseCircularCurve::c1_residual() const {
    const std::size_t n = arcs.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Arc& a = arcs[i];
        const Arc& b = arcs[(i + 1) % n];
        const double point_gap = distance(a.end_point(), b.start_point());
        const double tangent_gap =
            norm(a.tangent_at(a.end_angle()) - b.tangent_at(b.start_angle));
        worst = std::max(worst, point_gap + tangent_gap);
    }
    return worst;
}

bool PiecewiseCircularCurve::is_single_circle(double tol) const {
    if (arcs.empty()) return false;
    const double s = std::max(1.0, scale());
    for (const Arc& a : arcs) {
        if (distance(a.center, arcs[0].center) > tol * s) return false;
        if (std::abs(a.radius - arcs[0].radius) > tol * s) return false;
    }
    return true;
}

std::vector<Point2> PiecewiseCircularCurve::sample_boundary(
    std::size_t min_per_arc) const {
    std::vector<Point2> pts;
    for (const Arc& a : arcs) {
        const std::size_t count =
            std::max(min_per_arc, static_cast<std::size_t>(a.extent / 0.02));
        for (std::size_t k = 0; k < count; ++k)
            pts.push_back(a.point_at(a.start_angle + a.extent * k / count));
    }
    return pts;
}

bool PiecewiseCircularCurve::contains(const Point2& p) const {
    const std::vector<Point2> poly = sample_boundary();
    bool inside = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        if ((poly[i].y > p.y) != (poly[j].y > p.y) &&
            p.x < (poly[j].x - poly[i].x) * (p.y - poly[i].y) /
                          (poly[j].y - poly[i].y) +
                      poly[i].x)
            inside = !inside;
    }
    return inside;
}

double PiecewiseCircularCurve::scale() const {
    Point2 centroid{};
    for (const Arc& a : arcs) centroid += a.start_point();
    centroid = centroid / static_cast<double>(arcs.size());
    double best = 0.0;
    for (const Arc& a : arcs) {
        best = std::max(best, distance(centroid, a.start_point()));
        best = std::max(best, distance(centroid, a.point_at(a.start_angle + a.extent / 2.0)));
    }
    return best;
}

PiecewiseCircularCurve smooth_regular_ngon(int n, double corner_radius,
                                           double side_radius) {
    if (n < 7) throw UnsupportedN("rounding is set up for regular n-gons, n >= 7");
    const double rho = corner_radius, big = side_radius;
    if (!(rho > 0.0) || !(big > rho))
        throw InfeasibleRadii("need 0 < corner radius < side radius");

    const double delta = kPi / n;
    const double apothem = std::cos(delta);  // unit circumradius
    // Corner-center distance from the origin: internal tangency between the
    // side arc (center on the inward side-midpoint normal) and the corner arc
    // (center on the vertex ray) pins it down.
    const double disc = (big - rho) * (big - rho) -
                        (big - apothem) * (big - apothem) * std::sin(delta) *
                            std::sin(delta);
    if (disc <= 0.0) throw InfeasibleRadii("corner and side arcs cannot meet");
    const double corner_dist = (apothem - big) * std::cos(delta) + std::sqrt(disc);
    if (corner_dist <= 0.0)
        throw InfeasibleRadii("corner arc center falls past the polygon center");

    std::vector<Point2> side_centers(n), corner_centers(n);
    for (int k = 0; k < n; ++k) {
        const double vertex_dir = kTwoPi * k / n;
        const double mid_dir = vertex_dir + delta;
        corner_centers[k] =
            corner_dist * Vec2{std::cos(vertex_dir), std::sin(vertex_dir)};
        side_centers[k] =
            (apothem - big) * Vec2{std::cos(mid_dir), std::sin(mid_dir)};
    }

    PiecewiseCircularCurve curve;
    curve.arcs.reserve(2 * static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const int prev = (k + n - 1) % n;
        const Vec2 join_in = normalized(corner_centers[k] - side_centers[prev]);
        const Vec2 join_out = normalized(corner_centers[k] - side_centers[k]);
        Arc corner;
        corner.center = corner_centers[k];
        corner.radius = rho;
        corner.start_angle = std::atan2(join_in.y, join_in.x);
        corner.extent = reduce_angle(std::atan2(join_out.y, join_out.x) -
                                     corner.start_angle);
        if (corner.extent <= 0.0 || corner.extent >= kPi)
            throw InfeasibleRadii("corner arc extent degenerate");
        curve.arcs.push_back(corner);

        const Vec2 far_out = normalized(corner_centers[(k + 1) % n] - side_centers[k]);
        Arc side;
        side.center = side_centers[k];
        side.radius = big;
        side.start_angle = std::atan2(join_out.y, join_out.x);
        side.extent =
            reduce_angle(std::atan2(far_out.y, far_out.x) - side.start_angle);
        if (side.extent <= 0.0 || side.extent >= kPi)
            throw InfeasibleRadii("side arc extent degenerate");
        curve.arcs.push_back(side);
    }

    const double res = curve.c1_residual();
    if (res > 1e-9)
        throw InfeasibleRadii("arcs do not meet C1: residual " + std::to_string(res));
    return curve;
}

TangentSegments tangent_segment_lengths(const PiecewiseCircularCurve& curve,
                                        const Point2& x) {
    struct Hit {
        Point2 point;
        int arc;
        bool near_joint;
    };
    std::vector<Hit> hits;
    const double scale = curve.scale();
    for (std::size_t i = 0; i < curve.arcs.size(); ++i) {
        const auto t = tangency_on_arc(curve.arcs[i], x);
        if (!t) continue;
        bool duplicate = false;
        for (const Hit& h : hits)
            if (distance(h.point, t->point) < 1e-9 * scale) duplicate = true;
        if (!duplicate)
            hits.push_back({t->point, static_cast<int>(i), t->near_joint});
    }
    if (hits.empty() && curve.contains(x))
        throw PointInside("no tangent segments from an interior point");
    if (hits.size() != 2)
        throw NumericalError("expected two tangency points, found " +
                             std::to_string(hits.size()));
    TangentSegments out;
    // Order so that turning from the first to the second tangency is
    // counterclockwise as seen from x.
    if (cross(hits[0].point - x, hits[1].point - x) < 0.0)
        std::swap(hits[0], hits[1]);
    out.t1 = hits[0].point;
    out.t2 = hits[1].point;
    out.arc1 = hits[0].arc;
    out.arc2 = hits[1].arc;
    out.l1 = distance(x, out.t1);
    out.l2 = distance(x, out.t2);
    out.at_joint = hits[0].near_joint || hits[1].near_joint;
    return out;
}

Line radical_axis(const Circle& c1, const Circle& c2) {
    const Vec2 span = c2.center - c1.center;
    const double d = norm(span);
    if (d < 1e-12 * std::max({1.0, c1.radius, c2.radius}))
        throw ConcentricCircles("radical axis undefined for concentric circles");
    const double offset =
        (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
    Line out;
    out.point = c1.center + offset * (span / d);
    out.direction = rotate90(span / d);
    return out;
}

bool point_inside_polyline(const PolyLine& poly, const Point2& p) {
    const std::vector<Point2>& v = poly.points;
    bool inside = false;
    for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
        if ((v[i].y > p.y) != (v[j].y > p.y) &&
            p.x < (v[j].x - v[i].x) * (p.y - v[i].y) / (v[j].y - v[i].y) + v[i].x)
            inside = !inside;
    }
    return inside;
}

namespace {

struct LocusTracer {
    const PiecewiseCircularCurve& curve;
    double scale;

    Circle arc_circle(int i) const {
        return {curve.arcs[static_cast<std::size_t>(i)].center,
                curve.arcs[static_cast<std::size_t>(i)].radius};
    }

    // Tangent line of the curve at the joint following arc i.
    Line joint_line_after(int i) const {
        const Arc& a = curve.arcs[static_cast<std::size_t>(i)];
        return {a.end_point(), a.tangent_at(a.end_angle())};
    }

    bool valid(const Point2& x, int i, int j) const {
        if (curve.contains(x)) return false;
        const auto ti = tangency_on_arc(curve.arcs[static_cast<std::size_t>(i)], x);
        const auto tj = tangency_on_arc(curve.arcs[static_cast<std::size_t>(j)], x);
        return ti.has_value() && tj.has_value() &&
               distance(ti->point, tj->point) > 1e-9 * scale;
    }

    int arc_count() const { return static_cast<int>(curve.arcs.size()); }
    int next_arc(int i) const { return (i + 1) % arc_count(); }
    int prev_arc(int i) const { return (i + arc_count() - 1) % arc_count(); }

    struct Transition {
        Point2 vertex;
        int new_i, new_j;
    };

    // All joint crossings on the radical axis of the pair, with the pair
    // update they would trigger.
    std::vector<Transition> transitions(int i, int j) const {
        const Line axis = radical_axis(arc_circle(i), arc_circle(j));
        std::vector<Transition> out;
        struct Case {
            int joint_after;
            int which;  // 0: arc i moves, 1: arc j moves
            int forward;
        };
        const Case cases[4] = {{i, 0, 1}, {prev_arc(i), 0, 0},
                               {j, 1, 1}, {prev_arc(j), 1, 0}};
        for (const Case& c : cases) {
            Point2 v;
            try {
                v = intersect_lines(axis, joint_line_after(c.joint_after), 1e-9);
            } catch (const DegenerateCircle&) {
                continue;
            }
            Transition t;
            t.vertex = v;
            t.new_i = i;
            t.new_j = j;
            int& moved = c.which == 0 ? t.new_i : t.new_j;
            moved = c.forward ? next_arc(moved) : prev_arc(moved);
            out.push_back(t);
        }
        return out;
    }
};

} // namespace

EquitangentLocus equitangent_locus(const PiecewiseCircularCurve& curve) {
    EquitangentLocus out;
    if (curve.is_single_circle()) {
        out.whole_exterior = true;
        return out;
    }
    if (curve.arcs.size() < 4)
        throw PreconditionError("locus tracing needs at least 4 arcs");

    LocusTracer tracer{curve, curve.scale()};

    // Starting pair: the rotating chord of the rounded regular polygon spans
    // three sides, so pair a side arc with the corner arc three vertices on.
    // Fall back to a sweep when the layout is not the alternating one.
    std::vector<std::pair<int, int>> start_candidates;
    {
        const int m = tracer.arc_count();
        double mean = 0.0;
        for (const Arc& a : curve.arcs) mean += a.radius;
        mean /= static_cast<double>(m);
        const bool alternating = m % 2 == 0 && [&] {
            for (int k = 0; k < m; ++k) {
                const bool small = curve.arcs[static_cast<std::size_t>(k)].radius < mean;
                if (small != (k % 2 == 0)) return false;
            }
            return true;
        }();
        if (alternating) start_candidates.push_back({1, 6});
        for (int off = 4; off <= m - 4; ++off) start_candidates.push_back({1, 1 + off});
    }

    int i = -1, j = -1;
    Point2 seed;
    for (const auto& [ci, cj] : start_candidates) {
        // Bounded validity window on the pair's radical axis: between two
        // consecutive joint crossings whose midpoint passes the tangency test.
        std::vector<LocusTracer::Transition> ts;
        try {
            ts = tracer.transitions(ci, cj);
        } catch (const ConcentricCircles&) {
            continue;
        }
        if (ts.size() < 2) continue;
        const Line axis = radical_axis(tracer.arc_circle(ci), tracer.arc_circle(cj));
        std::vector<double> params;
        for (const auto& t : ts)
            params.push_back(dot(t.vertex - axis.point, axis.direction));
        std::sort(params.begin(), params.end());
        for (std::size_t k = 0; k + 1 < params.size(); ++k) {
            const Point2 mid =
                axis.point + 0.5 * (params[k] + params[k + 1]) * axis.direction;
            if (params[k + 1] - params[k] > 1e-9 * tracer.scale &&
                tracer.valid(mid, ci, cj)) {
                i = ci;
                j = cj;
                seed = axis.point + params[k] * axis.direction;
                break;
            }
        }
        if (i >= 0) break;
    }
    if (i < 0) throw NumericalError("no starting window for the locus trace");

    const int start_i = i, start_j = j;
    const Point2 start_vertex = seed;
    Point2 cur = seed;
    const int max_steps = 100 + 10 * tracer.arc_count();
    for (int step = 0; step < max_steps; ++step) {
        const LocusTracer::Transition* best = nullptr;
        double best_dist = std::numeric_limits<double>::infinity();
        const std::vector<LocusTracer::Transition> ts = tracer.transitions(i, j);
        std::vector<LocusTracer::Transition> kept;
        for (const auto& t : ts) {
            const double d = distance(t.vertex, cur);
            if (d < 1e-9 * tracer.scale) continue;
            if (!tracer.valid(0.5 * (cur + t.vertex), i, j)) continue;
            kept.push_back(t);
        }
        for (const auto& t : kept) {
            const double d = distance(t.vertex, cur);
            if (d < best_dist) {
                best_dist = d;
                best = &t;
            }
        }
        if (!best) throw NumericalError("locus trace lost the next transition");

        out.polyline.points.push_back(cur);
        out.segment_pairs.push_back({i, j});
        cur = best->vertex;
        // Both tangencies may cross their joints at the same point (this is
        // exact on symmetric curves); merge every transition landing there.
        int ni = i, nj = j;
        for (const auto& t : kept) {
            if (distance(t.vertex, cur) > 1e-9 * tracer.scale) continue;
            if (t.new_i != i) ni = t.new_i;
            if (t.new_j != j) nj = t.new_j;
        }
        i = ni;
        j = nj;
        if (i == start_i && j == start_j &&
            distance(cur, start_vertex) < 1e-6 * tracer.scale) {
            out.polyline.closed = true;
            break;
        }
    }
    if (!out.polyline.closed)
        throw NumericalError("locus trace did not close");
    return out;
}

std::vector<ChordStep> chord_schedule(int n) {
    if (n < 7) throw UnsupportedN("chord schedule defined for n >= 7");
    std::vector<ChordStep> out;
    out.reserve(2 * static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        // Slide the first endpoint one side forward, then the second.
        out.push_back({k % n, (k + 3) % n, k % n, (k + 2) % n});
        out.push_back({(k + 1) % n, (k + 3) % n, k % n, (k + 3) % n});
    }
    return out;
}

} // namespace equitangent
