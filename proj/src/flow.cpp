#include "equitangent/flow.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

namespace equitangent {

namespace {

// Gaps of a lifted angle sequence, the closing gap completing 2*pi*winding.
std::vector<double> lifted_gaps(const std::vector<double>& psi, int winding) {
    const std::size_t n = psi.size();
    std::vector<double> g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g[i] = psi[i + 1] - psi[i];
    g[n - 1] = psi[0] + kTwoPi * winding - psi[n - 1];
    return g;
}

std::vector<double> alternating_sums(const std::vector<double>& gaps) {
    const std::size_t n = gaps.size();
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double s = std::sin(gaps[(i + k) % n] / 2.0);
            sum += (k % 2 == 0) ? s : -s;
        }
        x[i] = sum;
    }
    return x;
}

// Flow right-hand side on lifted coordinates; checks the running invariants.
std::vector<double> rhs_checked(const std::vector<double>& psi, int winding) {
    const std::size_t n = psi.size();
    const std::vector<double> gaps = lifted_gaps(psi, winding);
    for (double g : gaps) {
        if (g <= 0.0 || g >= kTwoPi)
            throw InvariantLost("vertex ordering broke during integration");
    }
    std::vector<double> x = alternating_sums(gaps);
    for (std::size_t i = 0; i < n; ++i) {
        const double side = 2.0 * std::sin(gaps[i] / 2.0);
        if (x[i] < -1e-12 || x[i] > side + 1e-12)
            throw NonGeometric("tangent length left its side during integration");
    }
    return x;
}

struct FlowStep {
    std::vector<double> psi;
    double arc_time;
};

FlowStep rk4_flow_step(const std::vector<double>& psi, double arc_time,
                       int winding, double h) {
    const std::size_t n = psi.size();
    auto add = [n](const std::vector<double>& a, double c,
                   const std::vector<double>& b) {
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + c * b[i];
        return out;
    };
    const std::vector<double> k1 = rhs_checked(psi, winding);
    const std::vector<double> k2 = rhs_checked(add(psi, h / 2.0, k1), winding);
    const std::vector<double> k3 = rhs_checked(add(psi, h / 2.0, k2), winding);
    const std::vector<double> k4 = rhs_checked(add(psi, h, k3), winding);
    FlowStep out;
    out.psi.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.psi[i] = psi[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    // The alternative clock integrates the speed of vertex 0 alongside.
    out.arc_time =
        arc_time + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    return out;
}

double shift_residual(const std::vector<double>& psi,
                      const std::vector<double>& target) {
    double worst = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i)
        worst = std::max(worst, std::abs(psi[i] - target[i]));
    return worst;
}

} // namespace

InscribedPolygon InscribedPolygon::make(const std::vector<double>& psi,
                                        bool allow_nonconvex) {
    const std::size_t n = psi.size();
    if (n < 2) throw InputError("inscribed polygon needs at least 2 vertices");
    InscribedPolygon out;
    out.psi_.resize(n);
    out.psi_[0] = reduce_angle(psi[0]);
    for (std::size_t i = 1; i < n; ++i) {
        const double gap = reduce_angle(psi[i] - psi[i - 1]);
        if (gap == 0.0)
            throw DegeneratePolygon("coincident vertex angles at index " +
                                    std::to_string(i));
        out.psi_[i] = out.psi_[i - 1] + gap;
    }
    const double span = out.psi_[n - 1] - out.psi_[0];
    const double closing = reduce_angle(out.psi_[0] - out.psi_[n - 1]);
    if (closing == 0.0) throw DegeneratePolygon("coincident vertex angles");
    out.winding_ = static_cast<int>(std::lround((span + closing) / kTwoPi));
    if (!allow_nonconvex && out.winding_ != 1)
        throw PreconditionError(
            "inscribed polygon is not convex (winding " +
            std::to_string(out.winding_) + "); pass allow_nonconvex to accept");
    return out;
}

std::vector<Point2> InscribedPolygon::vertices() const {
    std::vector<Point2> pts(psi_.size());
    for (std::size_t i = 0; i < psi_.size(); ++i)
        pts[i] = {std::cos(psi_[i]), std::sin(psi_[i])};
    return pts;
}

std::vector<double> InscribedPolygon::gaps() const {
    return lifted_gaps(psi_, winding_);
}

std::vector<double> InscribedPolygon::side_lengths() const {
    std::vector<double> g = gaps();
    for (double& v : g) v = 2.0 * std::sin(v / 2.0);
    return g;
}

TangentLengths tangent_lengths(const InscribedPolygon& a) {
    if (a.size() % 2 == 0)
        throw EvenOrder("tangent lengths are unique only for odd order; "
                        "use even_consistency for the even family");
    TangentLengths out;
    const std::vector<double> gaps = a.gaps();
    out.x = alternating_sums(gaps);
    const std::vector<double> sides = a.side_lengths();
    for (std::size_t i = 0; i < out.x.size(); ++i) {
        if (out.x[i] < 0.0 || out.x[i] > sides[i]) out.geometric = false;
    }
    return out;
}

double even_consistency(const InscribedPolygon& a) {
    if (a.size() % 2 != 0) throw OddOrder("consistency test is for even order");
    const std::vector<double> sides = a.side_lengths();
    double sum = 0.0;
    for (std::size_t i = 0; i < sides.size(); ++i)
        sum += (i % 2 == 0) ? sides[i] : -sides[i];
    return sum;
}

std::vector<double> flow_rhs(const InscribedPolygon& a) {
    return tangent_lengths(a).x;
}

FlowTrajectory integrate_flow(const InscribedPolygon& a0, double total_time,
                              std::size_t steps) {
    if (a0.size() % 2 == 0) throw EvenOrder("flow defined for odd order");
    if (steps < 1) throw InputError("steps must be at least 1");
    const double h = total_time / static_cast<double>(steps);

    FlowTrajectory traj;
    traj.winding = a0.winding();
    traj.times.reserve(steps + 1);
    traj.arc_times.reserve(steps + 1);
    traj.states.reserve(steps + 1);

    std::vector<double> psi = a0.psi();
    double arc = 0.0;
    traj.times.push_back(0.0);
    traj.arc_times.push_back(0.0);
    traj.states.push_back(psi);
    for (std::size_t k = 1; k <= steps; ++k) {
        const FlowStep next = rk4_flow_step(psi, arc, traj.winding, h);
        psi = next.psi;
        arc = next.arc_time;
        traj.times.push_back(h * static_cast<double>(k));
        traj.arc_times.push_back(arc);
        traj.states.push_back(psi);
    }
    return traj;
}

MonodromyResult monodromy_defect(const InscribedPolygon& a0, double max_time,
                                 std::size_t steps, double near_match) {
    if (a0.size() % 2 == 0) throw EvenOrder("flow defined for odd order");
    const std::size_t n = a0.size();
    const std::vector<double>& psi0 = a0.psi();
    std::vector<double> target(n);
    for (std::size_t i = 0; i + 1 < n; ++i) target[i] = psi0[i + 1];
    target[n - 1] = psi0[0] + kTwoPi * a0.winding();

    const FlowTrajectory traj = integrate_flow(a0, max_time, steps);
    std::size_t best = 0;
    double best_res = shift_residual(traj.states[0], target);
    for (std::size_t k = 1; k < traj.states.size(); ++k) {
        const double res = shift_residual(traj.states[k], target);
        if (res < best_res) {
            best_res = res;
            best = k;
        }
    }
    if (best_res > near_match)
        throw NoReturn("no cyclic-shift return within max_time (best residual " +
                       std::to_string(best_res) + ")");

    // Golden-section refinement of the max-norm residual around the grid
    // minimum, re-integrating short spans from the nearest stored state.
    const double h = max_time / static_cast<double>(steps);
    const std::size_t lo_idx = best > 0 ? best - 1 : 0;
    const std::vector<double> base = traj.states[lo_idx];
    const double t_base = traj.times[lo_idx];
    auto residual_at = [&](double t) {
        std::vector<double> psi = base;
        const double span = t - t_base;
        if (span > 0.0) {
            const int sub = 32;
            double arc = 0.0;
            for (int i = 0; i < sub; ++i) {
                const FlowStep s =
                    rk4_flow_step(psi, arc, a0.winding(), span / sub);
                psi = s.psi;
                arc = s.arc_time;
            }
        }
        return shift_residual(psi, target);
    };

    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = t_base;
    double hi = std::min(max_time, traj.times[best] + h);
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    double fc = residual_at(c), fd = residual_at(d);
    for (int iter = 0; iter < 80 && hi - lo > 1e-13 * std::max(1.0, hi); ++iter) {
        if (fc < fd) {
            hi = d; d = c; fd = fc;
            c = hi - gr * (hi - lo);
            fc = residual_at(c);
        } else {
            lo = c; c = d; fc = fd;
            d = lo + gr * (hi - lo);
            fd = residual_at(d);
        }
    }
    MonodromyResult out;
    out.return_time = (lo + hi) / 2.0;
    out.defect = residual_at(out.return_time);
    return out;
}

std::vector<Point2> envelope_points(const InscribedPolygon& a) {
    const TangentLengths tl = tangent_lengths(a);
    if (!tl.geometric)
        throw NonGeometric("tangent lengths leave their sides");
    const std::vector<Point2> verts = a.vertices();
    const std::size_t n = verts.size();
    std::vector<Point2> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 dir = normalized(verts[(i + 1) % n] - verts[i]);
        out[i] = verts[i] + tl.x[i] * dir;
    }
    return out;
}

Circle triangle_incircle(const Point2& a, const Point2& b, const Point2& c) {
    const double la = distance(b, c), lb = distance(c, a), lc = distance(a, b);
    const double s = la + lb + lc;
    if (s == 0.0) throw DegeneratePolygon("degenerate triangle");
    const Point2 center = (la * a + lb * b + lc * c) / s;
    const double area = std::abs(cross(b - a, c - a)) / 2.0;
    return Circle{center, 2.0 * area / s};
}

void BicentricConfig::validate() const {
    if (n < 3) throw UnsupportedN("bicentric polygons need n >= 3");
    if (!(inner_radius > 0.0) || center_distance < 0.0 ||
        !(inner_radius + center_distance < outer_radius))
        throw PreconditionError("inner circle must lie strictly inside the outer");
}

double euler_fuss_residual(const BicentricConfig& cfg) {
    cfg.validate();
    const double R = cfg.outer_radius, r = cfg.inner_radius, d = cfg.center_distance;
    if (cfg.n == 3) return R * R - (d * d + 2.0 * r * R);
    if (cfg.n == 4) {
        const double lhs = (R * R - d * d) * (R * R - d * d);
        return lhs - 2.0 * r * r * (R * R + d * d);
    }
    throw UnsupportedN("closed-form relation implemented for n = 3, 4 only; "
                       "use poncelet_closure for general n");
}

double solve_outer_radius(int n, double inner_radius, double center_distance) {
    const double r = inner_radius, d = center_distance;
    if (r <= 0.0 || d < 0.0) throw PreconditionError("need r > 0 and d >= 0");
    if (n == 3) return r + std::sqrt(r * r + d * d);
    if (n == 4)
        return std::sqrt(d * d + r * r + r * std::sqrt(r * r + 4.0 * d * d));
    throw UnsupportedN("outer radius solvable in closed form for n = 3, 4 only");
}

PonceletResult poncelet_closure(const BicentricConfig& cfg, double start_angle) {
    cfg.validate();
    const double R = cfg.outer_radius, r = cfg.inner_radius;
    const Point2 inner_center{cfg.center_distance, 0.0};

    PonceletResult out;
    out.psi.reserve(static_cast<std::size_t>(cfg.n));
    double lifted = reduce_angle(start_angle);
    out.psi.push_back(lifted);
    double angle = lifted;
    for (int k = 0; k < cfg.n; ++k) {
        const Point2 p{R * std::cos(angle), R * std::sin(angle)};
        const Vec2 m = inner_center - p;
        const double dist = norm(m);
        if (dist <= r) throw NoTangent("point not outside the inner circle");
        const double beta = std::asin(r / dist);
        // Forward tangent: the inner circle stays on the left of the ray.
        const Vec2 dir = rotate(m / dist, -beta);
        const double s = -2.0 * dot(p, dir);
        if (s <= 0.0) throw NoTangent("tangent ray does not re-enter the circle");
        const Point2 next = p + s * dir;
        const double next_angle = std::atan2(next.y, next.x);
        const double advance = reduce_angle(next_angle - angle);
        if (advance == 0.0) throw NoTangent("degenerate tangent step");
        lifted += advance;
        angle = next_angle;
        if (k + 1 < cfg.n) out.psi.push_back(lifted);
    }
    const double total = lifted - out.psi.front();
    out.winding = std::max(1, static_cast<int>(std::lround(total / kTwoPi)));
    out.closure_defect = std::abs(reduce_angle_signed(total));
    return out;
}

InscribedPolygon PonceletResult::polygon(bool allow_nonconvex) const {
    return InscribedPolygon::make(psi, allow_nonconvex);
}

double solve_poncelet_inner_radius(int n, double center_distance,
                                   double outer_radius) {
    if (n < 3) throw UnsupportedN("need n >= 3");
    const double d = center_distance, R = outer_radius;
    if (d < 0.0 || d >= R) throw PreconditionError("need 0 <= d < R");

    // Total turning after n tangent steps decreases with the inner radius;
    // winding-1 closure is the root of total(r) = 2*pi.
    auto total = [&](double r) {
        const Point2 inner_center{d, 0.0};
        double angle = 0.1, lifted = 0.0;
        for (int k = 0; k < n; ++k) {
            const Point2 p{R * std::cos(angle), R * std::sin(angle)};
            const Vec2 m = inner_center - p;
            const double dist = norm(m);
            const double beta = std::asin(std::min(1.0, r / dist));
            const Vec2 dir = rotate(m / dist, -beta);
            const double s = -2.0 * dot(p, dir);
            const Point2 next = p + s * dir;
            const double next_angle = std::atan2(next.y, next.x);
            lifted += reduce_angle(next_angle - angle);
            angle = next_angle;
        }
        return lifted;
    };

    double lo = 1e-9 * R, hi = (R - d) * (1.0 - 1e-12);
    double f_lo = total(lo) - kTwoPi, f_hi = total(hi) - kTwoPi;
    if (f_lo < 0.0 || f_hi > 0.0)
        throw NumericalError("winding-1 closure not bracketed");
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = (lo + hi) / 2.0;
        const double f = total(mid) - kTwoPi;
        if (f > 0.0) lo = mid; else hi = mid;
        if (hi - lo < 1e-15 * R) break;
    }
    return (lo + hi) / 2.0;
}

Eigen::MatrixXd linearized_matrix(int n) {
    if (n < 3 || n % 2 == 0) throw EvenOrder("circulant linearization needs odd n >= 3");
    const double scale = std::cos(kPi / n);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 1; k < n; ++k)
            m(i, (i + k) % n) = scale * (k % 2 == 1 ? 1.0 : -1.0);
    return m;
}

std::vector<double> spectrum_magnitudes(int n) {
    if (n < 3 || n % 2 == 0) throw EvenOrder("spectrum formula needs odd n >= 3");
    std::vector<double> out;
    const int m = (n - 1) / 2;
    for (int j = 1; j <= m; ++j)
        out.push_back(std::cos(kPi / n) * std::tan(kPi * j / n));
    return out;
}

std::vector<double> spectrum_eigensolver(int n) {
    const Eigen::MatrixXd m = linearized_matrix(n);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(std::abs(solver.eigenvalues()(i)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntegerRelation> independence_scan(int n, int coeff_bound) {
    if (n < 5 || n % 2 == 0)
        throw UnsupportedN("independence scan needs odd n >= 5");
    if (coeff_bound < 1) throw InputError("coefficient bound must be >= 1");
    const std::vector<double> mags = spectrum_magnitudes(n);
    const std::size_t m = mags.size();

    std::vector<IntegerRelation> found;
    std::vector<int> c(m, -coeff_bound);
    // Odometer over [-B, B]^m; skip zero and negated duplicates (first
    // nonzero coefficient positive).
    while (true) {
        int first_nonzero = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (c[i] != 0) { first_nonzero = c[i]; break; }
        }
        if (first_nonzero > 0) {
            double sum = 0.0;
            for (std::size_t i = 0; i < m; ++i) sum += c[i] * mags[i];
            if (std::abs(sum) < 1e-10) found.push_back({c, sum});
        }
        std::size_t pos = 0;
        while (pos < m && c[pos] == coeff_bound) c[pos++] = -coeff_bound;
        if (pos == m) break;
        ++c[pos];
    }
    return found;
}

LinearizedTrajectory linearized_flow(const Eigen::VectorXd& beta0, int n,
                                     double total_time, std::size_t steps) {
    if (beta0.size() != n) throw InputError("state size must equal n");
    if (std::abs(beta0.sum()) > 1e-9 * std::max(1.0, beta0.norm()))
        throw PreconditionError("perturbation must sum to zero");
    const Eigen::MatrixXd m = linearized_matrix(n);
    const double h = total_time / static_cast<double>(steps);

    LinearizedTrajectory traj;
    traj.times.reserve(steps + 1);
    traj.states.reserve(steps + 1);
    Eigen::VectorXd beta = beta0;
    traj.times.push_back(0.0);
    traj.states.push_back(beta);
    for (std::size_t k = 1; k <= steps; ++k) {
        const Eigen::VectorXd k1 = m * beta;
        const Eigen::VectorXd k2 = m * (beta + h / 2.0 * k1);
        const Eigen::VectorXd k3 = m * (beta + h / 2.0 * k2);
        const Eigen::VectorXd k4 = m * (beta + h * k3);
        beta += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        traj.times.push_back(h * static_cast<double>(k));
        traj.states.push_back(beta);
    }
    return traj;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> eigenplane_basis(int n, int j) {
    if (j < 1 || j > (n - 1) / 2) throw InputError("eigenplane index out of range");
    Eigen::VectorXd re(n), im(n);
    for (int k = 0; k < n; ++k) {
        re(k) = std::cos(kTwoPi * j * k / n);
        im(k) = std::sin(kTwoPi * j * k / n);
    }
    return {re, im};
}

} // namespace equitangent
