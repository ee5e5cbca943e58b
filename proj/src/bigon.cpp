#include "equitangent/bigon.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace equitangent {

namespace {

using State5 = std::array<double, 5>;

State5 axpy(const State5& x, double a, const State5& y) {
    State5 out;
    for (int i = 0; i < 5; ++i) out[i] = x[i] + a * y[i];
    return out;
}

void check_angle(double alpha, double tol) {
    if (std::abs(std::sin(alpha)) < tol || std::abs(std::cos(alpha)) < tol)
        throw SingularAngle("framing angle too close to a multiple of pi/2");
}

BigonTangent nu_at(const BigonState&) { return {0.0, 0.0, 0.0, 1.0, 0.0}; }

BigonTangent xi_at(const BigonState& s) {
    return {-s.q, s.p - s.r / std::tan(s.alpha), 0.0, 0.0, 1.0};
}

BigonTangent eta_at(const BigonState& s) {
    return {std::tan(s.alpha), 0.0, -1.0, 0.0, 0.0};
}

template <typename Field>
State5 rk4_step(const State5& z, const Field& f, double h) {
    const State5 k1 = f(BigonState::from_array(z)).to_array();
    const State5 k2 = f(BigonState::from_array(axpy(z, h / 2.0, k1))).to_array();
    const State5 k3 = f(BigonState::from_array(axpy(z, h / 2.0, k2))).to_array();
    const State5 k4 = f(BigonState::from_array(axpy(z, h, k3))).to_array();
    State5 out;
    for (int i = 0; i < 5; ++i)
        out[i] = z[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

template <typename Field>
State5 flow(State5 z, const Field& f, double time, int substeps = 2) {
    const double h = time / substeps;
    for (int i = 0; i < substeps; ++i) z = rk4_step(z, f, h);
    return z;
}

template <typename FieldF, typename FieldG>
State5 flow_commutator(const State5& z0, const FieldF& f, const FieldG& g,
                       double h) {
    State5 z = flow(z0, f, h);
    z = flow(z, g, h);
    z = flow(z, f, -h);
    z = flow(z, g, -h);
    State5 diff;
    for (int i = 0; i < 5; ++i) diff[i] = (z[i] - z0[i]) / (h * h);
    return diff;
}

// Flow-composition commutator with one extrapolation step, second order in h.
template <typename FieldF, typename FieldG>
BigonTangent flow_bracket(const BigonState& s, const FieldF& f, const FieldG& g,
                          double h) {
    const State5 z0 = s.to_array();
    const State5 coarse = flow_commutator(z0, f, g, h);
    const State5 fine = flow_commutator(z0, f, g, h / 2.0);
    State5 out;
    for (int i = 0; i < 5; ++i) out[i] = 2.0 * fine[i] - coarse[i];
    return BigonTangent::from_array(out);
}

double rel_error(const BigonTangent& got, const BigonTangent& want) {
    const State5 a = got.to_array(), b = want.to_array();
    double diff = 0.0, ref = 0.0;
    for (int i = 0; i < 5; ++i) {
        diff += (a[i] - b[i]) * (a[i] - b[i]);
        ref += b[i] * b[i];
    }
    return std::sqrt(diff) / std::max(1e-300, std::sqrt(ref));
}

// Coefficient matrices of the exterior derivatives: Omega(v, w) = v^T M w.
// dtheta1 = dq ^ dphi - sec^2(alpha) dalpha ^ dr
// dtheta2 = dphi ^ dp - cot(alpha) dphi ^ dr + r csc^2(alpha) dphi ^ dalpha
using Mat5 = Eigen::Matrix<double, 5, 5>;

Mat5 dtheta1_matrix(const BigonState& s) {
    Mat5 m = Mat5::Zero();
    const double sec2 = 1.0 / (std::cos(s.alpha) * std::cos(s.alpha));
    m(1, 4) = 1.0;  m(4, 1) = -1.0;    // dq ^ dphi
    m(3, 2) = -sec2; m(2, 3) = sec2;   // -sec^2 dalpha ^ dr
    return m;
}

Mat5 dtheta2_matrix(const BigonState& s) {
    Mat5 m = Mat5::Zero();
    const double cot = std::cos(s.alpha) / std::sin(s.alpha);
    const double csc2 = 1.0 / (std::sin(s.alpha) * std::sin(s.alpha));
    m(4, 0) = 1.0;        m(0, 4) = -1.0;        // dphi ^ dp
    m(4, 2) = -cot;       m(2, 4) = cot;         // -cot dphi ^ dr
    m(4, 3) = s.r * csc2; m(3, 4) = -s.r * csc2; // r csc^2 dphi ^ dalpha
    return m;
}

} // namespace

Point2 BigonState::midpoint() const {
    const double sp = std::sin(phi), cp = std::cos(phi);
    return {p * sp - q * cp, -p * cp - q * sp};
}

double BigonTangent::norm() const {
    return std::sqrt(dp * dp + dq * dq + dr * dr + dalpha * dalpha + dphi * dphi);
}

BigonEndpoints to_endpoints(const BigonState& s) {
    if (s.r <= 0.0) throw PreconditionError("bigon half-length must be positive");
    const Point2 m = s.midpoint();
    const Vec2 chord{std::cos(s.phi), std::sin(s.phi)};
    BigonEndpoints out;
    out.b1 = m - s.r * chord;
    out.b2 = m + s.r * chord;
    out.u1 = UnitVector(s.phi - s.alpha);
    out.u2 = UnitVector(s.phi + s.alpha);
    return out;
}

double form_theta1(const BigonState& s, const BigonTangent& t) {
    return t.dp + s.q * t.dphi + std::tan(s.alpha) * t.dr;
}

double form_theta2(const BigonState& s, const BigonTangent& t) {
    return t.dq - (s.p - s.r / std::tan(s.alpha)) * t.dphi;
}

BigonGenerators generator_fields(const BigonState& s, double tol) {
    check_angle(s.alpha, tol);
    return {nu_at(s), xi_at(s), eta_at(s)};
}

BigonRankCertificate bigon_commutators(const BigonState& s, double h) {
    check_angle(s.alpha, 1e-8);
    if (s.r <= 0.0) throw PreconditionError("bigon half-length must be positive");

    BigonRankCertificate cert;
    cert.h = h;
    cert.nu_xi = flow_bracket(s, nu_at, xi_at, h);
    cert.nu_eta = flow_bracket(s, nu_at, eta_at, h);

    const double s2 = std::sin(s.alpha) * std::sin(s.alpha);
    const double c2 = std::cos(s.alpha) * std::cos(s.alpha);
    cert.nu_xi_error = rel_error(cert.nu_xi, {0.0, s.r / s2, 0.0, 0.0, 0.0});
    cert.nu_eta_error = rel_error(cert.nu_eta, {1.0 / c2, 0.0, 0.0, 0.0, 0.0});

    const BigonGenerators gen = generator_fields(s);
    Eigen::Matrix<double, 5, 5> m;
    const BigonTangent rows[5] = {gen.nu, gen.xi, gen.eta, cert.nu_xi, cert.nu_eta};
    for (int i = 0; i < 5; ++i) {
        const auto a = rows[i].to_array();
        for (int j = 0; j < 5; ++j) m(i, j) = a[j];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    cert.singular_values.assign(sv.data(), sv.data() + sv.size());
    cert.rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-6 * sv(0)) ++cert.rank;
    return cert;
}

std::pair<Vec2, Vec2> endpoint_velocities(const BigonState& s,
                                          const BigonTangent& t, double h) {
    const State5 z = s.to_array();
    const State5 d = t.to_array();
    const BigonEndpoints plus = to_endpoints(BigonState::from_array(axpy(z, h, d)));
    const BigonEndpoints minus =
        to_endpoints(BigonState::from_array(axpy(z, -h, d)));
    return {(plus.b1 - minus.b1) / (2.0 * h), (plus.b2 - minus.b2) / (2.0 * h)};
}

bool in_positive_cone(const BigonState& s, const BigonTangent& t, double tol) {
    const auto [v1, v2] = endpoint_velocities(s, t);
    const BigonEndpoints e = to_endpoints(s);
    const double scale = std::max(norm(v1), norm(v2));
    if (scale == 0.0) return false;
    for (const auto& [v, u] : {std::pair<Vec2, UnitVector>{v1, e.u1}, {v2, e.u2}}) {
        if (std::abs(cross(u.vec(), v)) > tol * scale) return false;
        if (dot(u.vec(), v) <= tol * scale) return false;
    }
    return true;
}

SingularTestReport singular_curve_test(const std::vector<double>& times,
                                       const std::vector<BigonState>& states,
                                       double horizontality_tol,
                                       double stationary_tol) {
    if (times.size() != states.size() || times.size() < 2)
        throw InputError("path needs matching times and at least 2 samples");

    SingularTestReport report;
    report.min_contraction_sigma2 = std::numeric_limits<double>::infinity();
    double max_speed = 0.0;
    std::vector<BigonTangent> tangents;
    std::vector<BigonState> midpoints;

    for (std::size_t i = 0; i + 1 < states.size(); ++i) {
        const double dt = times[i + 1] - times[i];
        if (dt <= 0.0) throw InputError("path times must increase");
        const State5 a = states[i].to_array(), b = states[i + 1].to_array();
        State5 rate, mid;
        for (int c = 0; c < 5; ++c) {
            double d = b[c] - a[c];
            if (c == 3 || c == 4) d = reduce_angle_signed(d);  // angular coords
            rate[c] = d / dt;
            mid[c] = a[c] + d / 2.0;
        }
        tangents.push_back(BigonTangent::from_array(rate));
        midpoints.push_back(BigonState::from_array(mid));
        max_speed = std::max(max_speed, tangents.back().norm());
    }
    if (max_speed == 0.0) max_speed = 1.0;

    for (std::size_t i = 0; i < tangents.size(); ++i) {
        const double r1 = std::abs(form_theta1(midpoints[i], tangents[i]));
        const double r2 = std::abs(form_theta2(midpoints[i], tangents[i]));
        report.max_form_residual = std::max(report.max_form_residual, std::max(r1, r2));
    }
    if (report.max_form_residual > horizontality_tol * max_speed)
        throw NotHorizontal("discrete form residual " +
                            std::to_string(report.max_form_residual));

    for (std::size_t i = 0; i < tangents.size(); ++i) {
        report.max_abs_dphi =
            std::max(report.max_abs_dphi, std::abs(tangents[i].dphi) / max_speed);

        // lambda-sweep cross-check: rows are w contracted with each dtheta.
        Eigen::Matrix<double, 2, 5> k;
        Eigen::Matrix<double, 5, 1> w;
        const auto t = tangents[i].to_array();
        for (int c = 0; c < 5; ++c) w(c) = t[c];
        k.row(0) = (w.transpose() * dtheta1_matrix(midpoints[i]));
        k.row(1) = (w.transpose() * dtheta2_matrix(midpoints[i]));
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(k);
        const double sigma2 = svd.singularValues()(1) / std::max(max_speed, 1e-300);
        report.min_contraction_sigma2 = std::min(report.min_contraction_sigma2, sigma2);
    }

    report.verdict = report.max_abs_dphi < stationary_tol
                         ? CurveVerdict::SingularCandidate
                         : CurveVerdict::Regular;
    return report;
}

} // namespace equitangent
