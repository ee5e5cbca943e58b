#ifndef EQUITANGENT_BIGON_HPP
#define EQUITANGENT_BIGON_HPP

#include <array>
#include <vector>

#include "equitangent/geometry.hpp"

namespace equitangent {

/// A framed 2-gon in support-style coordinates (p, q, r, alpha, phi):
/// r is the half-length of the chord, phi its direction, alpha the common
/// angle of the framing vectors with the chord, and (p, q) encode the
/// midpoint via x = p sin(phi) - q cos(phi), y = -p cos(phi) - q sin(phi).
struct BigonState {
    double p = 0.0;
    double q = 0.0;
    double r = 1.0;  // > 0
    double alpha = kPi / 4.0;
    double phi = 0.0;

    Point2 midpoint() const;
    std::array<double, 5> to_array() const { return {p, q, r, alpha, phi}; }
    static BigonState from_array(const std::array<double, 5>& a) {
        return {a[0], a[1], a[2], a[3], a[4]};
    }
};

struct BigonTangent {
    double dp = 0.0;
    double dq = 0.0;
    double dr = 0.0;
    double dalpha = 0.0;
    double dphi = 0.0;

    std::array<double, 5> to_array() const { return {dp, dq, dr, dalpha, dphi}; }
    static BigonTangent from_array(const std::array<double, 5>& a) {
        return {a[0], a[1], a[2], a[3], a[4]};
    }
    double norm() const;
};

struct BigonEndpoints {
    Point2 b1, b2;
    UnitVector u1, u2;
};

/// Chord endpoints and framing vectors; the two-point framing condition holds
/// exactly, both angles equal alpha.
BigonEndpoints to_endpoints(const BigonState& s);

/// The two annihilating 1-forms evaluated on a tangent:
/// theta1 = dp + q dphi + tan(alpha) dr,
/// theta2 = dq - (p - r cot(alpha)) dphi.
double form_theta1(const BigonState& s, const BigonTangent& t);
double form_theta2(const BigonState& s, const BigonTangent& t);

struct BigonGenerators {
    BigonTangent nu;   // d/dalpha
    BigonTangent xi;   // d/dphi - q d/dp + (p - r cot(alpha)) d/dq
    BigonTangent eta;  // tan(alpha) d/dp - d/dr
};

/// Throws SingularAngle when alpha is within tolerance of a multiple of pi/2.
BigonGenerators generator_fields(const BigonState& s, double tol = 1e-8);

struct BigonRankCertificate {
    int rank = 0;
    std::vector<double> singular_values;
    /// Relative errors of the numerical commutators against the closed forms
    /// (r/sin^2 alpha) d/dq and (1/cos^2 alpha) d/dp.
    double nu_xi_error = 0.0;
    double nu_eta_error = 0.0;
    BigonTangent nu_xi;
    BigonTangent nu_eta;
    double h = 0.0;
};

/// Numerical commutators of the generators by flow composition, plus the rank
/// of the generators together with the two first commutators (5 at generic
/// states).
BigonRankCertificate bigon_commutators(const BigonState& s, double h = 1e-4);

enum class CurveVerdict { Regular, SingularCandidate };

struct SingularTestReport {
    CurveVerdict verdict = CurveVerdict::Regular;
    double max_form_residual = 0.0;
    double max_abs_dphi = 0.0;  // relative to path speed
    /// Cross-check: smallest value over samples of the larger singular value
    /// of the contraction map lambda -> i_w(lambda_1 dtheta1 + lambda_2 dtheta2);
    /// a singular curve keeps its rank at most 1.
    double min_contraction_sigma2 = 0.0;
};

/// Tests a sampled horizontal path for the singular-curve criterion: the
/// chord direction must be stationary (dphi/dt ~ 0 along the whole path).
/// Throws NotHorizontal when the discrete form residuals exceed tolerance
/// relative to the path speed.
SingularTestReport singular_curve_test(const std::vector<double>& times,
                                       const std::vector<BigonState>& states,
                                       double horizontality_tol = 1e-6,
                                       double stationary_tol = 1e-6);

/// Chord-endpoint velocities induced by a tangent, by central differences of
/// to_endpoints. Horizontal tangents produce velocities aligned with the
/// framing vectors.
std::pair<Vec2, Vec2> endpoint_velocities(const BigonState& s,
                                          const BigonTangent& t,
                                          double h = 1e-6);

/// Positive-cone membership: both endpoint velocities are positive multiples
/// of their framing vectors (derived from finite differences of the endpoint
/// map; there is no closed inequality in these coordinates).
bool in_positive_cone(const BigonState& s, const BigonTangent& t,
                      double tol = 1e-6);

} // namespace equitangent

#endif // EQUITANGENT_BIGON_HPP
