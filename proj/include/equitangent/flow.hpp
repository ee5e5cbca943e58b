#ifndef EQUITANGENT_FLOW_HPP
#define EQUITANGENT_FLOW_HPP

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "equitangent/geometry.hpp"

namespace equitangent {

/// A polygon inscribed in the unit circle, stored by its vertex angles psi_i,
/// lifted so the sequence strictly increases; the total turn is 2*pi times
/// the winding number (1 for convex polygons, which are the default; pass
/// allow_nonconvex for star-shaped ones).
class InscribedPolygon {
  public:
    static InscribedPolygon make(const std::vector<double>& psi,
                                 bool allow_nonconvex = false);

    std::size_t size() const { return psi_.size(); }
    const std::vector<double>& psi() const { return psi_; }
    int winding() const { return winding_; }
    bool convex() const { return winding_ == 1; }

    std::vector<Point2> vertices() const;
    /// Angular gaps psi_{i+1} - psi_i, the last one closing the cycle.
    std::vector<double> gaps() const;
    /// Chord lengths |A_i A_{i+1}| = 2 sin(gap_i / 2).
    std::vector<double> side_lengths() const;

  private:
    std::vector<double> psi_;
    int winding_ = 1;
};

/// Tangent-segment lengths x_i = |A_i B_{i-1/2}| = |A_i B_{i+1/2}| solving
/// x_i + x_{i+1} = |A_i A_{i+1}|; geometric iff every x_i lies within its side.
struct TangentLengths {
    std::vector<double> x;
    bool geometric = true;
};

/// Closed-form alternating-sum solution, odd order only.
TangentLengths tangent_lengths(const InscribedPolygon& a);

/// Alternating side-length sum; zero (within tolerance) iff an even polygon
/// carries tangent lengths, in which case a 1-parameter family of them exists.
double even_consistency(const InscribedPolygon& a);

/// Right-hand side of the equitangent flow dpsi_i/dt = x_i, odd order.
std::vector<double> flow_rhs(const InscribedPolygon& a);

struct FlowTrajectory {
    std::vector<double> times;
    /// The alternative clock in which vertex 0 moves with unit speed.
    std::vector<double> arc_times;
    std::vector<std::vector<double>> states;  // lifted psi per sample
    int winding = 1;
};

/// Fixed-step 4th-order integration of the equitangent flow with per-step
/// invariant monitoring (monotone psi, geometric tangent lengths).
FlowTrajectory integrate_flow(const InscribedPolygon& a0, double total_time,
                              std::size_t steps);

struct MonodromyResult {
    double return_time = 0.0;
    double defect = 0.0;
};

/// First time at which the flow carries psi(0) closest to its one-step cyclic
/// shift (each psi_i advanced to psi_{i+1}); the defect certifies closure of
/// the enveloped curve. Throws NoReturn when no near-match occurs by max_time.
MonodromyResult monodromy_defect(const InscribedPolygon& a0, double max_time,
                                 std::size_t steps = 20000,
                                 double near_match = 1e-2);

/// Tangency points B_{i+1/2} of the enveloped curve on the sides.
std::vector<Point2> envelope_points(const InscribedPolygon& a);

/// Incircle of a triangle.
Circle triangle_incircle(const Point2& a, const Point2& b, const Point2& c);

/// A pair of nested circles: outer radius R, inner radius r, center distance d.
struct BicentricConfig {
    int n = 3;
    double outer_radius = 1.0;  // R
    double inner_radius = 0.5;  // r
    double center_distance = 0.0;  // d

    void validate() const;
};

/// Defect of the closed-form relation tying (r, d, R):
/// R^2 - d^2 - 2rR for n = 3, (R^2 - d^2)^2 - 2r^2 (R^2 + d^2) for n = 4.
double euler_fuss_residual(const BicentricConfig& cfg);

/// Outer radius solving the n = 3 or n = 4 relation for given (r, d).
double solve_outer_radius(int n, double inner_radius, double center_distance);

struct PonceletResult {
    double closure_defect = 0.0;
    std::vector<double> psi;  // vertex angles on the outer circle, lifted
    int winding = 1;

    InscribedPolygon polygon(bool allow_nonconvex = false) const;
};

/// Iterates the forward tangent-line map n times from the given start angle
/// on the outer circle; the closure defect is the angular distance between
/// the final and starting points (start-independent by the porism).
PonceletResult poncelet_closure(const BicentricConfig& cfg, double start_angle);

/// Inner radius for which the n-gon closes with winding 1, by bisection.
double solve_poncelet_inner_radius(int n, double center_distance,
                                   double outer_radius = 1.0);

/// The circulant linearization matrix around the regular n-gon solution:
/// cos(pi/n) times the circulant with first row (0, 1, -1, ..., -1). Odd n.
Eigen::MatrixXd linearized_matrix(int n);

/// Closed-form magnitudes |lambda_j| = cos(pi/n) tan(pi j / n), j = 1..(n-1)/2.
std::vector<double> spectrum_magnitudes(int n);

/// All n eigenvalue magnitudes of linearized_matrix(n) from a general-purpose
/// eigensolver, sorted ascending (the independent route).
std::vector<double> spectrum_eigensolver(int n);

struct IntegerRelation {
    std::vector<int> coefficients;
    double value = 0.0;
};

/// Exhaustive scan for integer relations sum(c_j |lambda_j|) with
/// |c_j| <= coeff_bound; reports combinations vanishing below 1e-10.
/// Odd n >= 5.
std::vector<IntegerRelation> independence_scan(int n, int coeff_bound);

struct LinearizedTrajectory {
    std::vector<double> times;
    std::vector<Eigen::VectorXd> states;
};

/// Integrates beta' = M_n beta with the classical 4th-order scheme;
/// requires sum(beta0) = 0, which the flow conserves.
LinearizedTrajectory linearized_flow(const Eigen::VectorXd& beta0, int n,
                                     double total_time, std::size_t steps);

/// Real basis (re, im) of the j-th eigenplane of the circulant matrix.
std::pair<Eigen::VectorXd, Eigen::VectorXd> eigenplane_basis(int n, int j);

} // namespace equitangent

#endif // EQUITANGENT_FLOW_HPP
