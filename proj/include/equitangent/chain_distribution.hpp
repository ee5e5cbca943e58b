#ifndef EQUITANGENT_CHAIN_DISTRIBUTION_HPP
#define EQUITANGENT_CHAIN_DISTRIBUTION_HPP

#include <cstddef>
#include <vector>

#include "equitangent/circle_chain.hpp"

namespace equitangent {

/// An infinitesimal deformation of a chain: per-center velocity plus
/// per-radius rate. Tangent to the chain space when the linearized tangency
/// constraint u_e . (dO_{e+1} - dO_e) = dr_{e+1} - dr_e holds on every edge.
struct ChainTangent {
    std::vector<Vec2> vertex_velocities;
    std::vector<double> radius_rates;

    std::size_t size() const { return radius_rates.size(); }
    /// Ambient coordinates [Ox_0, Oy_0, ..., r_0, ...], length 3n.
    std::vector<double> to_vector() const;
    static ChainTangent from_vector(const std::vector<double>& v);

    double norm() const;
    /// Max edge defect of the linearized tangency constraint.
    double constraint_residual(const OrientedChain& chain) const;
};

/// Unsigned angle in [0, pi/2] between two tangents in ambient coordinates,
/// insensitive to scale and overall sign.
double angle_between_tangents(const ChainTangent& a, const ChainTangent& b);

/// Oriented edge units and vertex angles of a chain. Edge e (joining centers
/// e and e+1, half-integer label e+1/2) points toward the larger signed
/// radius; vertex_angles[i] is the full turn 2*theta_i from the incoming to
/// the outgoing edge unit, in [0, 2*pi).
struct EdgeAngles {
    std::vector<Vec2> edge_units;
    std::vector<double> vertex_angles;
};

EdgeAngles edge_angles(const OrientedChain& chain);

/// Generator moving only center i with velocity J(u_{i+1/2} - u_{i-1/2}) and
/// changing only r_i at rate -sin(2*theta_i).
ChainTangent v_field(const OrientedChain& chain, std::size_t i);

/// Generator attached to edge e: moves its two endpoint centers along the
/// edge unit with speeds 1/sin^2(theta) and changes their radii at rates
/// cos(2*theta)/sin^2(theta), theta taken at the respective vertex.
ChainTangent w_field(const OrientedChain& chain, std::size_t e,
                     double sine_tol = 1e-8);

/// The vertical generator sum(w_e) + sum(cos(theta_i)/sin^3(theta_i) v_i):
/// fixes every center and shrinks every signed radius at rate -2.
ChainTangent kernel_field(const OrientedChain& chain, double sine_tol = 1e-8);

struct FieldSelector {
    enum class Kind { V, W } kind;
    std::size_t index;
    static FieldSelector v(std::size_t i) { return {Kind::V, i}; }
    static FieldSelector w(std::size_t e) { return {Kind::W, e}; }
};

ChainTangent evaluate_field(const OrientedChain& chain, const FieldSelector& f);

/// Commutator estimate by the flow-composition formula
/// [F,G](x) ~ (G_{-h} F_{-h} G_h F_h (x) - x) / h^2, each leg integrated by a
/// fixed-step 4th-order scheme. Second-order accurate in h.
ChainTangent lie_bracket(const OrientedChain& chain, const FieldSelector& f,
                         const FieldSelector& g, double h);

struct RankCertificate {
    int rank = 0;
    std::vector<double> singular_values;
    double h = 0.0;
};

/// Numerical rank of a set of chain tangents, projected onto the constraint
/// tangent space, with singular values below 1e-6 of the largest treated as
/// zero.
RankCertificate span_rank(const OrientedChain& chain,
                          const std::vector<ChainTangent>& tangents);

/// Rank of {v_i} together with the first commutators across every edge;
/// 2n for generic chains with n >= 4.
RankCertificate bracket_rank(const OrientedChain& chain, double h = 1e-4);

/// The billiard-reflection direction at vertex i: the sum of the incoming and
/// outgoing unit edge vectors.
Vec2 birkhoff_direction(const Polygon& p, std::size_t i);

/// An infinitesimal deformation of a framed polygon: vertex velocities plus
/// framing-angle rates.
struct FramedTangent {
    std::vector<Vec2> vertex_velocities;
    std::vector<double> framing_rates;

    std::vector<double> to_vector() const;
    double norm() const;
};

double angle_between_tangents(const FramedTangent& a, const FramedTangent& b);

/// Generator of the framed-polygon distribution. Odd order: vertex k moves
/// with velocity u_k, the framing re-derives from the polygon. Even order:
/// vertices k and k+1 move along their framing vectors with the unique ratio
/// preserving the framing-existence condition to first order.
FramedTangent pushforward_generator(const FramedPolygon& fp, std::size_t k);

/// The chain generator v_{circle_index} carried through the chain <-> framed
/// bijection by central differences with step h. The moved circle's tangency
/// points are polygon vertices circle_index-1 and circle_index.
FramedTangent transported_chain_generator(const OrientedChain& chain,
                                          std::size_t circle_index,
                                          double h = 1e-5);

/// Positive-cone membership: every vertex velocity is a positive multiple of
/// its framing vector (componentwise test; off-axis components must vanish
/// within tolerance for the tangent to lie in the distribution at all).
bool in_positive_cone(const FramedPolygon& fp, const FramedTangent& t,
                      double tol = 1e-9);

} // namespace equitangent

#endif // EQUITANGENT_CHAIN_DISTRIBUTION_HPP
