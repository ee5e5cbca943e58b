#include "equitangent/chain_distribution.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace equitangent {

namespace {

// Raw chain coordinates without invariant enforcement; flow integration must
// evaluate fields at intermediate states that only satisfy the tangency
// constraint to integration order.
struct ChainState {
    std::vector<Point2> centers;
    std::vector<double> radii;

    std::size_t size() const { return radii.size(); }

    static ChainState of(const OrientedChain& chain) {
        return {chain.centers, chain.signed_radii};
    }

    std::vector<double> to_vector() const {
        const std::size_t n = size();
        std::vector<double> v(3 * n);
        for (std::size_t i = 0; i < n; ++i) {
            v[2 * i] = centers[i].x;
            v[2 * i + 1] = centers[i].y;
            v[2 * n + i] = radii[i];
        }
        return v;
    }

    static ChainState from_vector(const std::vector<double>& v) {
        const std::size_t n = v.size() / 3;
        ChainState s;
        s.centers.resize(n);
        s.radii.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            s.centers[i] = {v[2 * i], v[2 * i + 1]};
            s.radii[i] = v[2 * n + i];
        }
        return s;
    }
};

struct StateFrame {
    std::vector<Vec2> edge_units;
    std::vector<double> vertex_angles;  // 2*theta_i
};

StateFrame state_frame(const ChainState& s) {
    const std::size_t n = s.size();
    StateFrame f;
    f.edge_units.resize(n);
    f.vertex_angles.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const double dr = s.radii[j] - s.radii[i];
        if (dr == 0.0)
            throw EqualSignedRadii("edge orientation undefined at index " +
                                   std::to_string(i));
        f.edge_units[i] =
            (dr > 0.0 ? 1.0 : -1.0) * normalized(s.centers[j] - s.centers[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& in = f.edge_units[(i + n - 1) % n];
        const Vec2& out = f.edge_units[i];
        f.vertex_angles[i] = reduce_angle(std::atan2(cross(in, out), dot(in, out)));
    }
    return f;
}

ChainTangent v_field_state(const ChainState& s, const StateFrame& f, std::size_t i) {
    const std::size_t n = s.size();
    ChainTangent t;
    t.vertex_velocities.assign(n, Vec2{});
    t.radius_rates.assign(n, 0.0);
    const Vec2& in = f.edge_units[(i + n - 1) % n];
    const Vec2& out = f.edge_units[i];
    t.vertex_velocities[i] = rotate90(out - in);
    t.radius_rates[i] = -std::sin(f.vertex_angles[i]);
    return t;
}

ChainTangent w_field_state(const ChainState& s, const StateFrame& f,
                           std::size_t e, double sine_tol) {
    const std::size_t n = s.size();
    const std::size_t a = e, b = (e + 1) % n;
    const double sa = std::sin(f.vertex_angles[a] / 2.0);
    const double sb = std::sin(f.vertex_angles[b] / 2.0);
    if (std::abs(sa) < sine_tol || std::abs(sb) < sine_tol)
        throw VanishingSine("vertex angle sine below tolerance on edge " +
                            std::to_string(e));
    ChainTangent t;
    t.vertex_velocities.assign(n, Vec2{});
    t.radius_rates.assign(n, 0.0);
    const Vec2& u = f.edge_units[e];
    t.vertex_velocities[a] = u / (sa * sa);
    t.vertex_velocities[b] = u / (sb * sb);
    t.radius_rates[a] = std::cos(f.vertex_angles[a]) / (sa * sa);
    t.radius_rates[b] = std::cos(f.vertex_angles[b]) / (sb * sb);
    return t;
}

ChainTangent evaluate_field_state(const ChainState& s, const FieldSelector& sel) {
    const StateFrame f = state_frame(s);
    if (sel.kind == FieldSelector::Kind::V) return v_field_state(s, f, sel.index);
    return w_field_state(s, f, sel.index, 1e-8);
}

std::vector<double> axpy(const std::vector<double>& x, double a,
                         const std::vector<double>& y) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + a * y[i];
    return out;
}

// One classical 4th-order step of z' = field(z).
std::vector<double> rk4_step(const std::vector<double>& z,
                             const FieldSelector& sel, double h) {
    auto f = [&sel](const std::vector<double>& state) {
        return evaluate_field_state(ChainState::from_vector(state), sel).to_vector();
    };
    const std::vector<double> k1 = f(z);
    const std::vector<double> k2 = f(axpy(z, h / 2.0, k1));
    const std::vector<double> k3 = f(axpy(z, h / 2.0, k2));
    const std::vector<double> k4 = f(axpy(z, h, k3));
    std::vector<double> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        out[i] = z[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

std::vector<double> flow(std::vector<double> z, const FieldSelector& sel,
                         double time, int substeps = 2) {
    const double h = time / substeps;
    for (int i = 0; i < substeps; ++i) z = rk4_step(z, sel, h);
    return z;
}

std::vector<int> radius_gap_signs(const ChainState& s) {
    const std::size_t n = s.size();
    std::vector<int> signs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double dr = s.radii[(i + 1) % n] - s.radii[i];
        signs[i] = dr > 0.0 ? 1 : (dr < 0.0 ? -1 : 0);
    }
    return signs;
}

int svd_rank(const Eigen::MatrixXd& m, std::vector<double>* singular_values) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (singular_values) singular_values->assign(sv.data(), sv.data() + sv.size());
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-6 * sv(0)) ++rank;
    return rank;
}

std::size_t wrap(std::ptrdiff_t i, std::size_t n) {
    std::ptrdiff_t m = i % static_cast<std::ptrdiff_t>(n);
    if (m < 0) m += static_cast<std::ptrdiff_t>(n);
    return static_cast<std::size_t>(m);
}

} // namespace

std::vector<double> ChainTangent::to_vector() const {
    const std::size_t n = size();
    std::vector<double> v(3 * n);
    for (std::size_t i = 0; i < n; ++i) {
        v[2 * i] = vertex_velocities[i].x;
        v[2 * i + 1] = vertex_velocities[i].y;
        v[2 * n + i] = radius_rates[i];
    }
    return v;
}

ChainTangent ChainTangent::from_vector(const std::vector<double>& v) {
    const std::size_t n = v.size() / 3;
    ChainTangent t;
    t.vertex_velocities.resize(n);
    t.radius_rates.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        t.vertex_velocities[i] = {v[2 * i], v[2 * i + 1]};
        t.radius_rates[i] = v[2 * n + i];
    }
    return t;
}

double ChainTangent::norm() const {
    double sum = 0.0;
    for (const Vec2& v : vertex_velocities) sum += squared_norm(v);
    for (double r : radius_rates) sum += r * r;
    return std::sqrt(sum);
}

double ChainTangent::constraint_residual(const OrientedChain& chain) const {
    const std::size_t n = size();
    const EdgeAngles f = edge_angles(chain);
    double worst = 0.0;
    for (std::size_t e = 0; e < n; ++e) {
        const std::size_t a = e, b = (e + 1) % n;
        const double lhs =
            dot(f.edge_units[e], vertex_velocities[b] - vertex_velocities[a]);
        worst = std::max(worst, std::abs(lhs - (radius_rates[b] - radius_rates[a])));
    }
    return worst;
}

double angle_between_tangents(const ChainTangent& a, const ChainTangent& b) {
    const std::vector<double> va = a.to_vector(), vb = b.to_vector();
    double ab = 0.0, aa = 0.0, bb = 0.0;
    for (std::size_t i = 0; i < va.size(); ++i) {
        ab += va[i] * vb[i];
        aa += va[i] * va[i];
        bb += vb[i] * vb[i];
    }
    if (aa == 0.0 || bb == 0.0) return 0.0;
    const double c = std::min(1.0, std::abs(ab) / std::sqrt(aa * bb));
    return std::acos(c);
}

EdgeAngles edge_angles(const OrientedChain& chain) {
    const StateFrame f = state_frame(ChainState::of(chain));
    return {f.edge_units, f.vertex_angles};
}

ChainTangent v_field(const OrientedChain& chain, std::size_t i) {
    const ChainState s = ChainState::of(chain);
    return v_field_state(s, state_frame(s), i);
}

ChainTangent w_field(const OrientedChain& chain, std::size_t e, double sine_tol) {
    const ChainState s = ChainState::of(chain);
    return w_field_state(s, state_frame(s), e, sine_tol);
}

ChainTangent kernel_field(const OrientedChain& chain, double sine_tol) {
    const ChainState s = ChainState::of(chain);
    const StateFrame f = state_frame(s);
    const std::size_t n = s.size();
    ChainTangent out;
    out.vertex_velocities.assign(n, Vec2{});
    out.radius_rates.assign(n, 0.0);
    for (std::size_t e = 0; e < n; ++e) {
        const ChainTangent w = w_field_state(s, f, e, sine_tol);
        for (std::size_t i = 0; i < n; ++i) {
            out.vertex_velocities[i] += w.vertex_velocities[i];
            out.radius_rates[i] += w.radius_rates[i];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double theta = f.vertex_angles[i] / 2.0;
        const double st = std::sin(theta);
        if (std::abs(st) < sine_tol)
            throw VanishingSine("vertex angle sine below tolerance at vertex " +
                                std::to_string(i));
        const double coeff = std::cos(theta) / (st * st * st);
        const ChainTangent v = v_field_state(s, f, i);
        out.vertex_velocities[i] += coeff * v.vertex_velocities[i];
        out.radius_rates[i] += coeff * v.radius_rates[i];
    }
    return out;
}

ChainTangent evaluate_field(const OrientedChain& chain, const FieldSelector& f) {
    return evaluate_field_state(ChainState::of(chain), f);
}

namespace {

std::vector<double> flow_commutator(const std::vector<double>& z0,
                                    const FieldSelector& f,
                                    const FieldSelector& g, double h) {
    const std::vector<int> signs0 = radius_gap_signs(ChainState::from_vector(z0));
    std::vector<double> z = flow(z0, f, h);
    z = flow(z, g, h);
    z = flow(z, f, -h);
    z = flow(z, g, -h);

    const ChainState end = ChainState::from_vector(z);
    if (radius_gap_signs(end) != signs0)
        throw StepTooLarge("edge orientation flipped during flow composition");
    OrientedChain check(end.centers, end.radii, 1e-4);
    (void)check;

    std::vector<double> diff(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) diff[i] = (z[i] - z0[i]) / (h * h);
    return diff;
}

} // namespace

ChainTangent lie_bracket(const OrientedChain& chain, const FieldSelector& f,
                         const FieldSelector& g, double h) {
    if (h <= 0.0) throw InputError("bracket step must be positive");
    const std::vector<double> z0 = ChainState::of(chain).to_vector();
    // One step of extrapolation removes the O(h) term of the composition
    // estimate, leaving a second-order accurate commutator.
    const std::vector<double> coarse = flow_commutator(z0, f, g, h);
    const std::vector<double> fine = flow_commutator(z0, f, g, h / 2.0);
    std::vector<double> out(z0.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = 2.0 * fine[i] - coarse[i];
    return ChainTangent::from_vector(out);
}

RankCertificate span_rank(const OrientedChain& chain,
                          const std::vector<ChainTangent>& tangents) {
    const std::size_t n = chain.size();
    const EdgeAngles f = edge_angles(chain);

    // Constraint Jacobian: one row per edge in ambient coordinates.
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), 3 * n);
    for (std::size_t e = 0; e < n; ++e) {
        const std::size_t va = e, vb = (e + 1) % n;
        const Vec2& u = f.edge_units[e];
        a(e, 2 * va) -= u.x;
        a(e, 2 * va + 1) -= u.y;
        a(e, 2 * vb) += u.x;
        a(e, 2 * vb + 1) += u.y;
        a(e, 2 * n + va) += 1.0;
        a(e, 2 * n + vb) -= 1.0;
    }

    Eigen::MatrixXd m(static_cast<Eigen::Index>(tangents.size()), 3 * n);
    for (std::size_t t = 0; t < tangents.size(); ++t) {
        const std::vector<double> v = tangents[t].to_vector();
        for (std::size_t c = 0; c < 3 * n; ++c) m(t, c) = v[c];
    }
    // Restrict to the constraint tangent space.
    const Eigen::MatrixXd gram = a * a.transpose();
    m -= (m * a.transpose()) * gram.ldlt().solve(a);

    RankCertificate cert;
    cert.rank = svd_rank(m, &cert.singular_values);
    return cert;
}

RankCertificate bracket_rank(const OrientedChain& chain, double h) {
    if (!is_generic_chain(chain)) throw NonGenericChain();
    const std::size_t n = chain.size();
    std::vector<ChainTangent> tangents;
    tangents.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) tangents.push_back(v_field(chain, i));
    for (std::size_t e = 0; e < n; ++e)
        tangents.push_back(lie_bracket(chain, FieldSelector::v(e),
                                       FieldSelector::v((e + 1) % n), h));
    RankCertificate cert = span_rank(chain, tangents);
    cert.h = h;
    return cert;
}

Vec2 birkhoff_direction(const Polygon& p, std::size_t i) {
    const std::ptrdiff_t k = static_cast<std::ptrdiff_t>(i);
    return p.side_direction(k - 1) + p.side_direction(k);
}

std::vector<double> FramedTangent::to_vector() const {
    const std::size_t n = framing_rates.size();
    std::vector<double> v(3 * n);
    for (std::size_t i = 0; i < n; ++i) {
        v[2 * i] = vertex_velocities[i].x;
        v[2 * i + 1] = vertex_velocities[i].y;
        v[2 * n + i] = framing_rates[i];
    }
    return v;
}

double FramedTangent::norm() const {
    double sum = 0.0;
    for (const Vec2& v : vertex_velocities) sum += squared_norm(v);
    for (double r : framing_rates) sum += r * r;
    return std::sqrt(sum);
}

double angle_between_tangents(const FramedTangent& a, const FramedTangent& b) {
    const std::vector<double> va = a.to_vector(), vb = b.to_vector();
    double ab = 0.0, aa = 0.0, bb = 0.0;
    for (std::size_t i = 0; i < va.size(); ++i) {
        ab += va[i] * vb[i];
        aa += va[i] * va[i];
        bb += vb[i] * vb[i];
    }
    if (aa == 0.0 || bb == 0.0) return 0.0;
    const double c = std::min(1.0, std::abs(ab) / std::sqrt(aa * bb));
    return std::acos(c);
}

FramedTangent pushforward_generator(const FramedPolygon& fp, std::size_t k) {
    const std::size_t n = fp.size();
    FramedTangent out;
    out.vertex_velocities.assign(n, Vec2{});
    out.framing_rates.assign(n, 0.0);

    if (n % 2 == 1) {
        // Move vertex k along its framing vector; the framing directions are
        // functions of the polygon (alternating side-direction sums), so the
        // two touched sides propagate rates to every framing angle.
        const Vec2 u = fp.framing(static_cast<std::ptrdiff_t>(k)).vec();
        out.vertex_velocities[k] = u;
        const std::ptrdiff_t kk = static_cast<std::ptrdiff_t>(k);
        const double dphi_prev =
            cross(fp.polygon.side_direction(kk - 1), u) / fp.polygon.side_length(kk - 1);
        const double dphi_next =
            -cross(fp.polygon.side_direction(kk), u) / fp.polygon.side_length(kk);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t jp = wrap(static_cast<std::ptrdiff_t>(k) - 1 -
                                        static_cast<std::ptrdiff_t>(i), n);
            const std::size_t jn = wrap(static_cast<std::ptrdiff_t>(k) -
                                        static_cast<std::ptrdiff_t>(i), n);
            out.framing_rates[i] += (jp % 2 == 0 ? 1.0 : -1.0) * dphi_prev;
            out.framing_rates[i] += (jn % 2 == 0 ? 1.0 : -1.0) * dphi_next;
        }
        return out;
    }

    // Even order: move vertices k and k+1 along their framing vectors with
    // the ratio that keeps the alternating exterior-angle sum flat to first
    // order, i.e. dphi_{k-1} - dphi_k + dphi_{k+1} = 0.
    const std::ptrdiff_t kk = static_cast<std::ptrdiff_t>(k);
    const Vec2 ua = fp.framing(kk).vec();
    const Vec2 ub = fp.framing(kk + 1).vec();
    const double ca_coeff =
        cross(fp.polygon.side_direction(kk - 1), ua) / fp.polygon.side_length(kk - 1) +
        cross(fp.polygon.side_direction(kk), ua) / fp.polygon.side_length(kk);
    const double cb_coeff =
        cross(fp.polygon.side_direction(kk), ub) / fp.polygon.side_length(kk) +
        cross(fp.polygon.side_direction(kk + 1), ub) / fp.polygon.side_length(kk + 1);
    double ca = cb_coeff, cb = ca_coeff;
    const double scale = std::hypot(ca, cb);
    if (scale < 1e-14)
        throw NumericalError("even-order generator degenerates at vertex " +
                             std::to_string(k));
    ca /= scale;
    cb /= scale;
    if (ca < 0.0 || (ca == 0.0 && cb < 0.0)) { ca = -ca; cb = -cb; }

    out.vertex_velocities[k] = ca * ua;
    out.vertex_velocities[(k + 1) % n] = cb * ub;
    out.framing_rates[k] =
        2.0 * ca * cross(fp.polygon.side_direction(kk - 1), ua) /
        fp.polygon.side_length(kk - 1);
    out.framing_rates[(k + 1) % n] =
        -2.0 * cb * cross(fp.polygon.side_direction(kk + 1), ub) /
        fp.polygon.side_length(kk + 1);
    return out;
}

bool in_positive_cone(const FramedPolygon& fp, const FramedTangent& t,
                      double tol) {
    const std::size_t n = fp.size();
    double scale = 0.0;
    for (const Vec2& v : t.vertex_velocities) scale = std::max(scale, norm(v));
    if (scale == 0.0) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 u = fp.framing(static_cast<std::ptrdiff_t>(i)).vec();
        if (std::abs(cross(u, t.vertex_velocities[i])) > tol * scale) return false;
        if (dot(u, t.vertex_velocities[i]) <= tol * scale) return false;
    }
    return true;
}

FramedTangent transported_chain_generator(const OrientedChain& chain,
                                          std::size_t circle_index, double h) {
    const ChainTangent v = v_field(chain, circle_index);
    const std::vector<double> dir = v.to_vector();
    const std::vector<double> z0 = ChainState::of(chain).to_vector();

    auto framed_at = [&](double step) {
        const ChainState s = ChainState::from_vector(axpy(z0, step, dir));
        return chain_to_framed(OrientedChain(s.centers, s.radii, 1e-5), 1e-5);
    };
    const FramedPolygon plus = framed_at(h);
    const FramedPolygon minus = framed_at(-h);

    const std::size_t n = chain.size();
    FramedTangent out;
    out.vertex_velocities.resize(n);
    out.framing_rates.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.vertex_velocities[i] =
            (plus.polygon.vertices[i] - minus.polygon.vertices[i]) / (2.0 * h);
        out.framing_rates[i] =
            reduce_angle_signed(plus.framing_angles[i] - minus.framing_angles[i]) /
            (2.0 * h);
    }
    return out;
}

} // namespace equitangent
