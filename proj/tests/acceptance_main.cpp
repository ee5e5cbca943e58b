// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Every tolerance is pinned in code.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "equitangent/bigon.hpp"
#include "equitangent/chain_distribution.hpp"
#include "equitangent/circle_chain.hpp"
#include "equitangent/constructions.hpp"
#include "equitangent/flow.hpp"
#include "equitangent/framed_polygon.hpp"
#include "equitangent/sampling.hpp"

using namespace equitangent;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

// 1. Framing parity: unique odd framings, even framings exactly for cyclic
//    quadrilaterals.
Outcome criterion_framing_parity() {
    Rng rng(101);
    double worst_odd = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = std::vector<std::size_t>{3, 5, 7, 9}[trial % 4];
        const FramedPolygon fp = compute_framing_odd(random_polygon(n, rng));
        worst_odd = std::max(worst_odd, fp.framing_residual());
    }
    double worst_cyclic = 0.0, best_perturbed = 1e300;
    for (int trial = 0; trial < 100; ++trial) {
        worst_cyclic = std::max(
            worst_cyclic,
            std::abs(framing_obstruction_even(random_cyclic_polygon(4, rng))));
        best_perturbed = std::min(
            best_perturbed, std::abs(framing_obstruction_even(
                                random_perturbed_cyclic_quadrilateral(rng, 0.01))));
    }
    Outcome out;
    out.pass = worst_odd < 1e-10 && worst_cyclic < 1e-9 && best_perturbed > 1e-3;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "odd residual %.2e, cyclic obstruction %.2e, perturbed min %.2e",
                  worst_odd, worst_cyclic, best_perturbed);
    out.detail = buf;
    return out;
}

// 2. Chain duality: telescoping signed perimeter, radius propagation, and the
//    chain <-> framed polygon round trip.
Outcome criterion_chain_duality() {
    Rng rng(102);
    double worst_perimeter = 0.0, worst_lift = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 3 + trial % 6;
        const OrientedChain chain =
            lift_polygon(sample_zero_length_polygon(n, rng), -1.0 + 0.002 * trial);
        worst_perimeter = std::max(
            worst_perimeter, std::abs(centers_polygon(chain).signed_perimeter()));
        const OrientedChain relift =
            lift_polygon(centers_polygon(chain), chain.signed_radii[0]);
        for (std::size_t i = 0; i < n; ++i)
            worst_lift = std::max(worst_lift, std::abs(relift.signed_radii[i] -
                                                       chain.signed_radii[i]));
    }
    double worst_round = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 4 + trial % 5;
        const OrientedChain chain = sample_generic_chain(n, rng).canonical();
        const OrientedChain back =
            framed_to_chain(chain_to_framed(chain)).canonical();
        const double scale = chain.diameter();
        for (std::size_t i = 0; i < n; ++i) {
            worst_round = std::max(
                worst_round, distance(back.centers[i], chain.centers[i]) / scale);
            worst_round = std::max(
                worst_round,
                std::abs(back.signed_radii[i] - chain.signed_radii[i]) / scale);
        }
    }
    Outcome out;
    out.pass = worst_perimeter < 1e-9 && worst_lift < 1e-11 && worst_round < 1e-8;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "perimeter %.2e, lift defect %.2e, round trip %.2e",
                  worst_perimeter, worst_lift, worst_round);
    out.detail = buf;
    return out;
}

// 3. Bracket generation of type (n, 2n) across n = 4..8.
Outcome criterion_bracket_generation() {
    Rng rng(103);
    const double h = 1e-4;
    int achieved = 0, total = 0;
    double worst_angle = 0.0, worst_ratio = 1.0;
    for (std::size_t n = 4; n <= 8; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            const OrientedChain chain = sample_generic_chain(n, rng);
            ++total;
            achieved += bracket_rank(chain, h).rank == static_cast<int>(2 * n);
            if (trial == 0) {
                for (std::size_t e = 0; e < n; ++e) {
                    const ChainTangent bracket =
                        lie_bracket(chain, FieldSelector::v(e),
                                    FieldSelector::v((e + 1) % n), h);
                    worst_angle = std::max(
                        worst_angle, angle_between_tangents(bracket, w_field(chain, e)));
                    const ChainTangent fine =
                        lie_bracket(chain, FieldSelector::v(e),
                                    FieldSelector::v((e + 1) % n), h / 2.0);
                    const double ratio = bracket.norm() / fine.norm();
                    if (std::abs(ratio - 1.0) > std::abs(worst_ratio - 1.0))
                        worst_ratio = ratio;
                }
            }
        }
    }
    Outcome out;
    out.pass = achieved == total && worst_angle < 1e-4 && worst_ratio > 0.95 &&
               worst_ratio < 1.05;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "rank 2n on %d/%d, bracket angle %.2e, step-halving ratio %.4f",
                  achieved, total, worst_angle, worst_ratio);
    out.detail = buf;
    return out;
}

// 4. The vertical generator: stationary centers, radius rate -2.
Outcome criterion_kernel_field() {
    Rng rng(104);
    double worst_speed = 0.0, worst_rate = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 4 + trial % 5;
        const OrientedChain chain = sample_generic_chain(n, rng);
        const ChainTangent xi = kernel_field(chain);
        for (std::size_t i = 0; i < n; ++i) {
            worst_speed = std::max(worst_speed, norm(xi.vertex_velocities[i]));
            worst_rate = std::max(worst_rate, std::abs(xi.radius_rates[i] + 2.0));
        }
    }
    Outcome out;
    out.pass = worst_speed < 1e-10 && worst_rate < 1e-10;
    char buf[120];
    std::snprintf(buf, sizeof buf, "vertex speed %.2e, rate defect %.2e",
                  worst_speed, worst_rate);
    out.detail = buf;
    return out;
}

// 5. The 2-gon space: form annihilation, commutators, rank (3, 5).
Outcome criterion_bigon_space() {
    Rng rng(105);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::uniform_real_distribution<double> rad(0.3, 3.0);
    std::uniform_real_distribution<double> ang(0.15, kPi / 2 - 0.15);
    auto sample = [&] {
        return BigonState{coord(rng), coord(rng), rad(rng), ang(rng), coord(rng)};
    };
    double worst_form = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
        const BigonState s = sample();
        const BigonGenerators g = generator_fields(s);
        for (const BigonTangent* t : {&g.nu, &g.xi, &g.eta}) {
            worst_form = std::max(worst_form, std::abs(form_theta1(s, *t)));
            worst_form = std::max(worst_form, std::abs(form_theta2(s, *t)));
        }
    }
    double worst_comm = 0.0;
    int rank5 = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const BigonRankCertificate cert = bigon_commutators(sample(), 1e-4);
        worst_comm = std::max(worst_comm, std::max(cert.nu_xi_error, cert.nu_eta_error));
        rank5 += cert.rank == 5;
    }
    Outcome out;
    out.pass = worst_form < 1e-12 && worst_comm < 1e-4 && rank5 == 1000;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "form residual %.2e, commutator error %.2e, rank 5 on %d/1000",
                  worst_form, worst_comm, rank5);
    out.detail = buf;
    return out;
}

// 6. The equitangent flow: regular-pentagon period, triangle invariants, and
//    the similar-triangle displacement identity.
Outcome criterion_equitangent_flow() {
    const double period = kTwoPi / std::sin(kPi / 5);
    std::vector<double> psi5(5);
    for (int i = 0; i < 5; ++i) psi5[static_cast<std::size_t>(i)] = kTwoPi * i / 5;
    const InscribedPolygon pentagon = InscribedPolygon::make(psi5);
    // The cyclic shift of the regular pentagon happens at period/5; five
    // shifts recover the full period.
    const MonodromyResult shift = monodromy_defect(pentagon, 3.0, 30000);
    const double period_rel =
        std::abs(5.0 * shift.return_time - period) / period;

    Rng rng(106);
    std::uniform_real_distribution<double> gap_u(0.4, 1.0);
    std::vector<double> gaps(3);
    double total = 0.0;
    for (double& g : gaps) total += (g = gap_u(rng));
    std::vector<double> psi3(3);
    double acc = 0.3;
    for (int i = 0; i < 3; ++i) {
        psi3[static_cast<std::size_t>(i)] = acc;
        acc += gaps[static_cast<std::size_t>(i)] * kTwoPi / total;
    }
    const InscribedPolygon triangle = InscribedPolygon::make(psi3);
    const auto pts0 = triangle.vertices();
    const Circle inc0 = triangle_incircle(pts0[0], pts0[1], pts0[2]);
    const FlowTrajectory traj =
        integrate_flow(triangle, kTwoPi / std::sin(kPi / 3), 20000);
    double worst_incircle = 0.0;
    for (std::size_t k = 0; k < traj.states.size(); k += 200) {
        const auto pts = InscribedPolygon::make(traj.states[k]).vertices();
        const Circle inc = triangle_incircle(pts[0], pts[1], pts[2]);
        worst_incircle = std::max(worst_incircle,
                                  distance(inc.center, inc0.center) +
                                      std::abs(inc.radius - inc0.radius));
    }

    // Displacement ratios agree across vertices at second order in the step;
    // an asymmetric polygon keeps the check non-vacuous.
    const InscribedPolygon skew =
        InscribedPolygon::make({0.0, 0.9, 2.3, 3.8, 5.1});
    const std::vector<double> x = tangent_lengths(skew).x;
    auto ratio_spread = [&](double h) {
        const FlowTrajectory t = integrate_flow(skew, h, 1);
        const auto a = skew.vertices();
        const auto b = InscribedPolygon::make(t.states.back()).vertices();
        double lo = 1e300, hi = 0.0;
        for (std::size_t i = 0; i < 5; ++i) {
            const double ratio = distance(a[i], b[i]) / x[i];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        return hi - lo;
    };
    const double spread_h = ratio_spread(1e-3);
    const double spread_h2 = ratio_spread(5e-4);
    const bool second_order = spread_h2 < spread_h / 3.0 + 1e-15;

    Outcome out;
    out.pass = period_rel < 1e-6 && worst_incircle < 1e-7 && second_order;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "period error %.2e, incircle drift %.2e, ratio spread %.1e -> %.1e",
                  period_rel, worst_incircle, spread_h, spread_h2);
    out.detail = buf;
    return out;
}

// 7. Circulant spectrum against the eigensolver, and the n = 5 ratio.
Outcome criterion_spectrum() {
    double worst = 0.0;
    for (int n = 3; n <= 15; n += 2) {
        const std::vector<double> formula = spectrum_magnitudes(n);
        std::vector<double> expanded{0.0};
        for (double v : formula) {
            expanded.push_back(v);
            expanded.push_back(v);
        }
        std::sort(expanded.begin(), expanded.end());
        const std::vector<double> solver = spectrum_eigensolver(n);
        for (std::size_t i = 0; i < solver.size(); ++i)
            worst = std::max(worst, std::abs(solver[i] - expanded[i]));
    }
    const std::vector<double> m5 = spectrum_magnitudes(5);
    const double ratio_err = std::abs(m5[0] / m5[1] - (std::sqrt(5.0) - 2.0));
    Outcome out;
    out.pass = worst < 1e-10 && ratio_err < 1e-12;
    char buf[120];
    std::snprintf(buf, sizeof buf, "eigensolver gap %.2e, ratio error %.2e",
                  worst, ratio_err);
    out.detail = buf;
    return out;
}

// 8. Nested-circle relations and tangent-line closure.
Outcome criterion_bicentric() {
    Rng rng(108);
    std::uniform_real_distribution<double> start_u(0.0, kTwoPi);
    const BicentricConfig euler{3, 0.9, 0.4, 0.3};
    const double euler_residual = std::abs(euler_fuss_residual(euler));
    double euler_defect = 0.0;
    for (int k = 0; k < 10; ++k)
        euler_defect = std::max(
            euler_defect, poncelet_closure(euler, start_u(rng)).closure_defect);
    const BicentricConfig fuss{4, 1.0, 1.0 / std::sqrt(2.0), 0.0};
    const double fuss_defect = poncelet_closure(fuss, 0.4).closure_defect;
    const double violating_defect =
        poncelet_closure({3, 1.0, 0.4, 0.3}, 0.2).closure_defect;
    Outcome out;
    out.pass = euler_residual < 1e-12 && euler_defect < 1e-9 &&
               fuss_defect < 1e-12 && violating_defect > 1e-3;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "relation %.2e, closure %.2e, square %.2e, violating %.2e",
                  euler_residual, euler_defect, fuss_defect, violating_defect);
    out.detail = buf;
    return out;
}

// 9. Linearized flow around the regular solution: conservation, the slow
//    eigenplane period, non-periodic mixtures, empty relation scans.
Outcome criterion_linearized() {
    const int n = 5;
    const double period = kTwoPi / std::sin(kPi / n);
    const auto [re1, im1] = eigenplane_basis(n, 1);
    const auto [re2, im2] = eigenplane_basis(n, 2);

    const LinearizedTrajectory plane =
        linearized_flow(re1, n, period, 20000);
    double worst_sum = 0.0;
    for (std::size_t k = 0; k < plane.states.size(); k += 100)
        worst_sum = std::max(worst_sum, std::abs(plane.states[k].sum()));
    const double return_dist = (plane.states.back() - re1).norm();
    const double period_rel = return_dist / (kTwoPi * re1.norm());

    Eigen::VectorXd mixed = re1 + re2;
    const LinearizedTrajectory long_run =
        linearized_flow(mixed, n, 50.0 * period, 400000);
    double closest = 1e300;
    for (std::size_t k = 0; k < long_run.states.size(); ++k) {
        if (long_run.times[k] < period / 2.0) continue;
        closest = std::min(closest, (long_run.states[k] - mixed).norm());
    }
    for (std::size_t k = 0; k < long_run.states.size(); k += 1000)
        worst_sum = std::max(worst_sum, std::abs(long_run.states[k].sum()));

    const bool scans_empty =
        independence_scan(5, 50).empty() && independence_scan(7, 20).empty();

    Outcome out;
    out.pass = worst_sum < 1e-10 && period_rel < 1e-6 && closest > 1e-3 &&
               scans_empty;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "sum drift %.2e, period error %.2e, mixed return %.2e, scans %s",
                  worst_sum, period_rel, closest, scans_empty ? "empty" : "HIT");
    out.detail = buf;
    (void)im1;
    (void)im2;
    return out;
}

// 10. The rounded octagon and its locus of equal tangent segments.
Outcome criterion_constructions() {
    const PiecewiseCircularCurve curve = smooth_regular_ngon(8, 0.05, 20.0);
    const EquitangentLocus locus = equitangent_locus(curve);
    Rng rng(110);
    std::uniform_real_distribution<double> t_u(0.05, 0.95);
    double worst_asym = 0.0;
    const std::size_t segs = locus.polyline.points.size();
    for (int k = 0; k < 1000; ++k) {
        const std::size_t s = static_cast<std::size_t>(k) % segs;
        const Point2& a = locus.polyline.points[s];
        const Point2& b = locus.polyline.points[(s + 1) % segs];
        const Point2 x = a + t_u(rng) * (b - a);
        const TangentSegments ts = tangent_segment_lengths(curve, x);
        worst_asym = std::max(worst_asym, std::abs(ts.l1 - ts.l2));
    }
    bool nested = true;
    for (const Point2& p : curve.sample_boundary(8))
        nested = nested && point_inside_polyline(locus.polyline, p);

    std::uniform_real_distribution<double> u(-3.0, 3.0);
    double worst_power = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const Circle c1{{u(rng), u(rng)}, std::abs(u(rng)) + 0.2};
        const Circle c2{{u(rng), u(rng)}, std::abs(u(rng)) + 0.2};
        if (distance(c1.center, c2.center) < 0.1) continue;
        const Line axis = radical_axis(c1, c2);
        for (int s = 0; s < 10; ++s) {
            const Point2 p = axis.point + u(rng) * axis.direction;
            const double pow1 = squared_norm(p - c1.center) - c1.radius * c1.radius;
            const double pow2 = squared_norm(p - c2.center) - c2.radius * c2.radius;
            worst_power = std::max(worst_power, std::abs(pow1 - pow2));
        }
    }

    Outcome out;
    out.pass = locus.polyline.closed && worst_asym < 1e-8 && nested &&
               worst_power < 1e-12;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "closed %s, asymmetry %.2e, nested %s, power defect %.2e",
                  locus.polyline.closed ? "yes" : "NO", worst_asym,
                  nested ? "yes" : "NO", worst_power);
    out.detail = buf;
    return out;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"framing parity (odd unique, even obstruction)", criterion_framing_parity},
        {"chain duality (signed perimeter, lift, round trip)", criterion_chain_duality},
        {"bracket generation of type (n, 2n)", criterion_bracket_generation},
        {"vertical generator (kernel field)", criterion_kernel_field},
        {"2-gon space of type (3, 5)", criterion_bigon_space},
        {"equitangent flow invariants", criterion_equitangent_flow},
        {"circulant spectrum", criterion_spectrum},
        {"bicentric relations and closure", criterion_bicentric},
        {"linearized rigidity probes", criterion_linearized},
        {"rounded polygon locus", criterion_constructions},
    };

    int failures = 0;
    int index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %2d. %s (%s)\n", outcome.pass ? "PASS" : "FAIL", index,
                    c.name, outcome.detail.c_str());
        std::fflush(stdout);
        failures += outcome.pass ? 0 : 1;
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures;
}
