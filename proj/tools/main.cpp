// Command-line front end: instance I/O and experiment drivers for the
// polygon-configuration library. Subcommands: frame, chain, rank, bigon,
// flow, monodromy, spectrum, scan, bicentric, construct.
//
// Exit codes: 0 ok, 1 input error, 2 mathematical precondition violated,
// 3 numerical failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "equitangent/bigon.hpp"
#include "equitangent/chain_distribution.hpp"
#include "equitangent/circle_chain.hpp"
#include "equitangent/constructions.hpp"
#include "equitangent/flow.hpp"
#include "equitangent/framed_polygon.hpp"
#include "equitangent/json_io.hpp"
#include "equitangent/sampling.hpp"
#include "equitangent/svg.hpp"

namespace {

using namespace equitangent;

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        save_json_file(out_path, j);
    }
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

InscribedPolygon inscribed_from_options(int regular_n,
                                        const std::vector<double>& psi,
                                        bool allow_nonconvex) {
    if (regular_n > 0) {
        std::vector<double> angles(static_cast<std::size_t>(regular_n));
        for (int i = 0; i < regular_n; ++i)
            angles[static_cast<std::size_t>(i)] = kTwoPi * i / regular_n;
        return InscribedPolygon::make(angles);
    }
    if (psi.empty())
        throw InputError("provide --regular n or --psi angle list");
    return InscribedPolygon::make(psi, allow_nonconvex);
}

int cmd_frame(const std::string& in_path, const std::string& out_path,
              double tol, double family_param) {
    const Json j = load_json_file(in_path);
    const Polygon p = polygon_from_json(j);
    Json report;
    FramedPolygon fp;
    if (p.size() % 2 == 1) {
        fp = compute_framing_odd(p);
        report["parity"] = "odd";
    } else {
        const double obstruction = framing_obstruction_even(p);
        report["parity"] = "even";
        report["obstruction"] = obstruction;
        fp = framing_family_even(p, family_param, tol);
        report["family_param"] = family_param;
    }
    report["framing_residual"] = fp.framing_residual();
    report["generic"] = p.size() >= 3 ? Json(is_generic(fp)) : Json(nullptr);
    Json out = to_json(fp);
    out["report"] = report;
    emit(out, out_path);
    return 0;
}

int cmd_chain(const std::string& in_path, const std::string& from_framed,
              const std::string& out_path, double tol) {
    if (!from_framed.empty()) {
        const FramedPolygon fp = framed_polygon_from_json(load_json_file(from_framed));
        const OrientedChain chain = framed_to_chain(fp, tol);
        Json out = to_json(chain);
        out["report"] = {{"tangency_residual", chain.tangency_residual()},
                         {"generic", is_generic_chain(chain)}};
        emit(out, out_path);
        return 0;
    }
    const OrientedChain chain = chain_from_json(load_json_file(in_path));
    Json out = to_json(chain);
    Json report;
    report["tangency_residual"] = chain.tangency_residual();
    report["signed_perimeter"] = centers_polygon(chain).signed_perimeter();
    report["generic"] = is_generic_chain(chain);
    Json tps = Json::array();
    for (const TangencyPoint& t : tangency_points(chain))
        tps.push_back({{"index", t.index}, {"point", {t.point.x, t.point.y}}});
    report["tangency_points"] = tps;
    if (is_generic_chain(chain)) {
        const FramedPolygon fp = chain_to_framed(chain, tol);
        out["framed_polygon"] = to_json(fp);
        report["framing_residual"] = fp.framing_residual();
    }
    out["report"] = report;
    emit(out, out_path);
    return 0;
}

int cmd_rank(int n, int count, unsigned long long seed, double h, bool bigon_mode,
             const std::string& out_path) {
    Rng rng(seed);
    Json entries = Json::array();
    int achieved = 0;
    if (bigon_mode) {
        std::uniform_real_distribution<double> coord(-2.0, 2.0);
        std::uniform_real_distribution<double> rad(0.3, 3.0);
        std::uniform_real_distribution<double> ang(0.15, kPi / 2 - 0.15);
        for (int k = 0; k < count; ++k) {
            const BigonState s{coord(rng), coord(rng), rad(rng), ang(rng),
                               coord(rng)};
            const BigonRankCertificate cert = bigon_commutators(s, h);
            entries.push_back({{"rank", cert.rank},
                               {"singular_values", cert.singular_values},
                               {"nu_xi_error", cert.nu_xi_error},
                               {"nu_eta_error", cert.nu_eta_error},
                               {"h", h}});
            achieved += cert.rank == 5;
        }
        Json out = {{"mode", "bigon"},
                    {"count", count},
                    {"target_rank", 5},
                    {"achieved", achieved},
                    {"entries", entries}};
        emit(out, out_path);
        std::cout << "rank 5 achieved " << achieved << "/" << count << '\n';
        return 0;
    }
    if (n < 4)
        throw UnsupportedN(
            "rank certification runs for n >= 4: no generic chains of 3 "
            "circles were found (their centers are collinear and the tangency "
            "points collapse)");
    for (int k = 0; k < count; ++k) {
        const OrientedChain chain = sample_generic_chain(static_cast<std::size_t>(n), rng);
        const RankCertificate cert = bracket_rank(chain, h);
        entries.push_back(to_json(cert, static_cast<std::size_t>(n)));
        achieved += cert.rank == 2 * n;
    }
    Json out = {{"n", n},
                {"count", count},
                {"target_rank", 2 * n},
                {"achieved", achieved},
                {"entries", entries}};
    emit(out, out_path);
    std::cout << 2 * n << " achieved " << achieved << "/" << count << '\n';
    return 0;
}

int cmd_bigon(const std::string& path_csv, double horizontality_tol,
              const std::string& out_path) {
    std::ifstream in(path_csv);
    if (!in) throw InputError("cannot open " + path_csv);
    std::vector<double> times;
    std::vector<BigonState> states;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream row(line);
        std::array<double, 6> vals{};
        bool ok = true;
        for (int c = 0; c < 6 && ok; ++c)
            if (!(row >> vals[static_cast<std::size_t>(c)])) ok = false;
        if (!ok) continue;  // header or malformed row
        times.push_back(vals[0]);
        states.push_back({vals[1], vals[2], vals[3], vals[4], vals[5]});
    }
    const SingularTestReport report =
        singular_curve_test(times, states, horizontality_tol);
    Json out = {{"samples", times.size()},
                {"verdict", report.verdict == CurveVerdict::SingularCandidate
                                ? "SINGULAR-CANDIDATE"
                                : "REGULAR"},
                {"max_form_residual", report.max_form_residual},
                {"max_abs_dphi", report.max_abs_dphi},
                {"min_contraction_sigma2", report.min_contraction_sigma2}};
    emit(out, out_path);
    return 0;
}

int cmd_flow(int regular_n, const std::vector<double>& psi, double total_time,
             int steps, const std::string& clock, const std::string& out_csv,
             const std::string& svg_path) {
    const InscribedPolygon a0 = inscribed_from_options(regular_n, psi, false);
    const FlowTrajectory traj =
        integrate_flow(a0, total_time, static_cast<std::size_t>(steps));

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_csv.empty()) {
        file.open(out_csv);
        if (!file) throw InputError("cannot write " + out_csv);
        os = &file;
    }
    *os << "t";
    for (std::size_t i = 0; i < a0.size(); ++i) *os << ",psi_" << i + 1;
    *os << '\n';
    const bool vertex_clock = clock == "vertex";
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
        *os << format_real(vertex_clock ? traj.arc_times[k] : traj.times[k]);
        for (double v : traj.states[k]) *os << ',' << format_real(v);
        *os << '\n';
    }

    if (!svg_path.empty()) {
        SvgWriter svg;
        svg.add_circle(Circle{{0, 0}, 1.0}, "gray", 0.004);
        const std::size_t family = 12;
        for (std::size_t f = 0; f < family; ++f) {
            const std::size_t k = f * (traj.states.size() - 1) / family;
            const InscribedPolygon a = InscribedPolygon::make(traj.states[k]);
            svg.add_polyline(a.vertices(), true, "black", 0.004);
            for (const Point2& b : envelope_points(a)) svg.add_point(b, 0.008, "red");
        }
        svg.save(svg_path);
    }
    return 0;
}

int cmd_monodromy(int regular_n, const std::vector<double>& psi, double max_time,
                  int steps, const std::string& out_path) {
    const InscribedPolygon a0 = inscribed_from_options(regular_n, psi, false);
    const MonodromyResult res =
        monodromy_defect(a0, max_time, static_cast<std::size_t>(steps));
    emit(Json{{"return_time", res.return_time}, {"defect", res.defect}}, out_path);
    return 0;
}

int cmd_spectrum(int n, const std::string& out_path) {
    const std::vector<double> formula = spectrum_magnitudes(n);
    const std::vector<double> solver = spectrum_eigensolver(n);
    std::vector<double> expanded{0.0};
    for (double v : formula) {
        expanded.push_back(v);
        expanded.push_back(v);
    }
    std::sort(expanded.begin(), expanded.end());
    double worst = 0.0;
    for (std::size_t i = 0; i < solver.size(); ++i)
        worst = std::max(worst, std::abs(solver[i] - expanded[i]));
    Json out = {{"n", n},
                {"magnitudes", formula},
                {"eigensolver_magnitudes", solver},
                {"max_disagreement", worst}};
    if (n == 5) {
        out["magnitude_ratio"] = formula[0] / formula[1];
        std::cout << "|lambda_1|/|lambda_2| = " << format_real(formula[0] / formula[1])
                  << " (sqrt(5) - 2 = " << format_real(std::sqrt(5.0) - 2.0) << ")\n";
    }
    emit(out, out_path);
    return 0;
}

int cmd_scan(int n, int bound, const std::string& out_path) {
    const std::vector<IntegerRelation> relations = independence_scan(n, bound);
    Json list = Json::array();
    for (const IntegerRelation& rel : relations)
        list.push_back({{"coefficients", rel.coefficients}, {"value", rel.value}});
    emit(Json{{"n", n}, {"bound", bound}, {"relations", list}}, out_path);
    std::cout << "relations found: " << relations.size() << '\n';
    return 0;
}

int cmd_bicentric(int n, double r, double d, double R, int starts,
                  unsigned long long seed, const std::string& out_path) {
    if (r <= 0.0) throw InputError("need --r > 0");
    if (R <= 0.0) {
        if (n != 3 && n != 4)
            throw InputError("--R required for n >= 5 (no closed-form relation)");
        R = solve_outer_radius(n, r, d);
    }
    BicentricConfig cfg{n, R, r, d};
    Json out = to_json(cfg);
    if (n == 3 || n == 4) out["relation_residual"] = euler_fuss_residual(cfg);

    Rng rng(seed);
    std::uniform_real_distribution<double> start_u(0.0, kTwoPi);
    double worst = 0.0;
    Json polygon_json;
    for (int k = 0; k < starts; ++k) {
        const PonceletResult pr = poncelet_closure(cfg, start_u(rng));
        worst = std::max(worst, pr.closure_defect);
        if (k == 0) polygon_json = Json{{"psi", pr.psi}, {"winding", pr.winding}};
    }
    out["closure_defect"] = worst;
    out["starts"] = starts;
    out["polygon"] = polygon_json;
    emit(out, out_path);
    std::cout << "closure defect " << format_real(worst) << " over " << starts
              << " starts\n";
    return 0;
}

int cmd_construct(int n, double corner_radius, double side_radius, int samples,
                  unsigned long long seed, const std::string& svg_path,
                  const std::string& out_path) {
    const PiecewiseCircularCurve curve =
        smooth_regular_ngon(n, corner_radius, side_radius);
    const EquitangentLocus locus = equitangent_locus(curve);

    Json report = {{"n", n},
                   {"arcs", curve.arcs.size()},
                   {"c1_residual", curve.c1_residual()},
                   {"whole_exterior", locus.whole_exterior}};
    if (!locus.whole_exterior) {
        Rng rng(seed);
        std::uniform_real_distribution<double> t_u(0.05, 0.95);
        double worst = 0.0;
        const std::size_t segs = locus.polyline.points.size();
        for (int k = 0; k < samples; ++k) {
            const std::size_t s = static_cast<std::size_t>(k) % segs;
            const Point2& a = locus.polyline.points[s];
            const Point2& b = locus.polyline.points[(s + 1) % segs];
            const Point2 x = a + t_u(rng) * (b - a);
            const TangentSegments ts = tangent_segment_lengths(curve, x);
            worst = std::max(worst, std::abs(ts.l1 - ts.l2));
        }
        bool nested = true;
        for (const Point2& p : curve.sample_boundary(8))
            nested = nested && point_inside_polyline(locus.polyline, p);
        report["locus_vertices"] = segs;
        report["max_tangent_asymmetry"] = worst;
        report["curve_inside_locus"] = nested;
    }
    emit(report, out_path);

    if (!svg_path.empty()) {
        SvgWriter svg;
        svg.add_curve(curve, "black", 0.006);
        if (!locus.whole_exterior)
            svg.add_polyline(locus.polyline.points, true, "red", 0.006);
        svg.save(svg_path);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Configuration spaces of plane polygons: framings, tangent "
                 "circle chains, and the equitangent flow"};
    app.require_subcommand(1);

    std::string in_path, out_path, from_framed, path_csv, svg_path, clock = "flow";
    std::vector<double> psi;
    double tol = kGeomTol, step = 1e-4, family_param = 0.0;
    double total_time = 1.0, max_time = 20.0;
    double r = 0.0, d = 0.0, R = 0.0, corner_radius = 0.02, side_radius = 100.0;
    int n = 5, count = 50, steps = 10000, bound = 20, starts = 10, samples = 1000;
    unsigned long long seed = 1;
    bool bigon_mode = false;

    auto* frame = app.add_subcommand("frame", "Frame a polygon from JSON");
    frame->add_option("--in", in_path, "polygon JSON")->required();
    frame->add_option("--out", out_path, "output JSON path (default stdout)");
    frame->add_option("--tol", tol, "geometric tolerance");
    frame->add_option("--family-param", family_param,
                      "family parameter s for even orders");

    auto* chain = app.add_subcommand("chain", "Validate and convert chains");
    chain->add_option("--in", in_path, "chain JSON");
    chain->add_option("--from-framed", from_framed,
                      "framed polygon JSON to convert into a chain");
    chain->add_option("--out", out_path, "output JSON path");
    chain->add_option("--tol", tol, "geometric tolerance");

    auto* rank = app.add_subcommand("rank", "Bracket-generation rank reports");
    rank->add_option("--n", n, "chain order (>= 4)");
    rank->add_option("--count", count, "number of sampled instances");
    rank->add_option("--seed", seed, "RNG seed");
    rank->add_option("--step", step, "commutator step h");
    rank->add_flag("--bigon", bigon_mode, "certify the 2-gon space instead");
    rank->add_option("--out", out_path, "output JSON path");

    auto* bigon = app.add_subcommand("bigon", "Singular-curve test for a sampled path");
    bigon->add_option("--path", path_csv, "CSV path: t,p,q,r,alpha,phi")->required();
    bigon->add_option("--tol", tol, "horizontality tolerance")->default_val(1e-6);
    bigon->add_option("--out", out_path, "output JSON path");

    auto* flow = app.add_subcommand("flow", "Integrate the equitangent flow");
    flow->add_option("--regular", n, "start from the regular n-gon")->default_val(0);
    flow->add_option("--psi", psi, "vertex angles of the start polygon");
    flow->add_option("--time", total_time, "integration time");
    flow->add_option("--steps", steps, "fixed step count");
    flow->add_option("--clock", clock, "time column: flow|vertex");
    flow->add_option("--out", out_path, "CSV output path (default stdout)");
    flow->add_option("--svg", svg_path, "SVG of the polygon family and envelope");

    auto* monodromy = app.add_subcommand("monodromy", "Cyclic-shift return search");
    monodromy->add_option("--regular", n, "start from the regular n-gon")
        ->default_val(0);
    monodromy->add_option("--psi", psi, "vertex angles of the start polygon");
    monodromy->add_option("--max-time", max_time, "search horizon");
    monodromy->add_option("--steps", steps, "integration steps");
    monodromy->add_option("--out", out_path, "output JSON path");

    auto* spectrum = app.add_subcommand("spectrum", "Circulant spectrum check");
    spectrum->add_option("--n", n, "odd order >= 3")->required();
    spectrum->add_option("--out", out_path, "output JSON path");

    auto* scan = app.add_subcommand("scan", "Integer-relation scan of the spectrum");
    scan->add_option("--n", n, "odd order >= 5")->required();
    scan->add_option("--bound", bound, "coefficient bound");
    scan->add_option("--out", out_path, "output JSON path");

    auto* bicentric = app.add_subcommand("bicentric", "Nested-circle polygon closure");
    bicentric->add_option("--n", n, "polygon order")->required();
    bicentric->add_option("--r", r, "inner radius")->required();
    bicentric->add_option("--d", d, "center distance");
    bicentric->add_option("--R", R, "outer radius (solved for n = 3, 4 when absent)");
    bicentric->add_option("--count", starts, "number of random starts");
    bicentric->add_option("--seed", seed, "RNG seed");
    bicentric->add_option("--out", out_path, "output JSON path");

    auto* construct = app.add_subcommand("construct",
                                         "Rounded polygon and its equal-tangent locus");
    construct->add_option("--n", n, "regular polygon order (>= 7)")->required();
    construct->add_option("--corner-radius", corner_radius, "vertex arc radius");
    construct->add_option("--side-radius", side_radius, "side arc radius");
    construct->add_option("--samples", samples, "equitangency sample count");
    construct->add_option("--seed", seed, "RNG seed");
    construct->add_option("--svg", svg_path, "SVG output path");
    construct->add_option("--out", out_path, "report JSON path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (frame->parsed()) return cmd_frame(in_path, out_path, tol, family_param);
        if (chain->parsed()) {
            if (in_path.empty() && from_framed.empty())
                throw InputError("provide --in or --from-framed");
            return cmd_chain(in_path, from_framed, out_path, tol);
        }
        if (rank->parsed())
            return cmd_rank(n, count, seed, step, bigon_mode, out_path);
        if (bigon->parsed()) return cmd_bigon(path_csv, tol, out_path);
        if (flow->parsed())
            return cmd_flow(n, psi, total_time, steps, clock, out_path, svg_path);
        if (monodromy->parsed())
            return cmd_monodromy(n, psi, max_time, steps, out_path);
        if (spectrum->parsed()) return cmd_spectrum(n, out_path);
        if (scan->parsed()) return cmd_scan(n, bound, out_path);
        if (bicentric->parsed())
            return cmd_bicentric(n, r, d, R, starts, seed, out_path);
        if (construct->parsed())
            return cmd_construct(n, corner_radius, side_radius, samples, seed,
                                 svg_path, out_path);
    } catch (const InputError& e) {
        std::cerr << Json{{"error", "input"}, {"message", e.what()}}.dump() << '\n';
        return 1;
    } catch (const PreconditionError& e) {
        std::cerr << Json{{"error", "precondition"}, {"message", e.what()}}.dump()
                  << '\n';
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << Json{{"error", "numerical"}, {"message", e.what()}}.dump()
                  << '\n';
        return 3;
    }
    return 0;
}
