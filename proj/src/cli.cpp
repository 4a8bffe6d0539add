#include "sympb/cli.hpp"

#include <cstdio>
#include <fstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sympb/affine.hpp"
#include "sympb/finders.hpp"
#include "sympb/io.hpp"
#include "sympb/map2d.hpp"
#include "sympb/polygon.hpp"
#include "sympb/spectrum.hpp"
#include "sympb/svg.hpp"
#include "sympb/verify.hpp"

namespace sympb {

namespace {

using nlohmann::json;

std::vector<Vec2> curve_outline(const PlaneCurve& curve, int samples = 512) {
    std::vector<Vec2> pts;
    pts.reserve(samples);
    for (int i = 0; i < samples; ++i)
        pts.push_back(curve.position(curve.period() * i / samples));
    return pts;
}

void write_portrait_csv(const std::string& path, const PlaneCurve& curve,
                        const std::vector<OrbitRecord>& records) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << "orbit_id,iter,t1,t2,S12\n";
    const double P = curve.period();
    for (size_t id = 0; id < records.size(); ++id) {
        const auto& rec = records[id];
        for (size_t i = 0; i + 1 < rec.params.size(); ++i) {
            double t1 = std::fmod(rec.params[i], P);
            double t2 = std::fmod(rec.params[i + 1], P);
            if (t1 < 0) t1 += P;
            if (t2 < 0) t2 += P;
            out << id << ',' << i << ',' << format_double(t1) << ',' << format_double(t2) << ','
                << format_double(invariant_density(curve, t1, t2)) << "\n";
        }
    }
}

void write_portrait_svg(const std::string& path, const PlaneCurve& curve,
                        const std::vector<OrbitRecord>& records) {
    SvgWriter svg;
    const double P = curve.period();
    std::vector<Vec2> pts;
    for (const auto& rec : records)
        for (size_t i = 0; i + 1 < rec.params.size(); ++i) {
            double t1 = std::fmod(rec.params[i], P);
            double gap = rec.params[i + 1] - rec.params[i];
            if (t1 < 0) t1 += P;
            pts.push_back({t1, gap});
        }
    svg.dots(std::move(pts), "#1f4e89", 1.2);
    svg.write(path);
}

void write_orbit_svg(const std::string& path, const PlaneCurve& curve,
                     const OrbitRecord& rec) {
    SvgWriter svg;
    svg.polyline(curve_outline(curve), "#888888", 1.0, true);
    std::vector<Vec2> chords;
    for (double t : rec.params) chords.push_back(curve.position(t));
    svg.polyline(std::move(chords), "#b03030", 1.0, false);
    svg.write(path);
}

std::vector<double> parse_weights(const std::string& csv) {
    std::vector<double> w;
    size_t pos = 0;
    while (pos < csv.size()) {
        size_t comma = csv.find(',', pos);
        w.push_back(std::stod(csv.substr(pos, comma == std::string::npos ? comma : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return w;
}

int finish(std::vector<VerifyReport> reports, const std::string& out_path, std::uint64_t seed) {
    print_reports(reports);
    std::printf("seed %llu: %zu checks, %s\n", static_cast<unsigned long long>(seed),
                reports.size(), all_pass(reports) ? "all passed" : "FAILURES present");
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << reports_to_json(reports, seed);
    }
    return all_pass(reports) ? 0 : 1;
}

}  // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"symplectic billiard simulations and theorem checks"};
    app.require_subcommand(1);

    std::string curve_spec = "circle";
    std::string out_path, svg_path;
    std::uint64_t seed = 0;

    // ---- portrait ----
    auto* portrait_cmd = app.add_subcommand("portrait", "iterate seed chords, write CSV");
    int seeds_n = 10, iters = 200;
    portrait_cmd->add_option("--curve", curve_spec, "curve file or shorthand");
    portrait_cmd->add_option("--seeds", seeds_n, "number of seed chords");
    portrait_cmd->add_option("--iters", iters, "iterations per seed");
    portrait_cmd->add_option("--out", out_path, "CSV output path")->required();
    portrait_cmd->add_option("--svg", svg_path, "optional SVG scatter");

    // ---- orbit ----
    auto* orbit_cmd = app.add_subcommand("orbit", "iterate a single chord");
    double t1 = 0.0, t2 = 1.0;
    orbit_cmd->add_option("--curve", curve_spec);
    orbit_cmd->add_option("--t1", t1, "first parameter");
    orbit_cmd->add_option("--t2", t2, "second parameter");
    orbit_cmd->add_option("--iters", iters);
    orbit_cmd->add_option("--out", out_path, "CSV output path");
    orbit_cmd->add_option("--svg", svg_path, "orbit polyline SVG");

    // ---- spectrum ----
    auto* spectrum_cmd = app.add_subcommand("spectrum", "inscribed-area asymptotics");
    std::string n_list = "16,24,32,48,64,96,128";
    spectrum_cmd->add_option("--curve", curve_spec);
    spectrum_cmd->add_option("--n", n_list, "comma-separated polygon sizes");
    spectrum_cmd->add_option("--out", out_path, "fit JSON path");

    // ---- find-periodic ----
    auto* find_cmd = app.add_subcommand("find-periodic", "variational periodic orbits");
    std::string weights_csv = "1,2";
    std::string body_kind;
    double body_eps = 0.1;
    int body_dim = 4, order_k = 4;
    find_cmd->add_option("--a", weights_csv, "weighted-sphere weights");
    find_cmd->add_option("--body", body_kind, "level-set body kind: quartic");
    find_cmd->add_option("--eps", body_eps);
    find_cmd->add_option("--dim", body_dim);
    find_cmd->add_option("--k", order_k, "period")->required();
    find_cmd->add_option("--seed", seed);
    find_cmd->add_option("--out", out_path, "orbit JSON path");

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run theorem checks");
    verify_cmd->require_subcommand(1);
    int ngon_n = 6, ngon_k = 1, samples = 100;
    long modulus = 2;
    double radon_p = 3.0;
    long v_iters = 10000;
    int v_chords = 1000;
    long v_steps = 1000;
    double g_T = 10.0, g_step = 1e-3;
    struct Sub {
        CLI::App* cmd;
        std::function<std::vector<VerifyReport>()> run;
    };
    std::vector<Sub> subs;
    auto addsub = [&](const char* name, const char* desc,
                      std::function<std::vector<VerifyReport>()> fn) {
        auto* c = verify_cmd->add_subcommand(name, desc);
        c->add_option("--out", out_path, "report JSON path");
        c->add_option("--seed", seed);
        subs.push_back({c, std::move(fn)});
        return c;
    };

    auto* c_pa = addsub("phase-area", "phase area vs symmetrized area", [&] {
        if (curve_spec == "suite") return verify_phase_area_suite(seed);
        auto curve = parse_curve_spec(curve_spec);
        auto* sup = dynamic_cast<const SupportFunctionCurve*>(curve.get());
        if (!sup) throw std::invalid_argument("phase-area needs a support-function curve");
        return verify_phase_area(*sup, curve_spec);
    });
    c_pa->add_option("--curve", curve_spec, "curve or 'suite'");

    addsub("mather", "caustic criterion at flat points / on the circle",
           [&] { return verify_mather(seed); });
    addsub("lazutkin", "grazing-chord defect scaling", [&] { return verify_lazutkin(); });

    auto* c_sp = addsub("spectrum", "area-spectrum coefficients", [&] {
        if (curve_spec == "circle") return verify_circle_spectrum();
        auto curve = parse_curve_spec(curve_spec);
        auto* sup = dynamic_cast<const SupportFunctionCurve*>(curve.get());
        if (!sup) throw std::invalid_argument("spectrum needs a support-function curve");
        return verify_spectrum_generic(*sup, curve_spec);
    });
    c_sp->add_option("--curve", curve_spec);

    addsub("ellipse-test", "ellipse recognition inequality",
           [&] { return verify_ellipse_recognition(); });

    auto* c_ng = addsub("regular-ngon", "regular polygon periods", [&] {
        return verify_regular_ngon(ngon_n, ngon_k, samples, seed);
    });
    c_ng->add_option("--n", ngon_n)->required();
    c_ng->add_option("--k", ngon_k);
    c_ng->add_option("--samples", samples);

    auto* c_tr = addsub("trapezoid", "trapezoid period laws", [&] {
        return verify_trapezoid(modulus, samples, seed);
    });
    c_tr->add_option("--modulus", modulus)->required();
    c_tr->add_option("--samples", samples);

    auto* c_ra = addsub("radon", "4-periodic parallelogram orbits", [&] {
        return verify_radon(radon_p, samples == 100 ? 50 : samples);
    });
    c_ra->add_option("--p", radon_p);
    c_ra->add_option("--samples", samples);

    auto* c_in = addsub("integrals", "weighted-sphere conserved quantities", [&] {
        return verify_integrals(parse_weights(weights_csv), v_iters, seed);
    });
    c_in->add_option("--a", weights_csv);
    c_in->add_option("--iters", v_iters);

    auto* c_ho = addsub("hodo", "hodograph correspondence", [&] {
        return verify_hodo(parse_weights(weights_csv), v_iters == 10000 ? 500 : v_iters, seed);
    });
    c_ho->add_option("--a", weights_csv);
    c_ho->add_option("--iters", v_iters);

    auto* c_se = addsub("sphere-explicit", "round-sphere closed form", [&] {
        return verify_sphere_explicit(v_chords, v_steps, seed);
    });
    c_se->add_option("--chords", v_chords);
    c_se->add_option("--steps", v_steps);

    addsub("subspace", "low-period coordinate confinement",
           [&] { return verify_subspace(seed); });

    auto* c_ge = addsub("geodesic", "characteristics project to geodesics", [&] {
        return verify_geodesic(parse_weights(weights_csv), g_T, g_step, seed);
    });
    c_ge->add_option("--a", weights_csv);
    c_ge->add_option("--T", g_T);
    c_ge->add_option("--step", g_step);

    addsub("periodic-existence", "existence of k-periodic orbits on the quartic table",
           [&] { return verify_periodic_existence(seed); });
    auto* c_nb = addsub("odd-neighborhood", "4n-periodic neighborhoods of odd-period points",
                        [&] { return verify_odd_neighborhood(samples, seed); });
    c_nb->add_option("--samples", samples);

    addsub("all", "the full acceptance battery", [&] { return run_acceptance(seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (portrait_cmd->parsed()) {
            auto curve = parse_curve_spec(curve_spec);
            auto records = portrait(*curve, portrait_seeds(*curve, seeds_n), iters);
            write_portrait_csv(out_path, *curve, records);
            if (!svg_path.empty()) write_portrait_svg(svg_path, *curve, records);
            std::printf("portrait: %zu orbits -> %s\n", records.size(), out_path.c_str());
            return 0;
        }
        if (orbit_cmd->parsed()) {
            auto curve = parse_curve_spec(curve_spec);
            OrbitRecord rec = iterate_orbit(*curve, make_chord(*curve, t1, t2), iters);
            if (!out_path.empty()) write_portrait_csv(out_path, *curve, {rec});
            if (!svg_path.empty()) write_orbit_svg(svg_path, *curve, rec);
            std::printf("orbit: %zu points%s%s\n", rec.params.size(),
                        rec.hit_boundary ? ", hit phase-space boundary" : "",
                        rec.period ? (", period " + std::to_string(*rec.period)).c_str() : "");
            return 0;
        }
        if (spectrum_cmd->parsed()) {
            auto curve = parse_curve_spec(curve_spec);
            auto* sup = dynamic_cast<const SupportFunctionCurve*>(curve.get());
            if (!sup) throw std::invalid_argument("spectrum needs a support-function curve");
            std::vector<int> grid;
            for (double v : parse_weights(n_list)) grid.push_back(static_cast<int>(v));
            SpectrumFit fit = fit_spectrum(*sup, grid);
            json doc;
            doc["schema"] = "sympb/1";
            doc["a0"] = fit.a0;
            doc["a1"] = fit.a1;
            doc["a2"] = fit.a2;
            doc["residual"] = fit.residual;
            doc["slack"] = ellipse_test(fit);
            doc["n"] = fit.n;
            doc["area"] = fit.area;
            std::string text = doc.dump(2) + "\n";
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                out << text;
            } else {
                std::fputs(text.c_str(), stdout);
            }
            return 0;
        }
        if (find_cmd->parsed()) {
            PeriodicOrbit orbit;
            if (body_kind == "quartic") {
                QuarticBody body(body_eps, body_dim / 2);
                orbit = find_periodic(body, order_k, seed);
            } else if (body_kind.empty()) {
                WeightedSphere table(parse_weights(weights_csv));
                orbit = find_periodic(table, order_k, seed);
            } else {
                throw std::invalid_argument("unknown body kind '" + body_kind + "'");
            }
            std::printf("k=%d orbit: residual %.3e action %.9f\n", order_k, orbit.residual,
                        orbit.action);
            if (!out_path.empty()) {
                json doc;
                doc["schema"] = "sympb/1";
                doc["k"] = order_k;
                doc["residual"] = orbit.residual;
                doc["action"] = orbit.action;
                doc["points"] = json::array();
                for (const auto& z : orbit.points) {
                    json pt = json::array();
                    for (const auto& c : z) pt.push_back({c.real(), c.imag()});
                    doc["points"].push_back(pt);
                }
                std::ofstream out(out_path);
                out << doc.dump(2) << "\n";
            }
            return orbit.residual < 1e-8 ? 0 : 1;
        }
        for (const auto& sub : subs)
            if (sub.cmd->parsed()) return finish(sub.run(), out_path, seed);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}

int cli_main(const std::vector<std::string>& args) {
    std::vector<std::string> storage = args;
    storage.insert(storage.begin(), "sympb");
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    return cli_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace sympb
