// Command-line surface for the polyhedral chain engine: generators, fillings,
// decompositions, slicing, growth tables, constants, certificate verification
// and mesh export. Exit codes: 0 success, 1 invariant/certificate failure,
// 2 input error.

#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "chainfill/chain_io.hpp"
#include "chainfill/errors.hpp"
#include "chainfill/generators.hpp"
#include "chainfill/isofill.hpp"
#include "chainfill/null_test.hpp"
#include "chainfill/slicing.hpp"

using namespace chainfill;

namespace {

NormSpec norm_from_flag(const std::string& name, int ambient) {
    if (name == "euclidean") return NormSpec::euclidean(ambient);
    if (name == "l1") {
        std::vector<Point> verts;
        for (int i = 0; i < ambient; ++i) {
            Point p(ambient, Rational(0)), m(ambient, Rational(0));
            p[i] = 1;
            m[i] = -1;
            verts.push_back(p);
            verts.push_back(m);
        }
        return NormSpec::polytope(ambient, verts);
    }
    if (name == "linf") {
        std::vector<Point> verts;
        for (int mask = 0; mask < (1 << ambient); ++mask) {
            Point p(ambient);
            for (int i = 0; i < ambient; ++i) p[i] = (mask >> i) & 1 ? 1 : -1;
            verts.push_back(p);
        }
        return NormSpec::polytope(ambient, verts);
    }
    if (name.rfind("lp:", 0) == 0) return NormSpec::lp(ambient, parse_rational(name.substr(3)));
    throw InputError("unknown norm '" + name + "' (euclidean | l1 | linf | lp:<p>)");
}

Point parse_point(const std::string& text, int ambient) {
    Point p;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) p.push_back(parse_rational(tok));
    if ((int)p.size() != ambient)
        throw InputError("point '" + text + "' has wrong dimension (want " +
                         std::to_string(ambient) + ")");
    return p;
}

ClipMode mode_from_flags(const Chain& t, const std::string& mode, const std::string& tol) {
    if (mode == "exact") return ClipMode::exact_mode();
    if (mode != "snap") throw InputError("mode must be exact or snap");
    double tol_abs;
    if (tol.empty()) {
        tol_abs = 1e-5 * (t.is_zero() ? 1.0 : support_diameter(t));
    } else {
        tol_abs = to_double(parse_rational(tol));
    }
    return ClipMode::snap(tol_abs);
}

int run(int argc, char** argv) {
    CLI::App app{"exact integer-weighted polyhedral chains with certified isoperimetric fillings"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a test cycle");
    std::string g_family = "regular_polygon", g_norm = "euclidean", g_out;
    GeneratorSpec gspec;
    unsigned g_seed = 1;
    std::string g_radius = "1", g_spacing = "100", g_aspect = "100";
    gen->add_option("--family", g_family,
                    "regular_polygon | perturbed_polygon | multi_loop | polyhedral_sphere | "
                    "thin_rectangle | figure_eight");
    gen->add_option("--n", gspec.n, "polygon vertex count");
    gen->add_option("--radius", g_radius, "polygon circumradius (rational)");
    gen->add_option("--noise", gspec.noise, "radial jitter fraction");
    gen->add_option("--count", gspec.count, "number of loops");
    gen->add_option("--spacing", g_spacing, "loop spacing (rational)");
    gen->add_option("--level", gspec.level, "sphere subdivision level");
    gen->add_option("--aspect", g_aspect, "rectangle aspect (rational)");
    gen->add_option("--norm", g_norm, "euclidean | l1 | linf | lp:<p>");
    gen->add_option("--seed", g_seed, "generator seed");
    gen->add_option("--out", g_out, "output chain file")->required();

    // ---- fill ----
    auto* fillc = app.add_subcommand("fill", "certified isoperimetric filling of a cycle");
    std::string f_in, f_report, f_out, f_obj, f_mode = "auto", f_tol, f_lambda = "1/6",
                f_eps = "1e-6";
    int f_k = 0;
    unsigned f_seed = 1;
    fillc->add_option("--input", f_in, "input cycle file")->required();
    fillc->add_option("--k", f_k, "expected cycle dimension (validated)");
    fillc->add_option("--lambda", f_lambda, "slice-filling slack in (0, 1/6]");
    fillc->add_option("--eps-stop", f_eps, "stop when M(R) <= eps * M(T)");
    fillc->add_option("--mode", f_mode, "auto | exact | snap");
    fillc->add_option("--tol", f_tol, "absolute snap tolerance (rational)");
    fillc->add_option("--seed", f_seed, "candidate seed");
    fillc->add_option("--report", f_report, "write the certificate here");
    fillc->add_option("--out", f_out, "write the filling chain here");
    fillc->add_option("--export-obj", f_obj, "write a mesh of the filling here");

    // ---- decompose ----
    auto* dec = app.add_subcommand("decompose", "round decomposition of a cycle");
    std::string d_in, d_report, d_mode = "auto", d_tol, d_lambda = "1/6";
    unsigned d_seed = 1;
    dec->add_option("--input", d_in)->required();
    dec->add_option("--lambda", d_lambda);
    dec->add_option("--mode", d_mode, "auto | exact | snap");
    dec->add_option("--tol", d_tol);
    dec->add_option("--seed", d_seed);
    dec->add_option("--report", d_report, "machine-readable ledger file");

    // ---- slice ----
    auto* sl = app.add_subcommand("slice", "distance-sphere slice of a cycle");
    std::string s_in, s_center, s_radius, s_mode = "auto", s_tol, s_out;
    sl->add_option("--input", s_in)->required();
    sl->add_option("--center", s_center, "comma-separated rationals")->required();
    sl->add_option("--radius", s_radius)->required();
    sl->add_option("--mode", s_mode, "auto | exact | snap");
    sl->add_option("--tol", s_tol);
    sl->add_option("--out", s_out, "write the slice chain here");

    // ---- growth ----
    auto* gr = app.add_subcommand("growth", "growth function table r, beta(r), slice mass");
    std::string gr_in, gr_center, gr_mode = "auto", gr_tol;
    int gr_samples = 25;
    gr->add_option("--input", gr_in)->required();
    gr->add_option("--center", gr_center)->required();
    gr->add_option("--samples", gr_samples);
    gr->add_option("--mode", gr_mode);
    gr->add_option("--tol", gr_tol);

    // ---- constants ----
    auto* co = app.add_subcommand("constants", "print the constants chain for dimension k");
    int c_k = 1;
    std::string c_lambda = "1/6", c_prev;
    co->add_option("--k", c_k)->required();
    co->add_option("--lambda", c_lambda);
    co->add_option("--c-prev", c_prev, "override the dimension k-1 constant");

    // ---- verify ----
    auto* ve = app.add_subcommand("verify", "re-check a filling certificate from scratch");
    std::string v_t, v_s, v_cert;
    ve->add_option("--input", v_t, "cycle T")->required();
    ve->add_option("--filling", v_s, "filling S")->required();
    ve->add_option("--cert", v_cert, "certificate file")->required();

    // ---- export ----
    auto* ex = app.add_subcommand("export", "export a chain as a mesh");
    std::string e_in, e_out;
    ex->add_option("--input", e_in)->required();
    ex->add_option("--out", e_out)->required();

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        gspec.family = family_from_name(g_family);
        gspec.radius = parse_rational(g_radius);
        gspec.spacing = parse_rational(g_spacing);
        gspec.aspect = parse_rational(g_aspect);
        const int ambient = gspec.family == GeneratorSpec::Family::PolyhedralSphere ? 3 : 2;
        gspec.space = norm_from_flag(g_norm, ambient);
        const Chain t = generate(gspec, g_seed);
        serialize_chain_file(t, g_out);
        std::cout << "family=" << g_family << " simplices=" << t.size() << " mass=" << mass(t)
                  << "\n";
        return 0;
    }
    if (fillc->parsed()) {
        const Chain t = parse_chain_file(f_in);
        if (f_k != 0 && f_k != t.dim())
            throw InputError("--k disagrees with the input chain dimension");
        FillConfig cfg;
        cfg.lambda = parse_rational(f_lambda);
        cfg.eps_stop = to_double(parse_rational(f_eps));
        cfg.seed = f_seed;
        if (f_mode != "auto") {
            cfg.auto_mode = false;
            cfg.mode = mode_from_flags(t, f_mode, f_tol);
        }
        auto res = fill(t, cfg);
        std::cout << "input_mass=" << res.cert.input_mass << "\n"
                  << "output_mass=" << res.cert.output_mass << "\n"
                  << "ratio=" << res.cert.ratio << "\n"
                  << "d_k=" << res.cert.consts.D << "\n"
                  << "rounds=" << res.cert.rounds.size() << "\n"
                  << "pieces=" << res.cert.pieces.size() << "\n"
                  << "boundary_exact=" << (res.cert.boundary_exact ? 1 : 0) << "\n";
        if (!f_report.empty()) {
            std::ofstream os(f_report);
            if (!os) throw InputError("cannot write " + f_report);
            write_certificate(res.cert, os);
        }
        if (!f_out.empty()) serialize_chain_file(res.filling, f_out);
        if (!f_obj.empty()) export_obj_file(res.filling, f_obj);
        return 0;
    }
    if (dec->parsed()) {
        const Chain t = parse_chain_file(d_in);
        const ConstantsChain consts =
            t.dim() == 1 ? constants(1) : constants(2, constants(1).D, parse_rational(d_lambda));
        DecomposeConfig cfg;
        cfg.seed = d_seed;
        if (d_mode == "auto")
            cfg.mode = t.space().kind() == NormSpec::Kind::Polytope
                           ? ClipMode::exact_mode()
                           : ClipMode::snap(1e-5 * (t.is_zero() ? 1.0 : support_diameter(t)));
        else
            cfg.mode = mode_from_flags(t, d_mode, d_tol);
        if (t.dim() == 2) {
            FillConfig sub;
            cfg.filler = [sub](const Chain& slice) { return fill(slice, sub).filling; };
        }
        auto d = decompose(t, consts, cfg);
        std::ostringstream report;
        report << "input_mass=" << std::setprecision(17) << d.input_mass << "\n"
               << "pieces=" << d.pieces.size() << "\n"
               << "remainder_mass=" << mass(d.remainder) << "\n"
               << "achieved_fraction=" << d.achieved_fraction << "\n"
               << "alpha=" << rational_to_string(consts.alpha) << "\n"
               << "delta=" << rational_to_string(consts.delta) << "\n"
               << "lambda=" << rational_to_string(consts.lambda) << "\n"
               << "e=" << consts.E << "\n";
        for (size_t i = 0; i < d.pieces.size(); ++i) {
            const auto& p = d.pieces[i];
            report << "piece_" << i << "_center=";
            for (size_t j = 0; j < p.center.size(); ++j)
                report << (j ? "," : "") << rational_to_string(p.center[j]);
            report << "\n";
            report << "piece_" << i << "_r0=" << p.r0 << "\n";
            report << "piece_" << i << "_r=" << to_double(p.radius) << "\n";
            report << "piece_" << i << "_mass=" << p.piece_mass << "\n";
            report << "piece_" << i << "_diam=" << p.diam << "\n";
            report << "piece_" << i << "_roundness="
                   << p.diam / (consts.E * std::pow(p.piece_mass, 1.0 / consts.k)) << "\n";
        }
        const double rm = mass(d.remainder);
        report << "invariant_identity=1\n";  // decompose() aborts otherwise
        report << "invariant_remainder="
               << (rm <= to_double(1 - consts.delta) * d.input_mass * (1 + 1e-9) ? 1 : 0) << "\n";
        std::cout << report.str();
        if (!d_report.empty()) {
            std::ofstream os(d_report);
            if (!os) throw InputError("cannot write " + d_report);
            os << report.str();
        }
        return 0;
    }
    if (sl->parsed()) {
        const Chain t = parse_chain_file(s_in);
        const Point y = parse_point(s_center, t.space().dim());
        ClipMode mode = s_mode == "auto"
                            ? (t.space().kind() == NormSpec::Kind::Polytope
                                   ? ClipMode::exact_mode()
                                   : ClipMode::snap(1e-5 * support_diameter(t)))
                            : mode_from_flags(t, s_mode, s_tol);
        auto res = slice(t, y, parse_rational(s_radius), mode);
        std::cout << "radius=" << to_double(res.radius) << "\n"
                  << "realized_tol=" << res.realized_tol << "\n"
                  << "terms=" << res.slice.size() << "\n"
                  << "mass=" << mass(res.slice) << "\n"
                  << "is_cycle=" << (is_cycle(res.slice) ? 1 : 0) << "\n";
        if (!s_out.empty()) serialize_chain_file(res.slice, s_out);
        return 0;
    }
    if (gr->parsed()) {
        const Chain t = parse_chain_file(gr_in);
        const Point y = parse_point(gr_center, t.space().dim());
        ClipMode mode = gr_mode == "auto"
                            ? (t.space().kind() == NormSpec::Kind::Polytope
                                   ? ClipMode::exact_mode()
                                   : ClipMode::snap(1e-5 * support_diameter(t)))
                            : mode_from_flags(t, gr_mode, gr_tol);
        const auto g = growth_function(t, y);
        std::cout << "# r beta(r) slice_mass\n";
        const double rmax = g.support_radius() * 1.05;
        for (int i = 1; i <= gr_samples; ++i) {
            const double r = rmax * i / gr_samples;
            double slice_mass = 0;
            try {
                slice_mass = mass(slice(t, y, rational_from_double(r), mode).slice);
            } catch (const std::exception&) {
                slice_mass = -1;  // tangent radius in exact mode
            }
            std::cout << std::setprecision(12) << r << " " << g.eval(r) << " " << slice_mass
                      << "\n";
        }
        if (g.degenerate_tangency()) {
            std::cout << "# degenerate tangencies at:";
            for (double r : g.jump_radii()) std::cout << " " << r;
            std::cout << "\n";
        }
        return 0;
    }
    if (co->parsed()) {
        ConstantsChain c;
        if (c_k == 1) {
            c = constants(1);
        } else {
            double prev;
            if (c_prev.empty()) {
                ConstantsChain lower = constants(1);
                for (int kk = 2; kk < c_k; ++kk)
                    lower = constants(kk, lower.D, parse_rational(c_lambda));
                prev = lower.D;
            } else {
                prev = to_double(parse_rational(c_prev));
            }
            c = constants(c_k, prev, parse_rational(c_lambda));
        }
        std::cout << "k=" << c.k << "\n"
                  << "lambda=" << rational_to_string(c.lambda) << "\n"
                  << "alpha=" << rational_to_string(c.alpha) << "\n"
                  << "delta=" << rational_to_string(c.delta) << "\n"
                  << "f=" << std::setprecision(17) << c.F << "\n"
                  << "e=" << c.E << "\n"
                  << "cone_const=" << c.cone_const << "\n"
                  << "c_prev=" << c.C_prev << "\n"
                  << "d=" << c.D << "\n";
        return 0;
    }
    if (ve->parsed()) {
        const Chain t = parse_chain_file(v_t);
        const Chain s = parse_chain_file(v_s);
        std::ifstream is(v_cert);
        if (!is) throw InputError("cannot open " + v_cert);
        const FillingCertificate cert = read_certificate(is);
        const auto rep = verify(t, s, cert);
        std::cout << "boundary_ok=" << rep.boundary_ok << "\n"
                  << "mass_ok=" << rep.mass_ok << "\n"
                  << "constants_ok=" << rep.constants_ok << "\n"
                  << "ratio_ok=" << rep.ratio_ok << "\n"
                  << "ledger_ok=" << rep.ledger_ok << "\n";
        for (const auto& f : rep.failures) std::cout << "failure: " << f << "\n";
        return rep.ok() ? 0 : 1;
    }
    if (ex->parsed()) {
        export_obj_file(parse_chain_file(e_in), e_out);
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const NoSplitRadius& e) {
        std::cerr << "no split radius: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
