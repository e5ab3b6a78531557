#include "chainfill/isofill.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "chainfill/errors.hpp"
#include "chainfill/null_test.hpp"
#include "chainfill/product_cone.hpp"

namespace chainfill {

namespace {

ClipMode effective_mode(const Chain& t, const FillConfig& cfg, double diam) {
    if (!cfg.auto_mode) return cfg.mode;
    if (t.space().kind() == NormSpec::Kind::Polytope) return ClipMode::exact_mode();
    const double tol = std::max(cfg.snap_tol_rel * std::max(diam, 1e-30), 1e-300);
    return ClipMode::snap(tol);
}

}  // namespace

FillResult fill(const Chain& t, const FillConfig& cfg) {
    if (t.dim() != 1 && t.dim() != 2)
        throw InputError("fill supports cycles of dimension 1 or 2");
    if (!is_cycle(t)) throw InputError("fill requires a cycle");
    const int k = t.dim();

    FillResult res;
    res.filling = Chain(k + 1, t.space());
    FillingCertificate& cert = res.cert;
    cert.k = k;
    cert.input_mass = mass(t);
    cert.eps_stop = cfg.eps_stop;
    if (t.is_zero()) {
        cert.boundary_exact = true;
        cert.consts = k == 1 ? constants(1) : constants(2, constants(1).D, cfg.lambda);
        cert.mode = "exact";
        return res;
    }

    const double diam = support_diameter(t);
    const ClipMode mode = effective_mode(t, cfg, diam);
    cert.mode = mode.exact ? "exact" : "snap";
    cert.tol = mode.tol;

    DecomposeConfig dcfg;
    dcfg.mode = mode;
    dcfg.seed = cfg.seed;
    if (k == 1) {
        cert.consts = constants(1);
    } else {
        cert.consts = constants(2, constants(1).D, cfg.lambda);
        FillConfig sub = cfg;
        sub.auto_mode = true;  // slice cycles get their own relative tolerance
        dcfg.filler = [sub](const Chain& slice) {
            auto sr = fill(slice, sub);
            return sr.filling;
        };
    }
    const ConstantsChain& cc = cert.consts;
    const double delta = to_double(cc.delta);
    const double lam = to_double(cc.lambda);

    Chain remainder = t;
    double remainder_mass = cert.input_mass;
    double sum_piece_mass = 0;
    double sum_fill_mass = 0;
    std::vector<Chain> fillings;
    int round = 0;
    while (!remainder.is_zero() && remainder_mass > cfg.eps_stop * cert.input_mass) {
        if (round >= cfg.max_rounds)
            throw InvariantViolation("fill: round limit reached before mass target");
        auto dec = decompose(remainder, cc, dcfg);
        for (auto& p : dec.pieces) {
            auto cone_res = cone_from_support(p.piece);
            PieceCert pc;
            pc.mass = p.piece_mass;
            pc.diam = p.diam;
            pc.cone_mass = cone_res.mass;
            pc.cone_bound = cc.cone_const * p.diam * p.piece_mass;
            if (pc.cone_mass > pc.cone_bound * (1 + 1e-9))
                throw InvariantViolation("fill: cone bound violated on a round piece");
            // roundness turns the cone bound into the isoperimetric form
            if (pc.cone_mass >
                cc.cone_const * cc.E * std::pow(pc.mass, (k + 1.0) / k) * (1 + 1e-9))
                throw InvariantViolation("fill: piece filling exceeds C_k E M^{(k+1)/k}");
            sum_piece_mass += pc.mass;
            sum_fill_mass += pc.cone_mass;
            cert.pieces.push_back(pc);
            fillings.push_back(std::move(cone_res.filling));
        }
        const double new_mass = mass(dec.remainder);
        if (new_mass > (1 - delta) * remainder_mass * (1 + 1e-9))
            throw InvariantViolation("fill: remainder mass did not decay by (1 - delta)");
        remainder = std::move(dec.remainder);
        remainder_mass = new_mass;
        ++round;
        RoundTrace tr;
        tr.round = round;
        tr.pieces_total = cert.pieces.size();
        tr.remainder_mass = remainder_mass;
        tr.sum_piece_mass = sum_piece_mass;
        tr.sum_fill_mass = sum_fill_mass;
        tr.achieved_fraction = dec.achieved_fraction;
        cert.rounds.push_back(tr);
        if (remainder_mass > std::pow(1 - delta, round) * cert.input_mass * (1 + 1e-6))
            throw InvariantViolation("fill: geometric decay of the remainder failed");
    }
    if (sum_piece_mass > (1 + lam) / delta * cert.input_mass * (1 + 1e-9))
        throw InvariantViolation("fill: total piece mass exceeds (1+lambda)/delta M(T)");
    if (!remainder.is_zero()) {
        auto cone_res = cone_from_support(remainder);
        cert.final_remainder_mass = remainder_mass;
        cert.final_cone_mass = cone_res.mass;
        cert.final_cone_bound = cc.cone_const * cone_res.diam * remainder_mass;
        if (cert.final_cone_mass > cert.final_cone_bound * (1 + 1e-9))
            throw InvariantViolation("fill: cone bound violated on the final remainder");
        fillings.push_back(std::move(cone_res.filling));
    }
    for (const auto& f : fillings) res.filling.add_chain(f, 1);

    cert.output_mass = mass(res.filling);
    cert.ratio = cert.output_mass / std::pow(cert.input_mass, (k + 1.0) / k);
    if (cert.ratio > cc.D * (1 + 1e-9))
        throw InvariantViolation("fill: achieved ratio exceeds the certified constant D_k");
    cert.boundary_exact = currents_equal(boundary(res.filling), t);
    if (!cert.boundary_exact) throw InvariantViolation("fill: boundary of the filling is not T");
    return res;
}

VerifyReport verify(const Chain& t, const Chain& s, const FillingCertificate& cert) {
    VerifyReport rep;
    auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };

    if (s.dim() != t.dim() + 1) {
        fail("filling dimension mismatch");
        return rep;
    }
    rep.boundary_ok = currents_equal(boundary(s), t);
    if (!rep.boundary_ok) fail("boundary residual ∂S - T is a nonzero current");

    const double ms = mass(s), mt = mass(t);
    rep.mass_ok = std::abs(ms - cert.output_mass) <= 1e-6 * (1 + ms) &&
                  std::abs(mt - cert.input_mass) <= 1e-6 * (1 + mt);
    if (!rep.mass_ok) fail("recorded masses disagree with recomputed masses");

    // constants chain must follow from (k, lambda, C_prev) alone
    rep.constants_ok = true;
    try {
        const ConstantsChain fresh =
            cert.k == 1 ? constants(1) : constants(cert.k, cert.consts.C_prev, cert.consts.lambda);
        auto close = [](double a, double b) { return std::abs(a - b) <= 1e-9 * (1 + std::abs(b)); };
        if (!close(fresh.D, cert.consts.D) || !close(fresh.E, cert.consts.E) ||
            !close(fresh.F, cert.consts.F) || fresh.alpha != cert.consts.alpha ||
            fresh.delta != cert.consts.delta) {
            rep.constants_ok = false;
            fail("constants chain does not reproduce from (k, lambda, C_prev)");
        }
    } catch (const std::exception& e) {
        rep.constants_ok = false;
        fail(std::string("constants reconstruction failed: ") + e.what());
    }

    const double ratio = mt > 0 ? ms / std::pow(mt, (cert.k + 1.0) / cert.k) : 0.0;
    rep.ratio_ok = ratio <= cert.consts.D * (1 + 1e-9);
    if (!rep.ratio_ok) fail("achieved ratio exceeds D_k");

    rep.ledger_ok = true;
    const double delta = to_double(cert.consts.delta);
    const double lam = to_double(cert.consts.lambda);
    for (const auto& tr : cert.rounds) {
        if (tr.remainder_mass >
            std::pow(1 - delta, tr.round) * cert.input_mass * (1 + 1e-6)) {
            rep.ledger_ok = false;
            fail("ledger: M(R_n) <= (1-delta)^n M(T) fails at round " + std::to_string(tr.round));
        }
    }
    double sum_mass = 0;
    for (const auto& pc : cert.pieces) {
        sum_mass += pc.mass;
        if (pc.cone_mass > pc.cone_bound * (1 + 1e-9)) {
            rep.ledger_ok = false;
            fail("ledger: cone bound violated on a piece");
        }
        if (pc.diam > cert.consts.E * std::pow(pc.mass, 1.0 / cert.k) * (1 + 1e-9)) {
            rep.ledger_ok = false;
            fail("ledger: a piece is not round");
        }
    }
    if (sum_mass > (1 + lam) / delta * cert.input_mass * (1 + 1e-9)) {
        rep.ledger_ok = false;
        fail("ledger: sum of piece masses exceeds (1+lambda)/delta M(T)");
    }
    // tail bound realized: for each round, sum_{i > N_n} M(S_i) <=
    // C_k E (sum_{i > N_n} M(T_i))^{(k+1)/k}
    const double ck_e = cert.consts.cone_const * cert.consts.E;
    double total_fill = 0;
    for (const auto& pc : cert.pieces) total_fill += pc.cone_mass;
    for (const auto& tr : cert.rounds) {
        const double tail_fill = total_fill - tr.sum_fill_mass;
        const double tail_mass = sum_mass - tr.sum_piece_mass;
        if (tail_fill > ck_e * std::pow(std::max(tail_mass, 0.0), (cert.k + 1.0) / cert.k) *
                            (1 + 1e-9) &&
            tail_fill > 1e-12) {
            rep.ledger_ok = false;
            fail("ledger: tail bound fails after round " + std::to_string(tr.round));
        }
    }
    if (cert.final_cone_mass > cert.final_cone_bound * (1 + 1e-9)) {
        rep.ledger_ok = false;
        fail("ledger: final remainder cone bound violated");
    }
    return rep;
}

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

}  // namespace

void write_certificate(const FillingCertificate& cert, std::ostream& os) {
    os << "cert_version=1\n";
    os << "k=" << cert.k << "\n";
    os << "lambda=" << rational_to_string(cert.consts.lambda) << "\n";
    os << "c_prev=" << fmt(cert.consts.C_prev) << "\n";
    os << "alpha=" << rational_to_string(cert.consts.alpha) << "\n";
    os << "delta=" << rational_to_string(cert.consts.delta) << "\n";
    os << "f=" << fmt(cert.consts.F) << "\n";
    os << "e=" << fmt(cert.consts.E) << "\n";
    os << "cone_const=" << fmt(cert.consts.cone_const) << "\n";
    os << "d=" << fmt(cert.consts.D) << "\n";
    os << "input_mass=" << fmt(cert.input_mass) << "\n";
    os << "output_mass=" << fmt(cert.output_mass) << "\n";
    os << "ratio=" << fmt(cert.ratio) << "\n";
    os << "eps_stop=" << fmt(cert.eps_stop) << "\n";
    os << "mode=" << cert.mode << "\n";
    os << "tol=" << fmt(cert.tol) << "\n";
    os << "boundary_exact=" << (cert.boundary_exact ? 1 : 0) << "\n";
    os << "final_remainder_mass=" << fmt(cert.final_remainder_mass) << "\n";
    os << "final_cone_mass=" << fmt(cert.final_cone_mass) << "\n";
    os << "final_cone_bound=" << fmt(cert.final_cone_bound) << "\n";
    os << "rounds=" << cert.rounds.size() << "\n";
    for (size_t i = 0; i < cert.rounds.size(); ++i) {
        const auto& r = cert.rounds[i];
        os << "round_" << i << "=" << r.round << " " << r.pieces_total << " "
           << fmt(r.remainder_mass) << " " << fmt(r.sum_piece_mass) << " "
           << fmt(r.sum_fill_mass) << " " << fmt(r.achieved_fraction) << "\n";
    }
    os << "pieces=" << cert.pieces.size() << "\n";
    for (size_t i = 0; i < cert.pieces.size(); ++i) {
        const auto& p = cert.pieces[i];
        os << "piece_" << i << "=" << fmt(p.mass) << " " << fmt(p.diam) << " "
           << fmt(p.cone_mass) << " " << fmt(p.cone_bound) << "\n";
    }
}

FillingCertificate read_certificate(std::istream& is) {
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw InputError("certificate: malformed line: " + line);
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    auto need = [&](const std::string& key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end()) throw InputError("certificate: missing key " + key);
        return it->second;
    };
    FillingCertificate cert;
    cert.k = std::stoi(need("k"));
    cert.consts.k = cert.k;
    cert.consts.lambda = parse_rational(need("lambda"));
    cert.consts.C_prev = std::stod(need("c_prev"));
    cert.consts.alpha = parse_rational(need("alpha"));
    cert.consts.delta = parse_rational(need("delta"));
    cert.consts.F = std::stod(need("f"));
    cert.consts.E = std::stod(need("e"));
    cert.consts.cone_const = std::stod(need("cone_const"));
    cert.consts.D = std::stod(need("d"));
    cert.input_mass = std::stod(need("input_mass"));
    cert.output_mass = std::stod(need("output_mass"));
    cert.ratio = std::stod(need("ratio"));
    cert.eps_stop = std::stod(need("eps_stop"));
    cert.mode = need("mode");
    cert.tol = std::stod(need("tol"));
    cert.boundary_exact = need("boundary_exact") == "1";
    cert.final_remainder_mass = std::stod(need("final_remainder_mass"));
    cert.final_cone_mass = std::stod(need("final_cone_mass"));
    cert.final_cone_bound = std::stod(need("final_cone_bound"));
    const size_t nrounds = std::stoul(need("rounds"));
    for (size_t i = 0; i < nrounds; ++i) {
        std::istringstream ls(need("round_" + std::to_string(i)));
        RoundTrace r;
        ls >> r.round >> r.pieces_total >> r.remainder_mass >> r.sum_piece_mass >>
            r.sum_fill_mass >> r.achieved_fraction;
        cert.rounds.push_back(r);
    }
    const size_t npieces = std::stoul(need("pieces"));
    for (size_t i = 0; i < npieces; ++i) {
        std::istringstream ls(need("piece_" + std::to_string(i)));
        PieceCert p;
        ls >> p.mass >> p.diam >> p.cone_mass >> p.cone_bound;
        cert.pieces.push_back(p);
    }
    return cert;
}

}  // namespace chainfill
