#include "chainfill/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "chainfill/errors.hpp"
#include "chainfill/null_test.hpp"
#include "chainfill/product_cone.hpp"

namespace chainfill {

bool ode_lower_bound_check(double cbar, int k, const std::function<double(double)>& beta,
                           double r0, double r1, int grid, double rel_tol) {
    if (!(r0 >= 0) || !(r1 > r0)) throw InputError("ode check: invalid interval");
    if (k < 2) throw InputError("ode check: k >= 2");
    const double denom = std::pow(cbar, k - 1) * std::pow((double)k, k);
    for (int i = 0; i <= grid; ++i) {
        const double r = r0 + (r1 - r0) * i / grid;
        const double bound = std::pow(r, k) / denom;
        if (beta(r) < bound * (1 - rel_tol)) return false;
    }
    return true;
}

namespace {

// merge closed intervals and return gaps within [lo, hi]
std::vector<std::pair<double, double>> interval_gaps(std::vector<std::pair<double, double>> iv,
                                                     double lo, double hi) {
    std::vector<std::pair<double, double>> gaps;
    std::sort(iv.begin(), iv.end());
    double cursor = lo;
    for (const auto& [a, b] : iv) {
        if (a > hi) break;
        if (a > cursor) gaps.push_back({cursor, std::min(a, hi)});
        cursor = std::max(cursor, b);
        if (cursor >= hi) break;
    }
    if (cursor < hi) gaps.push_back({cursor, hi});
    return gaps;
}

}  // namespace

Rational find_split_radius(const Chain& t, const Point& y, const GrowthFunction& g,
                           const ConstantsChain& consts, const ClipMode& mode) {
    const int k = consts.k;
    const double r0 = g.critical_radius(consts.F, k);
    if (!(r0 > 0)) throw NoSplitRadius("critical radius is zero at the candidate");
    const double guard = mode.exact ? 1e-12 * r0 : 2 * mode.tol;

    if (k == 1) {
        // exact version: a radius whose sphere misses the support entirely
        std::vector<std::pair<double, double>> ranges;
        for (const auto& [s, w] : t.terms()) {
            const auto dr = simplex_distance_range(t.space(), y, s);
            ranges.push_back({dr.lo, dr.hi});
        }
        const double lo = r0 * (1 + 1e-12), hi = 2 * r0 * (1 - 1e-12);
        for (auto& [a, b] : ranges) {
            a -= guard;
            b += guard;
        }
        auto gaps = interval_gaps(std::move(ranges), lo, hi);
        for (const auto& [a, b] : gaps) {
            if (b - a <= 2 * guard + 1e-14 * r0) continue;
            return rational_from_double(0.5 * (a + b));
        }
        throw NoSplitRadius("no sphere in [r0, 2r0) misses the support (k = 1)");
    }

    // k >= 2: C beta'(r)^{k/(k-1)} < lambda beta(r) somewhere in [r0, 4r0/3]
    const double lam = to_double(consts.lambda);
    const double cc = consts.C_prev;
    auto ratio = [&](double r) {
        const double b = g.eval(r);
        if (b <= 0) return 1e300;
        const double d = g.right_derivative(r);
        return cc * std::pow(d, k / (k - 1.0)) / (lam * b);
    };
    auto clear_of_tangency = [&](double r) {
        for (double b : g.breakpoints())
            if (std::abs(r - b) <= guard) return false;
        return true;
    };
    for (int ngrid = 128; ngrid <= 256; ngrid *= 2) {
        double best = 1e300;
        double best_r = -1;
        for (int i = 1; i < ngrid; ++i) {
            const double r = r0 + (r0 / 3.0) * i / ngrid;
            if (!clear_of_tangency(r)) continue;
            const double q = ratio(r);
            if (q < best - 1e-12) {
                best = q;
                best_r = r;
            }
        }
        if (best < 1 - 1e-6 && best_r > 0) return rational_from_double(best_r);
    }
    throw NoSplitRadius("no radius in [r0, 4r0/3] satisfies the slice-filling inequality");
}

SplitPiece split_off(const Chain& t, const Point& y, double r0, const Rational& r,
                     const ConstantsChain& consts, const ClipMode& mode,
                     const SliceFiller& filler) {
    SplitPiece out;
    out.center = y;
    out.r0 = r0;
    out.radius = r;
    auto split = restrict_split(t, Ball{y, r}, mode);
    out.restricted_mass = mass(split.inside);
    const double lam = to_double(consts.lambda);

    if (consts.k == 1) {
        if (!is_cycle(split.inside))
            throw NoSplitRadius("k=1 split: sphere crossed the support after all");
        out.piece = std::move(split.inside);
        out.rest = std::move(split.outside);
    } else {
        Chain slice_chain = boundary(split.inside);
        out.slice_mass = mass(slice_chain);
        Chain fill(consts.k, t.space());
        bool have_fill = false;
        if (!slice_chain.is_zero()) {
            if (!filler) throw InputError("split_off: k >= 2 requires a slice filler");
            fill = filler(slice_chain);
            have_fill = true;
            if (!currents_equal(boundary(fill), slice_chain))
                throw InvariantViolation("slice filling has the wrong boundary");
            out.fill_mass = mass(fill);
            // paper guarantee: M(S) <= lambda beta(r)
            bool mass_ok = out.fill_mass <= lam * out.restricted_mass * (1 + 1e-9);
            // support guarantee: spt(S) within B(y, 2 r0)
            bool supp_ok = true;
            for (const auto& v : support_vertices(fill))
                if (t.space().dist(v, y) > 2 * r0 * (1 + 1e-9)) supp_ok = false;
            if (!mass_ok || !supp_ok) {
                // constructive fallback: cone the slice from one of its own
                // support points; support then stays inside B(y, r + tol)
                auto cr = cone_from_support(slice_chain);
                const double cone_mass = cr.mass;
                if (cone_mass <= lam * out.restricted_mass * (1 + 1e-9)) {
                    fill = std::move(cr.filling);
                    out.fill_mass = cone_mass;
                    out.cone_fallback = true;
                } else if (!mass_ok) {
                    std::ostringstream os;
                    os << "slice filling mass " << out.fill_mass << " and cone fallback "
                       << cone_mass << " both exceed lambda*beta = "
                       << lam * out.restricted_mass;
                    throw InvariantViolation(os.str());
                } else {
                    fill = std::move(cr.filling);
                    out.fill_mass = cone_mass;
                    out.cone_fallback = true;
                }
            }
        }
        out.piece = split.inside - fill;
        out.rest = split.outside + fill;
        if (have_fill) {
            const double lo = (1 - lam) * out.restricted_mass * (1 - 1e-9);
            const double hi = (1 + lam) * out.restricted_mass * (1 + 1e-9);
            out.piece_mass = mass(out.piece);
            if (out.piece_mass < lo || out.piece_mass > hi)
                throw InvariantViolation("split piece mass outside the (1 +- lambda) beta bracket");
        }
        if (!is_cycle(out.piece)) throw InvariantViolation("split piece is not a cycle");
    }
    out.piece_mass = mass(out.piece);
    out.diam = out.piece.is_zero() ? 0.0 : support_diameter(out.piece);
    return out;
}

Decomposition decompose(const Chain& t, const ConstantsChain& consts,
                        const DecomposeConfig& cfg) {
    Decomposition dec;
    dec.consts = consts;
    dec.remainder = Chain(t.dim(), t.space());
    if (t.is_zero()) return dec;
    if (t.dim() != consts.k) throw InputError("decompose: constants dimension mismatch");
    if (!is_cycle(t)) throw InputError("decompose requires a cycle");
    dec.input_mass = mass(t);

    const double alpha = to_double(consts.alpha);
    std::vector<WeightedCandidate> cands;
    CoverSelection sel;
    int extra = cfg.extra_candidates;
    for (int attempt = 0;; ++attempt) {
        cands = select_candidates(t, consts.F, consts.k, extra, cfg.seed);
        if (cands.empty()) throw InvariantViolation("no candidate has positive critical radius");
        sel = greedy_cover(cands, t.space(), dec.input_mass);
        if (sel.achieved_fraction >= alpha * (1 - 1e-9)) break;
        if (attempt >= cfg.max_densify_retries) {
            std::ostringstream os;
            os << "greedy cover captured fraction " << sel.achieved_fraction
               << " below alpha = " << alpha << " after densification";
            throw InvariantViolation(os.str());
        }
        extra = extra == 0 ? 2 : extra * 2;
    }
    dec.achieved_fraction = sel.achieved_fraction;

    Chain running = t;
    for (size_t idx : sel.selected) {
        const auto& cand = cands[idx];
        const Rational r = find_split_radius(t, cand.y, cand.growth, consts, cfg.mode);
        auto piece = split_off(running, cand.y, cand.r0, r, consts, cfg.mode, cfg.filler);
        running = piece.rest;
        piece.rest = Chain(t.dim(), t.space());  // drop the copy held in the record
        dec.pieces.push_back(std::move(piece));
    }
    dec.remainder = std::move(running);

    // certify (exactness + (i)-(iii)) before returning
    Chain resid = t - dec.remainder;
    double sum_piece_mass = 0;
    for (const auto& p : dec.pieces) {
        resid.add_chain(p.piece, -1);
        sum_piece_mass += p.piece_mass;
        const double roundness = consts.E * std::pow(p.piece_mass, 1.0 / consts.k);
        if (p.diam > roundness * (1 + 1e-9)) {
            std::ostringstream os;
            os << "piece not round: diam " << p.diam << " > E M^{1/k} = " << roundness;
            throw InvariantViolation(os.str());
        }
        if (!is_cycle(p.piece)) throw InvariantViolation("piece is not a cycle");
    }
    if (!is_null_current(resid))
        throw InvariantViolation("decomposition identity T = sum T_i + R violated");
    if (!is_cycle(dec.remainder)) throw InvariantViolation("remainder is not a cycle");
    const double rem_mass = mass(dec.remainder);
    const double delta = to_double(consts.delta);
    if (rem_mass > (1 - delta) * dec.input_mass * (1 + 1e-9)) {
        std::ostringstream os;
        os << "remainder mass " << rem_mass << " exceeds (1-delta) M(T) = "
           << (1 - delta) * dec.input_mass;
        throw InvariantViolation(os.str());
    }
    const double lam = to_double(consts.lambda);
    if (sum_piece_mass > (1 + lam) * dec.input_mass * (1 + 1e-9))
        throw InvariantViolation("sum of piece masses exceeds (1+lambda) M(T)");
    return dec;
}

}  // namespace chainfill
