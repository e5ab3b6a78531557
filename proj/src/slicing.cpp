#include "chainfill/slicing.hpp"

#include <algorithm>
#include <cmath>

#include "chainfill/errors.hpp"
#include "chainfill/null_test.hpp"

namespace chainfill {

SliceResult slice(const Chain& t, const Point& y, const Rational& r_in, const ClipMode& mode) {
    if (t.dim() < 1) throw InputError("slicing requires dimension >= 1");
    if (r_in <= 0) throw InputError("slice radius must be positive");
    Rational r = r_in;
    const auto dists = vertex_distances(t, t.space(), y);
    if (mode.exact) {
        if (t.space().kind() != NormSpec::Kind::Polytope)
            throw InputError("exact slicing requires a polytope norm");
        for (const auto& v : support_vertices(t))
            if (t.space().dist_exact(v, y) == r)
                throw InputError("slice radius hits a vertex distance exactly; perturb r");
    } else {
        // perturb upward away from vertex distances (slices exist a.e.)
        const double tol = mode.tol;
        bool moved = true;
        int guard = 0;
        while (moved) {
            if (++guard > (int)dists.size() + 4)
                throw InputError("could not perturb slice radius away from tangencies");
            moved = false;
            const double rd = to_double(r);
            for (double d : dists)
                if (std::abs(d - rd) <= tol) {
                    r = rational_from_double(rd + 2 * tol);
                    moved = true;
                    break;
                }
        }
    }
    auto split = restrict_split(t, Ball{y, r}, mode);
    Chain s = boundary(split.inside);
    if (t.dim() >= 1) {
        // subtract (∂T)|B; zero for cycles
        Chain bt = boundary(t);
        if (!bt.is_zero()) {
            if (t.dim() == 1) {
                Chain btb(0, t.space());
                for (const auto& [sx, w] : bt.terms())
                    if (vertex_in_ball(t.space(), Ball{y, r}, sx.verts[0]))
                        btb.add_canonical(sx, w);
                s = s - btb;
            } else {
                s = s - restrict_to_ball(bt, Ball{y, r}, mode);
            }
        }
    }
    SliceResult out{r, split.realized_tol, std::move(s)};
    // realized tolerance also covers slice vertices kept from exact clips
    double worst = out.realized_tol;
    for (const auto& v : support_vertices(out.slice))
        worst = std::max(worst, std::abs(t.space().dist(v, y) - to_double(r)));
    out.realized_tol = worst;
    return out;
}

SliceDerivReport slice_mass_vs_derivative(const Chain& t, const Point& y,
                                          const std::vector<double>& radii,
                                          const ClipMode& mode) {
    if (!is_cycle(t)) throw InputError("slice/derivative report requires a cycle");
    const GrowthFunction g = growth_function(t, y);
    SliceDerivReport rep;
    for (double r : radii) {
        if (r <= 0) continue;
        // keep clear of breakpoints: right-derivatives jump there
        double rr = r;
        const double guard = mode.exact ? 1e-12 * std::max(1.0, r) : mode.tol;
        for (double b : g.breakpoints())
            while (std::abs(rr - b) <= guard) rr += 2 * guard;
        SliceDerivRow row;
        auto sl = slice(t, y, rational_from_double(rr), mode);
        row.r = to_double(sl.radius);
        row.slice_mass = mass(sl.slice);
        row.beta_right_deriv = g.right_derivative(to_double(sl.radius));
        row.violation = std::max(0.0, row.slice_mass - row.beta_right_deriv);
        rep.max_violation = std::max(rep.max_violation, row.violation);
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace chainfill
