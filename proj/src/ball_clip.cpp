#include "chainfill/ball_clip.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "chainfill/errors.hpp"

namespace chainfill {

ClipMode ClipMode::snap(double tol) {
    if (tol <= 0) throw InputError("snap tolerance must be positive");
    return ClipMode{false, tol};
}

bool vertex_in_ball(const NormSpec& space, const Ball& ball, const Point& v) {
    const Point d = sub(v, ball.center);
    switch (space.kind()) {
        case NormSpec::Kind::Polytope:
            return space.norm_exact(d) <= ball.radius;
        case NormSpec::Kind::Euclidean:
            return dot(d, d) <= ball.radius * ball.radius;
        case NormSpec::Kind::Lp:
            if (space.lp_exponent() == 1) return space.norm_exact(d) <= ball.radius;
            return space.norm(d) <= to_double(ball.radius);
    }
    return false;
}

std::vector<double> vertex_distances(const Chain& t, const NormSpec& space, const Point& y) {
    std::vector<double> out;
    for (const auto& v : support_vertices(t)) out.push_back(space.dist(v, y));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

using P2 = std::array<Rational, 2>;

struct HalfPlane {
    Rational a, b, c;  // a*s + b*t <= c
};

struct TriChart {
    Point v0, e1, e2;

    Point to_ambient(const P2& p) const {
        return add(v0, add(scale(e1, p[0]), scale(e2, p[1])));
    }
};

Rational poly_area2(const std::vector<P2>& poly) {
    Rational s = 0;
    for (size_t i = 0; i < poly.size(); ++i) {
        const P2& p = poly[i];
        const P2& q = poly[(i + 1) % poly.size()];
        s += p[0] * q[1] - p[1] * q[0];
    }
    return s;
}

std::vector<P2> clean_polygon(const std::vector<P2>& in) {
    std::vector<P2> p;
    for (const auto& q : in)
        if (p.empty() || q != p.back()) p.push_back(q);
    while (p.size() > 1 && p.front() == p.back()) p.pop_back();
    // drop collinear middle vertices
    bool changed = true;
    while (changed && p.size() >= 3) {
        changed = false;
        for (size_t i = 0; i < p.size(); ++i) {
            const P2& a = p[(i + p.size() - 1) % p.size()];
            const P2& b = p[i];
            const P2& c = p[(i + 1) % p.size()];
            Rational cr = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
            if (cr == 0) {
                p.erase(p.begin() + i);
                changed = true;
                break;
            }
        }
    }
    if (p.size() < 3 || poly_area2(p) == 0) return {};
    return p;
}

// Sutherland-Hodgman on both sides, exact. Vertices on the cut line belong
// to both outputs so the two sides share the cut exactly.
void split_polygon(const std::vector<P2>& poly, const HalfPlane& hp, std::vector<P2>& inside,
                   std::vector<P2>& outside) {
    inside.clear();
    outside.clear();
    const size_t n = poly.size();
    std::vector<Rational> f(n);
    for (size_t i = 0; i < n; ++i) f[i] = hp.a * poly[i][0] + hp.b * poly[i][1] - hp.c;
    for (size_t i = 0; i < n; ++i) {
        const size_t j = (i + 1) % n;
        const P2& p = poly[i];
        const P2& q = poly[j];
        if (f[i] <= 0) inside.push_back(p);
        if (f[i] >= 0) outside.push_back(p);
        if ((f[i] < 0 && f[j] > 0) || (f[i] > 0 && f[j] < 0)) {
            const Rational u = f[i] / (f[i] - f[j]);
            P2 x{p[0] + u * (q[0] - p[0]), p[1] + u * (q[1] - p[1])};
            inside.push_back(x);
            outside.push_back(std::move(x));
        }
    }
}

// Emits a fan triangulation of the (convex) chart polygon into dst. Picks a
// fan apex producing no degenerate triangle; falls back to a centroid fan.
void emit_polygon(Chain& dst, const TriChart& chart, const std::vector<P2>& raw, long long w) {
    const auto poly = clean_polygon(raw);
    if (poly.empty()) return;
    const size_t m = poly.size();
    auto cross_at = [&](const P2& o, const P2& a, const P2& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    for (size_t apex = 0; apex < m; ++apex) {
        bool ok = true;
        for (size_t i = apex + 1; i + 1 < apex + m && ok; ++i)
            if (cross_at(poly[apex], poly[i % m], poly[(i + 1) % m]) == 0) ok = false;
        if (!ok) continue;
        for (size_t i = apex + 1; i + 1 < apex + m; ++i)
            dst.add({chart.to_ambient(poly[apex]), chart.to_ambient(poly[i % m]),
                     chart.to_ambient(poly[(i + 1) % m])},
                    w);
        return;
    }
    P2 c{Rational(0), Rational(0)};
    for (const auto& q : poly) {
        c[0] += q[0];
        c[1] += q[1];
    }
    c[0] /= (long long)m;
    c[1] /= (long long)m;
    for (size_t i = 0; i < m; ++i)
        dst.add({chart.to_ambient(c), chart.to_ambient(poly[i]), chart.to_ambient(poly[(i + 1) % m])},
                w);
}

// ---- segment crossing machinery -----------------------------------------

// Canonical crossing parameters (exclusive of 0 and 1) of a sorted segment
// a < b with the sphere, plus the realized tolerance. Exact for polytope
// norms; snapped along the segment otherwise.
struct SegCrossings {
    std::vector<Rational> params;  // strictly increasing, in (0,1)
    double realized_tol = 0.0;
    bool lo_inside = false;  // side classification of the endpoint a
};

SegCrossings segment_crossings(const NormSpec& space, const Ball& ball, const Point& a,
                               const Point& b, const ClipMode& mode) {
    SegCrossings out;
    const Point d = sub(b, a);
    const Point ay = sub(a, ball.center);
    if (space.kind() == NormSpec::Kind::Polytope) {
        // sublevel {t: max_i l_i(t) <= r} is an exact rational interval
        Rational lo = 0, hi = 1;
        bool empty = false;
        for (const auto& fct : space.facets()) {
            const Rational A = dot(fct, ay);
            const Rational B = dot(fct, d);
            if (B == 0) {
                if (A > ball.radius) empty = true;
            } else if (B > 0) {
                hi = std::min(hi, (ball.radius - A) / B);
            } else {
                lo = std::max(lo, (ball.radius - A) / B);
            }
            if (empty || lo > hi) {
                empty = true;
                break;
            }
        }
        if (empty || lo >= hi) {
            out.lo_inside = false;
            return out;  // at most a zero-length touch: stays outside
        }
        out.lo_inside = (lo == 0);
        if (lo > 0) out.params.push_back(lo);
        if (hi < 1) out.params.push_back(hi);
        return out;
    }
    if (space.kind() == NormSpec::Kind::Euclidean) {
        const Rational r2 = ball.radius * ball.radius;
        const Rational c0 = dot(ay, ay) - r2;
        out.lo_inside = (c0 <= 0);
        const Rational c1 = 2 * dot(ay, d);
        const Rational c2 = dot(d, d);
        const bool hi_inside = (c0 + c1 + c2 <= 0);
        const double A = to_double(c2), B = to_double(c1), C = to_double(c0);
        const double disc = B * B - 4 * A * C;
        const double L = std::sqrt(A);
        const double grid = std::max(mode.tol / (2.0 * L), 1e-15);
        std::vector<double> roots;
        if (disc > 0) {
            const double sq = std::sqrt(disc);
            const double q = -0.5 * (B + (B >= 0 ? sq : -sq));
            double t1 = q / A, t2 = (q != 0) ? C / q : t1;
            if (t1 > t2) std::swap(t1, t2);
            if (t1 > 0 && t1 < 1) roots.push_back(t1);
            if (t2 > 0 && t2 < 1) roots.push_back(t2);
        }
        // Endpoint classification is exact; make the root list consistent.
        const bool parity_odd = out.lo_inside != hi_inside;
        if (parity_odd && roots.size() != 1) {
            // fall back to bisection on the exact-sign predicate in double
            double lo = 0, hi = 1;
            auto val = [&](double t) { return (A * t + B) * t + C; };
            const double flo = to_double(c0);
            for (int it = 0; it < 80; ++it) {
                const double m = 0.5 * (lo + hi);
                if ((val(m) <= 0) == (flo <= 0)) lo = m;
                else hi = m;
            }
            roots = {0.5 * (lo + hi)};
        } else if (!parity_odd && roots.size() == 1) {
            roots.clear();  // grazing contact: measure-zero, treated as none
        }
        for (double t : roots) {
            Rational tq = snap_to_grid(std::clamp(t, grid, 1.0 - grid), grid);
            if (tq <= 0) tq = snap_to_grid(grid, grid);
            if (tq >= 1) tq = 1 - snap_to_grid(grid, grid);
            if (out.params.empty() || tq > out.params.back()) out.params.push_back(tq);
            const Point p = add(a, scale(d, tq));
            out.realized_tol =
                std::max(out.realized_tol, std::abs(space.dist(p, ball.center) - to_double(ball.radius)));
        }
        if (out.params.size() == 2 && out.params[0] >= out.params[1]) out.params.clear();
        return out;
    }
    // lp: convex distance along the segment; bisection.
    const double r = to_double(ball.radius);
    auto g = [&](double t) {
        Point p(a.size());
        const Rational tq = rational_from_double(t);
        for (size_t i = 0; i < a.size(); ++i) p[i] = ay[i] + tq * d[i];
        return space.norm(p);
    };
    const double g0 = g(0), g1 = g(1);
    out.lo_inside = g0 <= r;
    double tm = 0.5;
    {
        double lo = 0, hi = 1;
        for (int it = 0; it < 100; ++it) {
            const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
            if (g(m1) < g(m2)) hi = m2;
            else lo = m1;
        }
        tm = 0.5 * (lo + hi);
    }
    const double L = euclid_norm(d);
    const double grid = std::max(mode.tol / (2.0 * L), 1e-15);
    auto bisect = [&](double lo, double hi) {
        const bool lo_in = g(lo) <= r;
        for (int it = 0; it < 70; ++it) {
            const double m = 0.5 * (lo + hi);
            if ((g(m) <= r) == lo_in) lo = m;
            else hi = m;
        }
        return 0.5 * (lo + hi);
    };
    std::vector<double> roots;
    if ((g0 <= r) != (g(tm) <= r)) roots.push_back(bisect(0, tm));
    if ((g(tm) <= r) != (g1 <= r)) roots.push_back(bisect(tm, 1));
    for (double t : roots) {
        Rational tq = snap_to_grid(std::clamp(t, grid, 1.0 - grid), grid);
        if (out.params.empty() || tq > out.params.back()) out.params.push_back(tq);
        const Point p = add(a, scale(d, tq));
        out.realized_tol =
            std::max(out.realized_tol, std::abs(space.dist(p, ball.center) - r));
    }
    return out;
}

// ---- per-simplex clippers -------------------------------------------------

struct ClipAccum {
    Chain inside;
    Chain outside;
    double realized_tol = 0.0;

    ClipAccum(int dim, const NormSpec& s) : inside(dim, s), outside(dim, s) {}
};

void clip_segment(ClipAccum& acc, const NormSpec& space, const Ball& ball, const Simplex& s,
                  long long w, const ClipMode& mode) {
    const Point& a = s.verts[0];
    const Point& b = s.verts[1];  // sorted: canonical parameterization a -> b
    auto cr = segment_crossings(space, ball, a, b, mode);
    acc.realized_tol = std::max(acc.realized_tol, cr.realized_tol);
    std::vector<Rational> cuts = {Rational(0)};
    cuts.insert(cuts.end(), cr.params.begin(), cr.params.end());
    cuts.push_back(1);
    bool inside = cr.lo_inside;
    const Point d = sub(b, a);
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i] == cuts[i + 1]) continue;
        const Point p = (cuts[i] == 0) ? a : add(a, scale(d, cuts[i]));
        const Point q = (cuts[i + 1] == 1) ? b : add(a, scale(d, cuts[i + 1]));
        (inside ? acc.inside : acc.outside).add({p, q}, w);
        inside = !inside;
    }
}

// Foot of y on the triangle's plane plus squared distance (exact).
struct PlaneFoot {
    P2 chart;      // chart coordinates of the foot
    Point ambient;
    Rational h2;   // squared euclidean distance from y to the plane
};

PlaneFoot plane_foot(const TriChart& chart, const Point& y) {
    const Point d = sub(y, chart.v0);
    // Solve Gram system for projection coefficients.
    const Rational g11 = dot(chart.e1, chart.e1), g12 = dot(chart.e1, chart.e2),
                   g22 = dot(chart.e2, chart.e2);
    const Rational b1 = dot(chart.e1, d), b2 = dot(chart.e2, d);
    const Rational det = g11 * g22 - g12 * g12;
    PlaneFoot f;
    f.chart = {(b1 * g22 - b2 * g12) / det, (g11 * b2 - g12 * b1) / det};
    f.ambient = chart.to_ambient(f.chart);
    const Point resid = sub(y, f.ambient);
    f.h2 = dot(resid, resid);
    return f;
}

void clip_triangle(ClipAccum& acc, const NormSpec& space, const Ball& ball, const TriChart& chart,
                   const std::vector<P2>& tri, long long w, const ClipMode& mode, int depth);

// Clips an arbitrary chart polygon by first fanning it into triangles.
void clip_chart_polygon(ClipAccum& acc, const NormSpec& space, const Ball& ball,
                        const TriChart& chart, const std::vector<P2>& poly, long long w,
                        const ClipMode& mode, int depth) {
    const auto p = clean_polygon(poly);
    if (p.empty()) return;
    for (size_t i = 1; i + 1 < p.size(); ++i)
        clip_triangle(acc, space, ball, chart, {p[0], p[i], p[i + 1]}, w, mode, depth);
}

void clip_triangle(ClipAccum& acc, const NormSpec& space, const Ball& ball, const TriChart& chart,
                   const std::vector<P2>& tri, long long w, const ClipMode& mode, int depth) {
    if (depth > 4) throw InvariantViolation("triangle clip recursion too deep");
    std::vector<HalfPlane> constraints;

    if (space.kind() == NormSpec::Kind::Polytope) {
        const Point base = sub(chart.v0, ball.center);
        for (const auto& fct : space.facets()) {
            HalfPlane hp;
            // l(s,t) = <f, v0-y> + s <f, e1'> + t <f, e2'> where the chart of
            // this (possibly sub-) triangle is affine in the master chart.
            // Express via master chart directly: tri vertices are master
            // chart points, so constraints stay in master chart coordinates.
            hp.a = dot(fct, chart.e1);
            hp.b = dot(fct, chart.e2);
            hp.c = ball.radius - dot(fct, base);
            constraints.push_back(hp);
        }
    } else if (space.kind() == NormSpec::Kind::Euclidean) {
        // vertex classification (exact) and per-edge canonical crossings
        const Rational r2 = ball.radius * ball.radius;
        std::array<Point, 3> amb;
        std::array<bool, 3> vin;
        for (int i = 0; i < 3; ++i) {
            amb[i] = chart.to_ambient(tri[i]);
            const Point d = sub(amb[i], ball.center);
            vin[i] = dot(d, d) <= r2;
        }
        if (vin[0] && vin[1] && vin[2]) {
            emit_polygon(acc.inside, chart, tri, w);
            return;
        }
        std::vector<std::vector<P2>> edge_pts(3);
        bool any_cross = false;
        for (int i = 0; i < 3; ++i) {
            const int j = (i + 1) % 3;
            const bool swap_order = !(amb[i] < amb[j]);
            const Point& a = swap_order ? amb[j] : amb[i];
            const Point& b = swap_order ? amb[i] : amb[j];
            auto cr = segment_crossings(space, ball, a, b, mode);
            acc.realized_tol = std::max(acc.realized_tol, cr.realized_tol);
            std::vector<Rational> ts = cr.params;
            if (swap_order) {
                std::reverse(ts.begin(), ts.end());
                for (auto& t : ts) t = 1 - t;
            }
            for (const auto& t : ts) {
                P2 p{tri[i][0] + t * (tri[j][0] - tri[i][0]),
                     tri[i][1] + t * (tri[j][1] - tri[i][1])};
                edge_pts[i].push_back(p);
                any_cross = true;
            }
        }
        if (!any_cross) {
            // plane circle strictly interior (hole), or no intersection at all
            const PlaneFoot foot = plane_foot(chart, ball.center);
            if (foot.h2 < r2) {
                // barycentric test of the foot within this chart triangle
                const Rational dx1 = tri[1][0] - tri[0][0], dy1 = tri[1][1] - tri[0][1];
                const Rational dx2 = tri[2][0] - tri[0][0], dy2 = tri[2][1] - tri[0][1];
                const Rational det = dx1 * dy2 - dx2 * dy1;
                const Rational px = foot.chart[0] - tri[0][0], py = foot.chart[1] - tri[0][1];
                const Rational u = (px * dy2 - py * dx2) / det;
                const Rational v = (dx1 * py - dy1 * px) / det;
                if (u > 0 && v > 0 && u + v < 1) {
                    // split through the foot and recurse; both halves then cross
                    HalfPlane cut{Rational(1), Rational(0), foot.chart[0]};
                    if (dx1 == 0 && dx2 == 0) cut = {Rational(0), Rational(1), foot.chart[1]};
                    std::vector<P2> lo, hi;
                    split_polygon(tri, cut, lo, hi);
                    clip_chart_polygon(acc, space, ball, chart, lo, w, mode, depth + 1);
                    clip_chart_polygon(acc, space, ball, chart, hi, w, mode, depth + 1);
                    return;
                }
            }
            emit_polygon(acc.outside, chart, tri, w);
            return;
        }
        // boundary walk: nodes in cyclic order with inside/outside state
        struct Node {
            P2 pt;
            bool crossing;
        };
        std::vector<Node> nodes;
        for (int i = 0; i < 3; ++i) {
            nodes.push_back({tri[i], false});
            for (const auto& p : edge_pts[i]) nodes.push_back({p, true});
        }
        std::vector<bool> seg_inside(nodes.size());
        bool state = vin[0];
        for (size_t i = 0; i < nodes.size(); ++i) {
            if (nodes[i].crossing) state = !state;
            seg_inside[i] = state;  // state of the segment starting at node i
        }
        // exits: crossing nodes where the following segment is outside
        const PlaneFoot foot = plane_foot(chart, ball.center);
        const double rho2 = to_double(r2 - foot.h2);
        if (rho2 <= 0) throw InvariantViolation("clip: crossings with empty plane circle");
        const double rho = std::sqrt(rho2);
        // orthonormal frame of the chart plane (doubles)
        const double e11 = euclid_norm(chart.e1);
        const Rational p12 = dot(chart.e1, chart.e2) / dot(chart.e1, chart.e1);
        const Point e2perp = sub(chart.e2, scale(chart.e1, p12));
        const double e22 = euclid_norm(e2perp);
        auto to_frame = [&](const P2& p) {
            // chart (s,t) -> orthonormal coords (s + t*p12_along)*|e1| etc.
            const double s = to_double(p[0]), t = to_double(p[1]);
            return std::array<double, 2>{(s + t * to_double(p12)) * e11, t * e22};
        };
        const auto fc = to_frame(foot.chart);
        const double grid = std::max(mode.tol / (2.0 * (e11 + e22)), 1e-15);
        std::vector<HalfPlane> chords;
        auto add_chord = [&](const P2& p, const P2& q) {
            if (p == q) return;
            HalfPlane hp;
            hp.a = q[1] - p[1];
            hp.b = p[0] - q[0];
            hp.c = hp.a * p[0] + hp.b * p[1];
            const Rational at_foot = hp.a * foot.chart[0] + hp.b * foot.chart[1];
            if (at_foot > hp.c) {
                hp.a = -hp.a;
                hp.b = -hp.b;
                hp.c = -hp.c;
            } else if (at_foot == hp.c) {
                throw InvariantViolation("clip: chord through the plane circle center");
            }
            chords.push_back(hp);
        };
        const size_t n = nodes.size();
        for (size_t i = 0; i < n; ++i) {
            if (!(nodes[i].crossing && !seg_inside[i])) continue;  // not an exit
            size_t j = (i + 1) % n;
            while (!nodes[j].crossing) j = (j + 1) % n;  // next crossing = entry
            const auto pe = to_frame(nodes[i].pt);
            const auto pn = to_frame(nodes[j].pt);
            double a0 = std::atan2(pe[1] - fc[1], pe[0] - fc[0]);
            double a1 = std::atan2(pn[1] - fc[1], pn[0] - fc[0]);
            // choose the arc that runs inside the triangle: test both midpoints
            auto midpoint_bary_ok = [&](double am) {
                const double mx = fc[0] + rho * std::cos(am), my = fc[1] + rho * std::sin(am);
                // back to chart coords
                const double t = my / e22;
                const double s = mx / e11 - t * to_double(p12);
                const double dx1 = to_double(tri[1][0] - tri[0][0]),
                             dy1 = to_double(tri[1][1] - tri[0][1]);
                const double dx2 = to_double(tri[2][0] - tri[0][0]),
                             dy2 = to_double(tri[2][1] - tri[0][1]);
                const double det = dx1 * dy2 - dx2 * dy1;
                const double px = s - to_double(tri[0][0]), py = t - to_double(tri[0][1]);
                const double u = (px * dy2 - py * dx2) / det;
                const double v = (dx1 * py - dy1 * px) / det;
                return u > -1e-9 && v > -1e-9 && u + v < 1 + 1e-9;
            };
            double delta = a1 - a0;
            while (delta <= -M_PI) delta += 2 * M_PI;
            while (delta > M_PI) delta -= 2 * M_PI;
            if (!midpoint_bary_ok(a0 + delta / 2)) {
                delta += (delta > 0) ? -2 * M_PI : 2 * M_PI;
            }
            const double theta_max = std::clamp(std::sqrt(4.0 * mode.tol / rho), 1e-3, M_PI / 4);
            const int pieces = std::max(1, (int)std::ceil(std::abs(delta) / theta_max));
            P2 prev = nodes[i].pt;
            for (int pc = 1; pc < pieces; ++pc) {
                const double am = a0 + delta * pc / pieces;
                const double mx = fc[0] + rho * std::cos(am), my = fc[1] + rho * std::sin(am);
                const double t = my / e22;
                const double s = mx / e11 - t * to_double(p12);
                P2 snapped{snap_to_grid(s, grid), snap_to_grid(t, grid)};
                const Point pa = chart.to_ambient(snapped);
                acc.realized_tol = std::max(
                    acc.realized_tol,
                    std::abs(space.dist(pa, ball.center) - to_double(ball.radius)));
                add_chord(prev, snapped);
                prev = snapped;
            }
            add_chord(prev, nodes[j].pt);
        }
        constraints = std::move(chords);
    } else {
        throw InputError("snap clipping of 2-chains supports euclidean and polytope norms only");
    }

    // Generic convex sweep relative to this chart triangle: re-run S-H on the
    // triangle polygon with the collected constraints.
    std::vector<P2> work = tri;
    for (const auto& hp : constraints) {
        if (hp.a == 0 && hp.b == 0) {
            if (hp.c >= 0) continue;
            emit_polygon(acc.outside, chart, work, w);
            return;
        }
        std::vector<P2> in, out;
        split_polygon(work, hp, in, out);
        emit_polygon(acc.outside, chart, out, w);
        in = clean_polygon(in);
        if (in.empty()) return;
        work = std::move(in);
    }
    emit_polygon(acc.inside, chart, work, w);
}

}  // namespace

RestrictSplit restrict_split(const Chain& t, const Ball& ball, const ClipMode& mode) {
    const NormSpec& space = t.space();
    if ((int)ball.center.size() != space.dim())
        throw InputError("ball center dimension mismatch");
    if (ball.radius < 0) throw InputError("ball radius must be >= 0");
    if (mode.exact && space.kind() != NormSpec::Kind::Polytope)
        throw InputError("exact clipping requires a polytope norm");
    if (!mode.exact && mode.tol <= 0) throw InputError("snap tolerance must be positive");

    ClipAccum acc(t.dim(), space);
    for (const auto& [s, w] : t.terms()) {
        // fast path: every vertex inside the (convex) ball
        bool all_in = true;
        for (const auto& v : s.verts)
            if (!vertex_in_ball(space, ball, v)) {
                all_in = false;
                break;
            }
        if (all_in) {
            acc.inside.add_canonical(s, w);
            continue;
        }
        switch (t.dim()) {
            case 0:
                acc.outside.add_canonical(s, w);
                break;
            case 1:
                clip_segment(acc, space, ball, s, w, mode);
                break;
            case 2: {
                TriChart chart{s.verts[0], sub(s.verts[1], s.verts[0]),
                               sub(s.verts[2], s.verts[0])};
                clip_triangle(acc, space, ball, chart,
                              {{Rational(0), Rational(0)},
                               {Rational(1), Rational(0)},
                               {Rational(0), Rational(1)}},
                              w, mode, 0);
                break;
            }
            default:
                throw InputError("restriction implemented for chains of dimension <= 2");
        }
    }
    return RestrictSplit{std::move(acc.inside), std::move(acc.outside), acc.realized_tol};
}

Chain restrict_to_ball(const Chain& t, const Ball& ball, const ClipMode& mode) {
    return restrict_split(t, ball, mode).inside;
}

}  // namespace chainfill
