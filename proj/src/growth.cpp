#include "chainfill/growth.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "chainfill/errors.hpp"

namespace chainfill {

using namespace growth_detail;

namespace {

using P2 = std::array<Rational, 2>;

double poly_eval(const PolyPart& p, double r) {
    double v = 0;
    for (const auto& [sr, h] : p.steps)
        if (r >= sr) v += h;
    if (p.bps.empty() || r >= p.bps.back()) {
        double cont = p.total;
        for (const auto& [sr, h] : p.steps) cont -= h;
        return v + cont;
    }
    if (r < p.bps.front()) return v;
    const size_t i = std::upper_bound(p.bps.begin(), p.bps.end(), r) - p.bps.begin() - 1;
    const auto& c = p.coeff[i];
    return v + c[0] + r * (c[1] + r * c[2]);
}

double poly_deriv(const PolyPart& p, double r) {
    if (p.bps.empty() || r >= p.bps.back() || r < p.bps.front()) return 0;
    const size_t i = std::upper_bound(p.bps.begin(), p.bps.end(), r) - p.bps.begin() - 1;
    const auto& c = p.coeff[i];
    return c[1] + 2 * r * c[2];
}

double seg_eval(const SegEuclidPart& p, double r) {
    if (r <= p.h) return 0;
    const double w = std::sqrt(r * r - p.h * p.h) / p.len;
    const double lo = std::max(0.0, p.tstar - w), hi = std::min(1.0, p.tstar + w);
    return p.scale * std::max(0.0, hi - lo);
}

double seg_deriv(const SegEuclidPart& p, double r) {
    if (r <= p.h || r >= p.rmax) return 0;
    const double rad = std::sqrt(r * r - p.h * p.h);
    const double w = rad / p.len;
    const double dw = r / (p.len * rad);
    int active = 0;
    if (p.tstar - w > 0) ++active;
    if (p.tstar + w < 1) ++active;
    // right-derivative: a side already clamped stays clamped for r' > r
    return p.scale * active * dw;
}

double signed_angle(double ux, double uy, double vx, double vy) {
    return std::atan2(ux * vy - uy * vx, ux * vx + uy * vy);
}

// Area of triangle(0, p, q) ∩ disk(0, rho), signed by cross(p, q).
double circ_tri_wedge(const std::array<double, 2>& p, const std::array<double, 2>& q, double rho) {
    const double rho2 = rho * rho;
    auto inside = [&](const std::array<double, 2>& x) {
        return x[0] * x[0] + x[1] * x[1] <= rho2;
    };
    auto cross2 = [](const std::array<double, 2>& a, const std::array<double, 2>& b) {
        return a[0] * b[1] - a[1] * b[0];
    };
    const double dx = q[0] - p[0], dy = q[1] - p[1];
    const double a = dx * dx + dy * dy;
    if (a == 0) return 0;
    const double b = 2 * (p[0] * dx + p[1] * dy);
    const double c = p[0] * p[0] + p[1] * p[1] - rho2;
    const double disc = b * b - 4 * a * c;
    auto sector = [&](const std::array<double, 2>& u, const std::array<double, 2>& v) {
        return 0.5 * rho2 * signed_angle(u[0], u[1], v[0], v[1]);
    };
    if (disc <= 0) return inside(p) && inside(q) ? 0.5 * cross2(p, q) : sector(p, q);
    const double sq = std::sqrt(disc);
    double t1 = (-b - sq) / (2 * a), t2 = (-b + sq) / (2 * a);
    const double t1c = std::clamp(t1, 0.0, 1.0), t2c = std::clamp(t2, 0.0, 1.0);
    if (t2c <= t1c) return sector(p, q);  // chord misses the segment
    const std::array<double, 2> x1{p[0] + t1c * dx, p[1] + t1c * dy};
    const std::array<double, 2> x2{p[0] + t2c * dx, p[1] + t2c * dy};
    return sector(p, x1) + 0.5 * cross2(x1, x2) + sector(x2, q);
}

double tri_area_in_disk(const TriEuclidPart& p, double rho) {
    double s = circ_tri_wedge(p.frame[0], p.frame[1], rho) +
               circ_tri_wedge(p.frame[1], p.frame[2], rho) +
               circ_tri_wedge(p.frame[2], p.frame[0], rho);
    return std::abs(s);
}

double tri_eval(const TriEuclidPart& p, double r) {
    if (r <= p.h) return 0;
    return p.scale * tri_area_in_disk(p, std::sqrt(r * r - p.h * p.h));
}

double tri_deriv(const TriEuclidPart& p, double r) {
    if (r <= p.h || r >= p.rmax) return 0;
    const double step = std::max(1e-7 * std::max(r, 1.0), 1e-12);
    return (tri_eval(p, r + step) - tri_eval(p, r)) / step;
}

double sampled_eval(const SampledPart& p, double r) {
    if (p.r.empty() || r <= p.r.front()) return 0;
    if (r >= p.r.back()) return p.total;
    const size_t i = std::upper_bound(p.r.begin(), p.r.end(), r) - p.r.begin() - 1;
    const double hseg = p.r[i + 1] - p.r[i];
    const double t = (r - p.r[i]) / hseg;
    const double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
    const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
    return h00 * p.v[i] + hseg * h10 * p.m[i] + h01 * p.v[i + 1] + hseg * h11 * p.m[i + 1];
}

double sampled_deriv(const SampledPart& p, double r) {
    if (p.r.empty() || r < p.r.front() || r >= p.r.back()) return 0;
    const size_t i = std::upper_bound(p.r.begin(), p.r.end(), r) - p.r.begin() - 1;
    const double hseg = p.r[i + 1] - p.r[i];
    const double t = (r - p.r[i]) / hseg;
    const double d00 = (6 * t * t - 6 * t) / hseg, d10 = 3 * t * t - 4 * t + 1;
    const double d01 = (6 * t - 6 * t * t) / hseg, d11 = 3 * t * t - 2 * t;
    return d00 * p.v[i] + d10 * p.m[i] + d01 * p.v[i + 1] + d11 * p.m[i + 1];
}

struct PartOps {
    double operator()(const PolyPart& p) const { return poly_eval(p, r); }
    double operator()(const SegEuclidPart& p) const { return seg_eval(p, r); }
    double operator()(const TriEuclidPart& p) const { return tri_eval(p, r); }
    double operator()(const SampledPart& p) const { return sampled_eval(p, r); }
    double r;
};

struct PartDeriv {
    double operator()(const PolyPart& p) const { return poly_deriv(p, r); }
    double operator()(const SegEuclidPart& p) const { return seg_deriv(p, r); }
    double operator()(const TriEuclidPart& p) const { return tri_deriv(p, r); }
    double operator()(const SampledPart& p) const { return sampled_deriv(p, r); }
    double r;
};

// ---- polytope k = 1: exact piecewise-linear measure ------------------------

// Upper envelope of affine functions A + B t over [0, 1].
struct EnvelopePiece {
    Rational t_lo, t_hi, A, B;
};

std::vector<EnvelopePiece> upper_envelope(const std::vector<std::pair<Rational, Rational>>& lines) {
    std::vector<EnvelopePiece> out;
    Rational t = 0;
    // active = argmax at t (ties: largest slope)
    size_t act = 0;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Rational vi = lines[i].first + lines[i].second * t;
        const Rational va = lines[act].first + lines[act].second * t;
        if (vi > va || (vi == va && lines[i].second > lines[act].second)) act = i;
    }
    int guard = 0;
    while (t < 1) {
        if (++guard > 1000) throw InvariantViolation("envelope walk failed");
        Rational t_next = 1;
        size_t next = act;
        for (size_t j = 0; j < lines.size(); ++j) {
            if (lines[j].second <= lines[act].second) continue;
            const Rational tx =
                (lines[act].first - lines[j].first) / (lines[j].second - lines[act].second);
            if (tx > t && tx < t_next) {
                t_next = tx;
                next = j;
            } else if (tx > t && tx == t_next && next != act &&
                       lines[j].second > lines[next].second) {
                next = j;
            }
        }
        out.push_back({t, t_next, lines[act].first, lines[act].second});
        t = t_next;
        act = next;
    }
    return out;
}

PolyPart build_polytope_segment(const NormSpec& space, const Point& y, const Simplex& s,
                                long long w, double density) {
    const Point a = s.verts[0];
    const Point d = sub(s.verts[1], a);
    const Point ay = sub(a, y);
    std::vector<std::pair<Rational, Rational>> lines;
    for (const auto& fct : space.facets()) lines.push_back({dot(fct, ay), dot(fct, d)});
    const auto env = upper_envelope(lines);
    const double mass_scale = std::abs((double)w) * density * euclid_norm(d);
    // measure-in-t as a function of r: ramps for sloped pieces, steps for flats
    std::vector<std::pair<Rational, Rational>> events;  // (value, slope delta), slope in t per r
    std::vector<std::pair<Rational, Rational>> steps;   // (value, height in t)
    for (const auto& pc : env) {
        if (pc.B == 0) {
            steps.push_back({pc.A, pc.t_hi - pc.t_lo});
            continue;
        }
        Rational v0 = pc.A + pc.B * pc.t_lo;
        Rational v1 = pc.A + pc.B * pc.t_hi;
        if (v0 > v1) std::swap(v0, v1);
        const Rational slope = abs(Rational(1) / pc.B);
        events.push_back({v0, slope});
        events.push_back({v1, -slope});
    }
    std::sort(events.begin(), events.end(),
              [](const auto& x, const auto& z) { return x.first < z.first; });
    PolyPart part;
    std::vector<Rational> cuts;
    for (const auto& [v, sl] : events) cuts.push_back(v);
    for (const auto& [v, h] : steps) cuts.push_back(v);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    // integrate the slope events across the cut intervals
    Rational value = 0;
    size_t ei = 0;
    Rational slope = 0;
    for (size_t i = 0; i < cuts.size(); ++i) {
        while (ei < events.size() && events[ei].first <= cuts[i]) slope += events[ei++].second;
        part.bps.push_back(to_double(cuts[i]));
        if (i + 1 < cuts.size()) {
            // linear on [cuts[i], cuts[i+1]): value + slope * (r - cuts[i])
            const double c1 = to_double(slope) * mass_scale;
            double c0 = to_double(value - slope * cuts[i]) * mass_scale;
            // steps at or before cuts[i] are added separately; exclude here
            part.coeff.push_back({c0, c1, 0.0});
            value += slope * (cuts[i + 1] - cuts[i]);
        }
    }
    for (const auto& [v, h] : steps)
        part.steps.push_back({to_double(v), to_double(h) * mass_scale});
    part.total = mass_scale;  // measure 1 in t at full coverage
    return part;
}

// ---- polytope k = 2: exact piecewise-quadratic area ------------------------

Rational shoelace2(const std::vector<P2>& poly) {
    Rational s = 0;
    for (size_t i = 0; i < poly.size(); ++i) {
        const P2& p = poly[i];
        const P2& q = poly[(i + 1) % poly.size()];
        s += p[0] * q[1] - p[1] * q[0];
    }
    return s;
}

// Clip a chart polygon by a*s + b*t <= c.
std::vector<P2> clip_halfplane(const std::vector<P2>& poly, const Rational& a, const Rational& b,
                               const Rational& c) {
    std::vector<P2> out;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const P2& p = poly[i];
        const P2& q = poly[(i + 1) % n];
        const Rational fp = a * p[0] + b * p[1] - c;
        const Rational fq = a * q[0] + b * q[1] - c;
        if (fp <= 0) out.push_back(p);
        if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
            const Rational u = fp / (fp - fq);
            out.push_back({p[0] + u * (q[0] - p[0]), p[1] + u * (q[1] - p[1])});
        }
    }
    return out;
}

struct AffineOnChart {
    Rational A, Bs, Bt;
    Rational at(const P2& p) const { return A + Bs * p[0] + Bt * p[1]; }
};

PolyPart build_polytope_triangle(const NormSpec& space, const Point& y, const Simplex& s,
                                 long long w, double density) {
    const Point& v0 = s.verts[0];
    const Point e1 = sub(s.verts[1], v0), e2 = sub(s.verts[2], v0);
    const Point base = sub(v0, y);
    std::vector<AffineOnChart> fns;
    for (const auto& fct : space.facets())
        fns.push_back({dot(fct, base), dot(fct, e1), dot(fct, e2)});
    const double jac = std::sqrt(to_double(gram_det({e1, e2})));
    const double mass_scale = std::abs((double)w) * density * jac;
    const std::vector<P2> tri = {{Rational(0), Rational(0)}, {Rational(1), Rational(0)},
                                 {Rational(0), Rational(1)}};

    // Exact per-interval quadratic pieces, accumulated over the normal-fan
    // regions of the gauge restricted to the triangle's plane.
    std::map<Rational, Rational> step_map;
    struct QuadPiece {
        Rational lo, hi, c0, c1, c2;
    };
    std::vector<QuadPiece> pieces;
    std::vector<std::pair<Rational, Rational>> region_tail;  // (value_hi, full area)
    std::vector<Rational> cuts;

    for (size_t j = 0; j < fns.size(); ++j) {
        std::vector<P2> region = tri;
        for (size_t i = 0; i < fns.size() && !region.empty(); ++i) {
            if (i == j) continue;
            // l_i - l_j <= 0 keeps the part where l_j dominates
            region = clip_halfplane(region, fns[i].Bs - fns[j].Bs, fns[i].Bt - fns[j].Bt,
                                    fns[j].A - fns[i].A);
        }
        if (region.size() < 3) continue;
        const Rational area2 = abs(shoelace2(region));
        if (area2 == 0) continue;
        const Rational area = area2 / 2;
        if (fns[j].Bs == 0 && fns[j].Bt == 0) {
            step_map[fns[j].A] += area;
            cuts.push_back(fns[j].A);
            continue;
        }
        std::vector<Rational> vals;
        for (const auto& p : region) vals.push_back(fns[j].at(p));
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (size_t i = 0; i + 1 < vals.size(); ++i) {
            const Rational lo = vals[i], hi = vals[i + 1];
            // exact quadratic via three interior samples
            std::array<Rational, 3> rs = {lo + (hi - lo) / 4, lo + (hi - lo) / 2,
                                          lo + 3 * (hi - lo) / 4};
            std::array<Rational, 3> as;
            for (int q = 0; q < 3; ++q) {
                auto sub_poly =
                    clip_halfplane(region, fns[j].Bs, fns[j].Bt, rs[q] - fns[j].A);
                as[q] = sub_poly.size() >= 3 ? abs(shoelace2(sub_poly)) / 2 : Rational(0);
            }
            // Lagrange through (rs, as)
            const Rational d10 = rs[1] - rs[0], d20 = rs[2] - rs[0], d21 = rs[2] - rs[1];
            const Rational l0 = as[0] / (d10 * d20), l1 = -as[1] / (d10 * d21),
                           l2 = as[2] / (d20 * d21);
            const Rational c2 = l0 + l1 + l2;
            const Rational c1 = -(l0 * (rs[1] + rs[2]) + l1 * (rs[0] + rs[2]) + l2 * (rs[0] + rs[1]));
            const Rational c0 = l0 * rs[1] * rs[2] + l1 * rs[0] * rs[2] + l2 * rs[0] * rs[1];
            pieces.push_back({lo, hi, c0, c1, c2});
            cuts.push_back(lo);
            cuts.push_back(hi);
        }
        if (!vals.empty()) region_tail.push_back({vals.back(), area});
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    PolyPart part;
    Rational full = 0;
    for (const auto& [v, a] : region_tail) full += a;
    for (const auto& [v, a] : step_map) full += a;
    for (size_t i = 0; i < cuts.size(); ++i) {
        part.bps.push_back(to_double(cuts[i]));
        if (i + 1 == cuts.size()) break;
        const Rational mid = (cuts[i] + cuts[i + 1]) / 2;
        Rational c0 = 0, c1 = 0, c2 = 0;
        for (const auto& pc : pieces) {
            if (pc.lo <= cuts[i] && cuts[i + 1] <= pc.hi) {
                c0 += pc.c0;
                c1 += pc.c1;
                c2 += pc.c2;
            } else if (pc.hi <= cuts[i]) {
                // region already fully covered by r: handled via tails below
            }
        }
        // add constants for regions fully covered before this interval
        Rational constant = 0;
        for (const auto& [vhi, area] : region_tail)
            if (vhi <= cuts[i]) constant += area;
        c0 += constant;
        (void)mid;
        part.coeff.push_back({to_double(c0) * mass_scale, to_double(c1) * mass_scale,
                              to_double(c2) * mass_scale});
    }
    for (const auto& [v, a] : step_map)
        part.steps.push_back({to_double(v), to_double(a) * mass_scale});
    part.total = to_double(full) * mass_scale;
    return part;
}

// ---- lp (sampled with monotone interpolation) ------------------------------

std::vector<double> fritsch_carlson(const std::vector<double>& r, const std::vector<double>& v) {
    const size_t n = r.size();
    std::vector<double> d(n - 1), m(n, 0.0);
    for (size_t i = 0; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i]) / (r[i + 1] - r[i]);
    m[0] = d[0];
    m[n - 1] = d[n - 2];
    for (size_t i = 1; i + 1 < n; ++i)
        m[i] = (d[i - 1] * d[i] <= 0) ? 0.0 : 0.5 * (d[i - 1] + d[i]);
    for (size_t i = 0; i + 1 < n; ++i) {
        if (d[i] == 0) {
            m[i] = m[i + 1] = 0;
            continue;
        }
        const double a = m[i] / d[i], b = m[i + 1] / d[i];
        const double s = a * a + b * b;
        if (s > 9) {
            const double tau = 3.0 / std::sqrt(s);
            m[i] = tau * a * d[i];
            m[i + 1] = tau * b * d[i];
        }
    }
    return m;
}

double lp_segment_measure(const NormSpec& space, const Point& ay, const Point& d, double r) {
    auto g = [&](double t) {
        Point p(ay.size());
        const Rational tq = rational_from_double(t);
        for (size_t i = 0; i < ay.size(); ++i) p[i] = ay[i] + tq * d[i];
        return space.norm(p);
    };
    double lo = 0, hi = 1;
    for (int it = 0; it < 90; ++it) {
        const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
        if (g(m1) < g(m2)) hi = m2;
        else lo = m1;
    }
    const double tm = 0.5 * (lo + hi);
    if (g(tm) > r) return 0;
    auto cross = [&](double a, double b) {
        const bool ina = g(a) <= r;
        for (int it = 0; it < 60; ++it) {
            const double m = 0.5 * (a + b);
            if ((g(m) <= r) == ina) a = m;
            else b = m;
        }
        return 0.5 * (a + b);
    };
    const double t0 = g(0) <= r ? 0.0 : cross(0, tm);
    const double t1 = g(1) <= r ? 1.0 : cross(tm, 1);
    return std::max(0.0, t1 - t0);
}

SampledPart build_lp_segment(const NormSpec& space, const Point& y, const Simplex& s, long long w,
                             double density) {
    const Point ay = sub(s.verts[0], y);
    const Point d = sub(s.verts[1], s.verts[0]);
    const double scale = std::abs((double)w) * density * euclid_norm(d);
    const double ra = space.norm(ay), rb = space.norm(add(ay, d));
    double rmin = std::min(ra, rb);
    {
        double lo = 0, hi = 1;
        auto g = [&](double t) {
            Point p(ay.size());
            const Rational tq = rational_from_double(t);
            for (size_t i = 0; i < ay.size(); ++i) p[i] = ay[i] + tq * d[i];
            return space.norm(p);
        };
        for (int it = 0; it < 90; ++it) {
            const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
            if (g(m1) < g(m2)) hi = m2;
            else lo = m1;
        }
        rmin = std::min(rmin, g(0.5 * (lo + hi)));
    }
    const double rmax = std::max(ra, rb);
    SampledPart part;
    const int n = 129;
    for (int i = 0; i < n; ++i) {
        const double r = rmin + (rmax - rmin) * i / (n - 1);
        part.r.push_back(r);
        part.v.push_back(scale * lp_segment_measure(space, ay, d, r));
    }
    // strictly increasing grid (perturb duplicates)
    for (size_t i = 1; i < part.r.size(); ++i)
        if (part.r[i] <= part.r[i - 1]) part.r[i] = std::nextafter(part.r[i - 1], 1e300);
    part.m = fritsch_carlson(part.r, part.v);
    part.total = scale;
    return part;
}

}  // namespace

GrowthFunction GrowthFunction::build(const Chain& t, const Point& y) {
    GrowthFunction g;
    g.center_ = y;
    if ((int)y.size() != t.space().dim()) throw InputError("growth center dimension mismatch");
    const NormSpec& space = t.space();
    std::map<std::vector<Point>, double> density_memo;
    auto density_of = [&](const Simplex& s) {
        if (t.dim() == 0) return 1.0;
        const auto key = plane_key(s);
        auto it = density_memo.find(key);
        if (it == density_memo.end())
            it = density_memo.emplace(key, busemann_density(space, key)).first;
        return it->second;
    };
    for (const auto& [s, w] : t.terms()) {
        const double density = density_of(s);
        Part part;
        if (t.dim() == 0) {
            PolyPart p;
            const double r0 = space.dist(s.verts[0], y);
            p.steps.push_back({r0, std::abs((double)w)});
            p.total = std::abs((double)w);
            p.bps = {r0};
            part = std::move(p);
        } else if (space.kind() == NormSpec::Kind::Polytope) {
            part = (t.dim() == 1) ? build_polytope_segment(space, y, s, w, density)
                                  : build_polytope_triangle(space, y, s, w, density);
        } else if (space.kind() == NormSpec::Kind::Euclidean) {
            if (t.dim() == 1) {
                SegEuclidPart p;
                const Point d = sub(s.verts[1], s.verts[0]);
                const Point ay = sub(s.verts[0], y);
                const Rational dd = dot(d, d);
                const Rational ts = -dot(ay, d) / dd;
                p.tstar = to_double(ts);
                const Point foot = add(ay, scale(d, ts));
                p.h = euclid_norm(foot);
                p.len = std::sqrt(to_double(dd));
                p.scale = std::abs((double)w) * density * p.len;
                p.rmax = std::max(euclid_norm(ay), euclid_norm(add(ay, d)));
                part = std::move(p);
            } else if (t.dim() == 2) {
                TriEuclidPart p;
                const Point& v0 = s.verts[0];
                const Point e1 = sub(s.verts[1], v0), e2 = sub(s.verts[2], v0);
                // exact foot of y on the plane
                const Rational g11 = dot(e1, e1), g12 = dot(e1, e2), g22 = dot(e2, e2);
                const Point d = sub(y, v0);
                const Rational b1 = dot(e1, d), b2 = dot(e2, d);
                const Rational det = g11 * g22 - g12 * g12;
                const Rational cs = (b1 * g22 - b2 * g12) / det;
                const Rational ct = (g11 * b2 - g12 * b1) / det;
                const Point foot = add(v0, add(scale(e1, cs), scale(e2, ct)));
                const Point resid = sub(y, foot);
                p.h = euclid_norm(resid);
                // orthonormal frame coordinates of the vertices, foot-centered
                const double e11 = euclid_norm(e1);
                const Rational p12 = g12 / g11;
                const Point e2p = sub(e2, scale(e1, p12));
                const double e22 = euclid_norm(e2p);
                auto frame_of = [&](const Rational& sc, const Rational& tc) {
                    return std::array<double, 2>{
                        (to_double(sc) + to_double(tc) * to_double(p12)) * e11,
                        to_double(tc) * e22};
                };
                const auto fc = frame_of(cs, ct);
                const std::array<std::pair<Rational, Rational>, 3> chart = {
                    std::pair<Rational, Rational>{0, 0}, {1, 0}, {0, 1}};
                for (int i = 0; i < 3; ++i) {
                    const auto f = frame_of(chart[i].first, chart[i].second);
                    p.frame[i] = {f[0] - fc[0], f[1] - fc[1]};
                }
                p.scale = std::abs((double)w) * density;
                double rmax = 0;
                for (const auto& v : s.verts) rmax = std::max(rmax, space.dist(v, y));
                p.rmax = rmax;
                // breakpoints: plane distance, vertex distances, edge-line distances
                p.bps.push_back(p.h);
                for (const auto& v : s.verts) p.bps.push_back(space.dist(v, y));
                for (int i = 0; i < 3; ++i) {
                    const auto& a = p.frame[i];
                    const auto& b = p.frame[(i + 1) % 3];
                    const double dx = b[0] - a[0], dy = b[1] - a[1];
                    const double L2 = dx * dx + dy * dy;
                    const double u = -(a[0] * dx + a[1] * dy) / L2;
                    if (u > 0 && u < 1) {
                        const double fx = a[0] + u * dx, fy = a[1] + u * dy;
                        p.bps.push_back(std::sqrt(fx * fx + fy * fy + p.h * p.h));
                    }
                }
                std::sort(p.bps.begin(), p.bps.end());
                part = std::move(p);
            } else {
                throw InputError("growth functions support chains of dimension <= 2");
            }
        } else {
            if (t.dim() == 1) part = build_lp_segment(space, y, s, w, density);
            else throw InputError("growth functions for lp norms support 1-chains only");
        }
        g.parts_.push_back(std::move(part));
    }
    // merge breakpoints, totals, support radius, jump flags
    for (const auto& part : g.parts_) {
        std::visit(
            [&](const auto& p) {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, PolyPart>) {
                    for (double b : p.bps) g.bps_.push_back(b);
                    for (const auto& [r, h] : p.steps)
                        if (h > 0) g.jump_radii_.push_back(r);
                    g.total_ += p.total;
                    if (!p.bps.empty()) g.support_radius_ = std::max(g.support_radius_, p.bps.back());
                    for (const auto& [r, h] : p.steps)
                        g.support_radius_ = std::max(g.support_radius_, r);
                } else if constexpr (std::is_same_v<T, SegEuclidPart>) {
                    g.bps_.push_back(p.h);
                    const double da = std::sqrt(p.h * p.h + p.len * p.len * p.tstar * p.tstar);
                    const double db =
                        std::sqrt(p.h * p.h + p.len * p.len * (1 - p.tstar) * (1 - p.tstar));
                    g.bps_.push_back(da);
                    g.bps_.push_back(db);
                    g.total_ += p.scale;
                    g.support_radius_ = std::max(g.support_radius_, p.rmax);
                } else if constexpr (std::is_same_v<T, TriEuclidPart>) {
                    for (double b : p.bps) g.bps_.push_back(b);
                    const auto& f = p.frame;
                    const double area2 = (f[1][0] - f[0][0]) * (f[2][1] - f[0][1]) -
                                         (f[1][1] - f[0][1]) * (f[2][0] - f[0][0]);
                    g.total_ += p.scale * std::abs(area2) / 2;
                    g.support_radius_ = std::max(g.support_radius_, p.rmax);
                } else {
                    for (double b : p.r) g.bps_.push_back(b);
                    g.total_ += p.total;
                    if (!p.r.empty()) g.support_radius_ = std::max(g.support_radius_, p.r.back());
                }
            },
            part);
    }
    std::sort(g.bps_.begin(), g.bps_.end());
    g.bps_.erase(std::unique(g.bps_.begin(), g.bps_.end()), g.bps_.end());
    std::sort(g.jump_radii_.begin(), g.jump_radii_.end());
    return g;
}

double GrowthFunction::eval(double r) const {
    if (r < 0) return 0;
    double v = 0;
    for (const auto& part : parts_) v += std::visit(PartOps{r}, part);
    return v;
}

double GrowthFunction::right_derivative(double r) const {
    double v = 0;
    for (const auto& part : parts_) v += std::visit(PartDeriv{r}, part);
    return v;
}

double GrowthFunction::critical_radius(double f_const, int k) const {
    if (f_const <= 0) throw InputError("critical radius requires F > 0");
    if (total_ <= 0) return 0;
    const double r_tail = std::pow(total_ / f_const, 1.0 / k);
    if (r_tail >= support_radius_) return r_tail;
    auto h = [&](double r) { return eval(r) - f_const * std::pow(r, k); };
    // scan merged smoothness intervals from the top; on each interval the
    // difference is a fixed quadratic in polytope mode, so augment the grid
    // with its exact roots before the descending scan
    std::vector<double> grid = bps_;
    grid.push_back(support_radius_);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    for (size_t bi = grid.size(); bi-- > 1;) {
        const double lo = grid[bi - 1], hi = grid[bi];
        if (hi <= 0) break;
        std::vector<double> pts;
        const int n = 64;
        for (int i = 0; i <= n; ++i) pts.push_back(lo + (hi - lo) * i / n);
        // exact polynomial coefficients if every part is piecewise polynomial
        bool all_poly = true;
        std::array<double, 3> c{0, 0, 0};
        const double mid = 0.5 * (lo + hi);
        for (const auto& part : parts_) {
            const auto* pp = std::get_if<PolyPart>(&part);
            if (!pp) {
                all_poly = false;
                break;
            }
            if (pp->bps.empty() || mid >= pp->bps.back()) {
                double cont = pp->total;
                for (const auto& [sr, hgt] : pp->steps) cont -= hgt;
                c[0] += cont;
            } else if (mid >= pp->bps.front()) {
                const size_t i =
                    std::upper_bound(pp->bps.begin(), pp->bps.end(), mid) - pp->bps.begin() - 1;
                for (int q = 0; q < 3; ++q) c[q] += pp->coeff[i][q];
            }
            for (const auto& [sr, hgt] : pp->steps)
                if (sr <= mid) c[0] += hgt;
        }
        if (all_poly) {
            std::array<double, 3> hc = c;
            hc[std::min(k, 2)] -= f_const;  // k in {1,2}
            const double A = hc[2], B = hc[1], C0 = hc[0];
            if (std::abs(A) > 1e-300) {
                const double disc = B * B - 4 * A * C0;
                if (disc >= 0) {
                    const double sq = std::sqrt(disc);
                    pts.push_back((-B - sq) / (2 * A));
                    pts.push_back((-B + sq) / (2 * A));
                }
            } else if (std::abs(B) > 1e-300) {
                pts.push_back(-C0 / B);
            }
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::remove_if(pts.begin(), pts.end(),
                                 [&](double r) { return r < lo || r > hi; }),
                  pts.end());
        double prev = hi + (hi - lo) * 1e-12;
        for (size_t i = pts.size(); i-- > 0;) {
            const double r = pts[i];
            if (h(r) >= 0) {
                double a = r, b = std::min(prev, hi);
                for (int it = 0; it < 80 && b > a; ++it) {
                    const double m = 0.5 * (a + b);
                    if (h(m) >= 0) a = m;
                    else b = m;
                }
                return a;
            }
            prev = r;
        }
    }
    return 0;
}

DistanceRange simplex_distance_range(const NormSpec& space, const Point& y, const Simplex& s) {
    DistanceRange out;
    double hi = 0;
    for (const auto& v : s.verts) hi = std::max(hi, space.dist(v, y));
    out.hi = hi;
    if (s.dim() == 0) {
        out.lo = hi;
        return out;
    }
    if (s.dim() != 1)
        throw InputError("distance ranges implemented for points and segments");
    const Point a = s.verts[0];
    const Point d = sub(s.verts[1], a);
    const Point ay = sub(a, y);
    switch (space.kind()) {
        case NormSpec::Kind::Euclidean: {
            const Rational dd = dot(d, d);
            const Rational ts = -dot(ay, d) / dd;
            if (ts <= 0 || ts >= 1) {
                out.lo = std::min(euclid_norm(ay), euclid_norm(add(ay, d)));
            } else {
                out.lo = euclid_norm(add(ay, scale(d, ts)));
            }
            return out;
        }
        case NormSpec::Kind::Polytope: {
            // min over [0,1] of the upper envelope of affine functions
            std::vector<std::pair<Rational, Rational>> lines;
            for (const auto& fct : space.facets()) lines.push_back({dot(fct, ay), dot(fct, d)});
            const auto env = upper_envelope(lines);
            Rational best = -1;
            for (const auto& pc : env) {
                const Rational v0 = pc.A + pc.B * pc.t_lo, v1 = pc.A + pc.B * pc.t_hi;
                const Rational m = std::min(v0, v1);
                if (best < 0 || m < best) best = m;
            }
            out.lo = to_double(best);
            return out;
        }
        case NormSpec::Kind::Lp: {
            auto g = [&](double t) {
                Point p(ay.size());
                const Rational tq = rational_from_double(t);
                for (size_t i = 0; i < ay.size(); ++i) p[i] = ay[i] + tq * d[i];
                return space.norm(p);
            };
            double lo = 0, hi2 = 1;
            for (int it = 0; it < 90; ++it) {
                const double m1 = lo + (hi2 - lo) / 3, m2 = hi2 - (hi2 - lo) / 3;
                if (g(m1) < g(m2)) hi2 = m2;
                else lo = m1;
            }
            out.lo = g(0.5 * (lo + hi2));
            return out;
        }
    }
    return out;
}

}  // namespace chainfill
