#include "chainfill/normed_space.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "chainfill/errors.hpp"

namespace chainfill {

namespace {

bool is_symmetric(const std::vector<Point>& verts) {
    std::set<Point> seen(verts.begin(), verts.end());
    for (const auto& v : verts) {
        Point neg(v.size());
        for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        if (!seen.count(neg)) return false;
    }
    return true;
}

// Solve A x = b for square rational A by elimination; nullopt if singular.
std::optional<Point> solve_square(std::vector<Point> a, Point b) {
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    for (size_t c = 0; c < n; ++c) {
        size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[c]);
        const Rational inv = Rational(1) / a[c][c];
        for (size_t j = c; j <= n; ++j) a[c][j] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    Point x(n);
    for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

std::vector<Point> facets_1d(const std::vector<Point>& verts) {
    Rational vmax = 0;
    for (const auto& v : verts) vmax = std::max(vmax, abs(v[0]));
    if (vmax == 0) throw InputError("polytope does not span R^1");
    return {{Rational(1) / vmax}, {Rational(-1) / vmax}};
}

// Convex hull (monotone chain) of rational 2D points, counterclockwise.
std::vector<Point> hull_2d(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n < 3) throw InputError("polytope does not span R^2");
    auto cross = [](const Point& o, const Point& a, const Point& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<Point> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

std::vector<Point> facets_2d(const std::vector<Point>& verts) {
    auto h = hull_2d(verts);
    std::vector<Point> facets;
    for (size_t i = 0; i < h.size(); ++i) {
        const Point& p = h[i];
        const Point& q = h[(i + 1) % h.size()];
        auto a = solve_square({{p[0], p[1]}, {q[0], q[1]}}, {Rational(1), Rational(1)});
        if (!a) throw InputError("polytope edge through the origin (0 not interior)");
        facets.push_back(*a);
    }
    return facets;
}

std::vector<Point> facets_3d(const std::vector<Point>& verts) {
    const size_t n = verts.size();
    std::set<Point> out;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                auto a = solve_square(
                    {verts[i], verts[j], verts[k]},
                    {Rational(1), Rational(1), Rational(1)});
                if (!a) continue;
                bool supporting = true;
                for (const auto& v : verts)
                    if (dot(*a, v) > 1) {
                        supporting = false;
                        break;
                    }
                if (supporting) out.insert(*a);
            }
    if (out.empty()) throw InputError("polytope has no supporting facet planes");
    return {out.begin(), out.end()};
}

}  // namespace

NormSpec NormSpec::euclidean(int n) {
    if (n < 1) throw InputError("ambient dimension must be positive");
    NormSpec s;
    s.kind_ = Kind::Euclidean;
    s.dim_ = n;
    return s;
}

NormSpec NormSpec::lp(int n, const Rational& p) {
    if (n < 1) throw InputError("ambient dimension must be positive");
    if (p < 1) throw InputError("lp exponent must be >= 1");
    NormSpec s;
    s.kind_ = Kind::Lp;
    s.dim_ = n;
    s.p_ = p;
    return s;
}

NormSpec NormSpec::polytope(int n, std::vector<Point> vertices) {
    if (n < 1 || n > 3) throw InputError("polytope norms supported for n in {1,2,3}");
    for (const auto& v : vertices)
        if ((int)v.size() != n) throw InputError("polytope vertex of wrong dimension");
    if (!is_symmetric(vertices)) throw InputError("polytope vertex set not centrally symmetric");
    if (rank_of(vertices) != n) throw InputError("polytope does not span the ambient space");
    NormSpec s;
    s.kind_ = Kind::Polytope;
    s.dim_ = n;
    s.vertices_ = std::move(vertices);
    std::vector<Point> facets;
    if (n == 1) facets = facets_1d(s.vertices_);
    else if (n == 2) facets = facets_2d(s.vertices_);
    else facets = facets_3d(s.vertices_);
    s.facets_ = std::make_shared<const std::vector<Point>>(std::move(facets));
    return s;
}

const std::vector<Point>& NormSpec::facets() const {
    if (kind_ != Kind::Polytope) throw InputError("facets only defined for polytope norms");
    return *facets_;
}

double NormSpec::norm(const Point& v) const {
    if ((int)v.size() != dim_) throw InputError("vector dimension mismatch");
    switch (kind_) {
        case Kind::Euclidean:
            return euclid_norm(v);
        case Kind::Lp: {
            const double p = to_double(p_);
            double s = 0;
            for (const auto& c : v) s += std::pow(std::abs(to_double(c)), p);
            return std::pow(s, 1.0 / p);
        }
        case Kind::Polytope:
            return to_double(norm_exact(v));
    }
    return 0;
}

Rational NormSpec::norm_exact(const Point& v) const {
    if (kind_ == Kind::Lp && p_ == 1) {
        Rational s = 0;
        for (const auto& c : v) s += abs(c);
        return s;
    }
    if (kind_ != Kind::Polytope) throw InputError("exact norm requires polytope kind");
    if ((int)v.size() != dim_) throw InputError("vector dimension mismatch");
    Rational m = 0;
    for (const auto& a : *facets_) m = std::max(m, dot(a, v));
    return m;
}

double NormSpec::density_quadrature_tol() const {
    return kind_ == Kind::Lp ? 1e-9 : 0.0;
}

bool NormSpec::operator==(const NormSpec& o) const {
    if (kind_ != o.kind_ || dim_ != o.dim_) return false;
    if (kind_ == Kind::Lp) return p_ == o.p_;
    if (kind_ == Kind::Polytope) return vertices_ == o.vertices_;
    return true;
}

double norm_eval(const NormSpec& space, const Point& v) { return space.norm(v); }

double unit_ball_volume(int k) {
    // omega_k = pi^{k/2} / Gamma(k/2 + 1)
    return std::pow(M_PI, k / 2.0) / std::tgamma(k / 2.0 + 1.0);
}

namespace {

// Area of the rational polygon {x : <c_i, x> <= 1} given by constraint list,
// via exact vertex enumeration. The polygon must be bounded and nonempty.
Rational constraint_polygon_area(const std::vector<Point>& constraints) {
    std::vector<Point> verts;
    const size_t m = constraints.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            auto x = solve_square({constraints[i], constraints[j]}, {Rational(1), Rational(1)});
            if (!x) continue;
            bool feasible = true;
            for (size_t t = 0; t < m; ++t)
                if (dot(constraints[t], *x) > 1) {
                    feasible = false;
                    break;
                }
            if (feasible) verts.push_back(*x);
        }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() < 3) throw InputError("degenerate plane section");
    // Order around the centroid with exact cross-product comparisons.
    Point c{Rational(0), Rational(0)};
    for (const auto& v : verts) c = add(c, v);
    c = scale(c, Rational(1, (long long)verts.size()));
    auto half = [&](const Point& p) {
        Rational dx = p[0] - c[0], dy = p[1] - c[1];
        return (dy < 0 || (dy == 0 && dx < 0)) ? 1 : 0;
    };
    std::sort(verts.begin(), verts.end(), [&](const Point& a, const Point& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        Rational cr = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
        if (cr != 0) return cr > 0;
        return a < b;
    });
    Rational area2 = 0;
    for (size_t i = 0; i < verts.size(); ++i) {
        const Point& p = verts[i];
        const Point& q = verts[(i + 1) % verts.size()];
        area2 += p[0] * q[1] - p[1] * q[0];
    }
    return abs(area2) / 2;
}

// Exact volume of {x : <a_i, x> <= 1} in R^3 from its facet planes and the
// polytope vertices (divergence sum of facet-fan tetrahedra).
Rational polytope_volume_3d(const std::vector<Point>& facets, const std::vector<Point>& verts) {
    Rational vol6 = 0;
    for (const auto& a : facets) {
        std::vector<Point> on;
        for (const auto& v : verts)
            if (dot(a, v) == 1) on.push_back(v);
        std::sort(on.begin(), on.end());
        on.erase(std::unique(on.begin(), on.end()), on.end());
        if (on.size() < 3) continue;
        // Order facet polygon in a 2D chart of the facet plane.
        auto basis = rref_basis({sub(on[1], on[0]), sub(on.back(), on[0])});
        if (basis.size() < 2) {
            // try all pairs to find a spanning one
            bool found = false;
            for (size_t i = 1; i < on.size() && !found; ++i)
                for (size_t j = i + 1; j < on.size() && !found; ++j) {
                    basis = rref_basis({sub(on[i], on[0]), sub(on[j], on[0])});
                    if (basis.size() == 2) found = true;
                }
            if (!found) continue;
        }
        // chart coordinates via pivot columns of the RREF basis
        std::vector<int> piv;
        for (const auto& row : basis)
            for (size_t c = 0; c < row.size(); ++c)
                if (row[c] == 1) {
                    bool lead = true;
                    for (int pc : piv)
                        if ((size_t)pc == c) lead = false;
                    if (lead) {
                        piv.push_back((int)c);
                        break;
                    }
                }
        std::vector<std::pair<Point, Point>> charted;  // (2d, 3d)
        for (const auto& v : on) {
            Point d = sub(v, on[0]);
            charted.push_back({{d[piv[0]], d[piv[1]]}, v});
        }
        Point c2{Rational(0), Rational(0)};
        for (auto& pr : charted) c2 = add(c2, pr.first);
        c2 = scale(c2, Rational(1, (long long)charted.size()));
        std::sort(charted.begin(), charted.end(), [&](const auto& A, const auto& B) {
            const Point &a = A.first, &b = B.first;
            auto halfv = [&](const Point& p) {
                Rational dx = p[0] - c2[0], dy = p[1] - c2[1];
                return (dy < 0 || (dy == 0 && dx < 0)) ? 1 : 0;
            };
            int ha = halfv(a), hb = halfv(b);
            if (ha != hb) return ha < hb;
            Rational cr = (a[0] - c2[0]) * (b[1] - c2[1]) - (a[1] - c2[1]) * (b[0] - c2[0]);
            if (cr != 0) return cr > 0;
            return a < b;
        });
        // Fan from vertex 0 of the facet polygon; tetrahedra to the origin.
        for (size_t i = 1; i + 1 < charted.size(); ++i) {
            const Point &p = charted[0].second, &q = charted[i].second, &r = charted[i + 1].second;
            Rational det = p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) +
                           p[2] * (q[0] * r[1] - q[1] * r[0]);
            vol6 += abs(det);
        }
    }
    return vol6 / 6;
}

double lp_ball_volume(double p, int n) {
    // 2^n Gamma(1 + 1/p)^n / Gamma(1 + n/p)
    return std::pow(2.0, n) * std::pow(std::tgamma(1.0 + 1.0 / p), n) /
           std::tgamma(1.0 + (double)n / p);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 40);
}

}  // namespace

double section_area(const NormSpec& space, const Point& u, const Point& v) {
    if (rank_of({u, v}) != 2) throw InputError("degenerate plane");
    const double jac = std::sqrt(to_double(gram_det({u, v})));
    switch (space.kind()) {
        case NormSpec::Kind::Euclidean:
            return M_PI;
        case NormSpec::Kind::Polytope: {
            std::vector<Point> constraints;
            for (const auto& a : space.facets()) {
                Rational au = dot(a, u), av = dot(a, v);
                if (au == 0 && av == 0) continue;
                constraints.push_back({au, av});
            }
            const Rational chart_area = constraint_polygon_area(constraints);
            return to_double(chart_area) * jac;
        }
        case NormSpec::Kind::Lp: {
            // Polar integration with an orthonormal chart of the plane.
            const double nu = euclid_norm(u);
            Point e1 = u, e2 = v;
            // Gram-Schmidt in doubles via rational projection first (keeps it simple):
            Point proj = project_onto_span(v, {u});
            e2 = sub(v, proj);
            const double nu2 = euclid_norm(e2);
            auto radius = [&](double theta) {
                double c = std::cos(theta), s = std::sin(theta);
                Point w(u.size());
                for (size_t i = 0; i < w.size(); ++i)
                    w[i] = rational_from_double(c / nu) * e1[i] +
                           rational_from_double(s / nu2) * e2[i];
                const double nw = space.norm(w);
                return 1.0 / (nw * nw);
            };
            // area = 1/2 \int_0^{2pi} r(theta)^2 dtheta
            return 0.5 * integrate(radius, 0.0, 2 * M_PI, space.density_quadrature_tol());
        }
    }
    return 0;
}

double busemann_density(const NormSpec& space, const PlaneBasis& plane) {
    const int k = (int)plane.size();
    const int n = space.dim();
    if (k < 1 || k > n) throw InputError("plane dimension out of range");
    for (const auto& b : plane)
        if ((int)b.size() != n) throw InputError("plane basis dimension mismatch");
    if (rank_of(plane) != k) throw InputError("degenerate plane");
    if (space.kind() == NormSpec::Kind::Euclidean) return 1.0;

    if (k == 1) {
        // Unit ball section is the segment of norm-length 2 along the line.
        return space.norm(plane[0]) / euclid_norm(plane[0]);
    }
    if (k == n) {
        double vol;
        if (space.kind() == NormSpec::Kind::Polytope) {
            if (n == 2) {
                std::vector<Point> cs;
                for (const auto& a : space.facets()) cs.push_back(a);
                vol = to_double(constraint_polygon_area(cs));
            } else {
                vol = to_double(polytope_volume_3d(space.facets(), space.polytope_vertices()));
            }
        } else {
            vol = lp_ball_volume(to_double(space.lp_exponent()), n);
        }
        return unit_ball_volume(k) / vol;
    }
    if (k == 2) {
        return unit_ball_volume(2) / section_area(space, plane[0], plane[1]);
    }
    throw InputError("busemann density: unsupported (k, n) combination");
}

}  // namespace chainfill
