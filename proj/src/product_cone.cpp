#include "chainfill/product_cone.hpp"

#include <algorithm>

#include "chainfill/errors.hpp"
#include "chainfill/null_test.hpp"

namespace chainfill {

namespace {

Point lift(const Point& p, const Rational& level) {
    Point q;
    q.reserve(p.size() + 1);
    q.push_back(level);
    q.insert(q.end(), p.begin(), p.end());
    return q;
}

NormSpec product_space(const NormSpec& base) {
    // The product carries the euclidean product metric; only boundary
    // identities are evaluated on prisms, never masses in exotic norms.
    return NormSpec::euclidean(base.dim() + 1);
}

// apex in aff(sigma) but not one of its vertices
bool bad_apex_for(const Simplex& s, const Point& apex) {
    for (const auto& v : s.verts)
        if (v == apex) return false;
    auto edges = edge_vectors(s);
    edges.push_back(sub(apex, s.verts[0]));
    return rank_of(edges) != (int)edges.size();
}

}  // namespace

Chain embed_at(const Chain& t, const Rational& level) {
    Chain out(t.dim(), product_space(t.space()));
    for (const auto& [s, w] : t.terms()) {
        std::vector<Point> verts;
        verts.reserve(s.verts.size());
        for (const auto& v : s.verts) verts.push_back(lift(v, level));
        out.add(verts, w);
    }
    return out;
}

Chain interval_product(const Chain& t) {
    Chain out(t.dim() + 1, product_space(t.space()));
    const Rational zero(0), one(1);
    for (const auto& [s, w] : t.terms()) {
        const int k = s.dim();
        for (int i = 0; i <= k; ++i) {
            std::vector<Point> verts;
            verts.reserve(k + 2);
            for (int j = 0; j <= i; ++j) verts.push_back(lift(s.verts[j], zero));
            for (int j = i; j <= k; ++j) verts.push_back(lift(s.verts[j], one));
            out.add(verts, (i % 2 == 0) ? w : -w);
        }
    }
    return out;
}

ConeResult cone(const Chain& t, const Point& apex) {
    if ((int)apex.size() != t.space().dim()) throw InputError("apex dimension mismatch");
    if (!is_cycle(t)) throw InputError("cone requires a cycle (boundary must vanish)");
    ConeResult res{Chain(t.dim() + 1, t.space())};
    if (t.is_zero()) return res;
    for (const auto& [s, w] : t.terms())
        if (bad_apex_for(s, apex))
            throw InputError("cone apex lies in the affine span of a simplex; pick a generic apex");
    for (const auto& [s, w] : t.terms()) {
        std::vector<Point> verts;
        verts.reserve(s.verts.size() + 1);
        verts.push_back(apex);
        verts.insert(verts.end(), s.verts.begin(), s.verts.end());
        res.filling.add(verts, w);  // degenerate joins (apex a vertex) drop out
    }
    res.mass = mass(res.filling);
    double diam = t.size() ? support_diameter(t) : 0.0;
    for (const auto& v : support_vertices(t)) diam = std::max(diam, t.space().dist(v, apex));
    res.diam = diam;
    res.bound = (t.dim() + 1) * diam * mass(t);
    if (res.mass > res.bound * (1 + 1e-9))
        throw InvariantViolation("cone mass bound violated");
    if (res.filling.is_zero() && !t.is_zero())
        throw InvariantViolation("all cone simplices degenerate for a nonzero cycle");
    return res;
}

ConeResult cone_from_support(const Chain& t) {
    if (t.is_zero()) return ConeResult{Chain(t.dim() + 1, t.space())};
    auto admissible = [&](const Point& apex) {
        for (const auto& [s, w] : t.terms())
            if (bad_apex_for(s, apex)) return false;
        return true;
    };
    // All candidates below lie in conv(spt T), so diam(spt ∪ apex) = diam(spt)
    // and the certified constant matches the support-vertex case.
    std::vector<Point> candidates = support_vertices(t);
    Point centroid(t.space().dim(), Rational(0));
    for (const auto& v : candidates) centroid = add(centroid, v);
    centroid = scale(centroid, Rational(1, (long long)candidates.size()));
    for (const auto& [s, w] : t.terms()) candidates.push_back(barycenter(s));
    const size_t nverts = support_vertices(t).size();
    for (size_t i = 0; i < nverts; ++i) {
        // interior blends between the centroid and each vertex
        candidates.push_back(add(scale(centroid, Rational(2, 3)),
                                 scale(support_vertices(t)[i], Rational(1, 3))));
    }
    for (const auto& apex : candidates)
        if (admissible(apex)) return cone(t, apex);
    throw InvariantViolation("no admissible cone apex found");
}

}  // namespace chainfill
