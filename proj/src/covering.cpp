#include "chainfill/covering.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "chainfill/errors.hpp"

namespace chainfill {

std::vector<WeightedCandidate> select_candidates(const Chain& t, double f_const, int k,
                                                 int extra_per_simplex, unsigned seed) {
    if (t.is_zero()) throw InputError("candidate selection requires a nonzero chain");
    if (t.dim() != k) throw InputError("candidate selection: dimension mismatch");
    std::set<Point> pts;
    for (const auto& [s, w] : t.terms()) {
        pts.insert(barycenter(s));
        for (const auto& v : s.verts) pts.insert(v);
    }
    if (extra_per_simplex > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> num(1, 15);
        for (const auto& [s, w] : t.terms()) {
            for (int j = 0; j < extra_per_simplex; ++j) {
                // random rational barycentric coordinates with small denominators
                std::vector<Rational> bary;
                Rational total = 0;
                for (size_t i = 0; i < s.verts.size(); ++i) {
                    bary.push_back(Rational(num(rng), 16));
                    total += bary.back();
                }
                Point p(s.verts[0].size(), Rational(0));
                for (size_t i = 0; i < s.verts.size(); ++i)
                    p = add(p, scale(s.verts[i], bary[i] / total));
                pts.insert(p);
            }
        }
    }
    std::vector<WeightedCandidate> out;
    for (const auto& y : pts) {
        WeightedCandidate c;
        c.y = y;
        c.growth = growth_function(t, y);
        c.r0 = c.growth.critical_radius(f_const, k);
        if (c.r0 <= 0) continue;
        c.captured = c.growth.eval(c.r0);
        out.push_back(std::move(c));
    }
    return out;
}

CoverSelection greedy_cover(const std::vector<WeightedCandidate>& cands, const NormSpec& space,
                            double total_mass) {
    if (cands.empty()) throw InputError("greedy cover requires candidates");
    std::vector<size_t> order(cands.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (cands[a].r0 != cands[b].r0) return cands[a].r0 > cands[b].r0;
        return cands[a].y < cands[b].y;
    });
    CoverSelection sel;
    for (size_t idx : order) {
        bool ok = true;
        for (size_t j : sel.selected)
            if (!balls_disjoint_exact(space, cands[idx].y, 2 * cands[idx].r0, cands[j].y,
                                      2 * cands[j].r0)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        sel.selected.push_back(idx);
        sel.achieved_fraction += cands[idx].captured;
    }
    sel.achieved_fraction /= total_mass;
    return sel;
}

bool balls_disjoint_exact(const NormSpec& space, const Point& a, double ra, const Point& b,
                          double rb) {
    const Rational sum = rational_from_double(ra) + rational_from_double(rb);
    switch (space.kind()) {
        case NormSpec::Kind::Polytope:
            return space.dist_exact(a, b) > sum;
        case NormSpec::Kind::Euclidean: {
            const Point d = sub(a, b);
            return dot(d, d) > sum * sum;
        }
        case NormSpec::Kind::Lp:
            return space.dist(a, b) > to_double(sum);
    }
    return false;
}

bool five_r_cover_holds(const std::vector<WeightedCandidate>& cands,
                        const std::vector<size_t>& selected, const NormSpec& space) {
    for (const auto& c : cands) {
        bool covered = false;
        for (size_t j : selected) {
            const auto& s = cands[j];
            if (s.r0 + 1e-12 < c.r0) continue;
            if (space.dist(c.y, s.y) + c.r0 <= 5 * s.r0 * (1 + 1e-12)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

}  // namespace chainfill
