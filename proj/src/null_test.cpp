#include "chainfill/null_test.hpp"

#include <algorithm>
#include <map>

#include "chainfill/errors.hpp"

namespace chainfill {

namespace {

// Pivot columns of an RREF basis.
std::vector<int> pivot_columns(const std::vector<Point>& basis) {
    std::vector<int> piv;
    for (const auto& row : basis) {
        for (size_t c = 0; c < row.size(); ++c)
            if (row[c] != 0) {
                piv.push_back((int)c);
                break;
            }
    }
    return piv;
}

// Chart coordinates of p within the flat (affine iso onto Q^k).
Point chart_coords(const Point& p, const FlatKey& flat, const std::vector<int>& piv) {
    const Point d = sub(p, flat.anchor);
    Point out(piv.size());
    for (size_t i = 0; i < piv.size(); ++i) out[i] = d[piv[i]];
    return out;
}

// Canonical (normal, offset) of the hyperplane through k chart points in a
// k-dimensional chart: primitive integer normal, first nonzero positive.
struct HyperKey {
    Point normal;
    Rational offset;
    bool operator<(const HyperKey& o) const {
        if (normal != o.normal) return normal < o.normal;
        return offset < o.offset;
    }
};

HyperKey hyperplane_through(const std::vector<Point>& pts) {
    const size_t k = pts[0].size();
    // Normal spans the nullspace of the (k-1) x k edge matrix.
    std::vector<Point> rows;
    for (size_t i = 1; i < pts.size(); ++i) rows.push_back(sub(pts[i], pts[0]));
    auto basis = rref_basis(rows);
    if (basis.size() != k - 1) throw InvariantViolation("degenerate facet in null test");
    // Complete to a normal: find vector orthogonal to all rows (exact).
    // Solve basis * x = 0 with one free variable set at the non-pivot column.
    auto piv = pivot_columns(basis);
    std::vector<bool> is_piv(k, false);
    for (int c : piv) is_piv[c] = true;
    int free_col = -1;
    for (size_t c = 0; c < k; ++c)
        if (!is_piv[c]) {
            free_col = (int)c;
            break;
        }
    Point normal(k, Rational(0));
    normal[free_col] = 1;
    for (size_t i = 0; i < basis.size(); ++i) normal[piv[i]] = -basis[i][free_col];
    normal = primitive_direction(normal);
    HyperKey key;
    key.offset = dot(normal, pts[0]);
    key.normal = std::move(normal);
    return key;
}

// 1D overlay: each entry covers (lo, hi) with a weight; zero iff every
// elementary interval sums to zero.
bool intervals_cancel(std::vector<std::pair<std::pair<Rational, Rational>, long long>>& iv) {
    std::vector<Rational> cuts;
    for (const auto& [seg, w] : iv) {
        cuts.push_back(seg.first);
        cuts.push_back(seg.second);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rational mid = (cuts[i] + cuts[i + 1]) / 2;
        long long sum = 0;
        for (const auto& [seg, w] : iv)
            if (seg.first < mid && mid < seg.second) sum += w;
        if (sum != 0) return false;
    }
    return true;
}

bool is_null_dim1_in_line(const std::vector<std::pair<Simplex, long long>>& segs,
                          const FlatKey& flat) {
    auto piv = pivot_columns(flat.basis);
    std::vector<std::pair<std::pair<Rational, Rational>, long long>> iv;
    for (const auto& [s, w] : segs) {
        Rational t0 = chart_coords(s.verts[0], flat, piv)[0];
        Rational t1 = chart_coords(s.verts[1], flat, piv)[0];
        // Sorted vertices are ordered along the canonical chart direction.
        long long sign = 1;
        if (t0 > t1) {
            std::swap(t0, t1);
            sign = -1;
        }
        iv.push_back({{t0, t1}, sign * w});
    }
    return intervals_cancel(iv);
}

}  // namespace

bool is_null_current(const Chain& t) {
    if (t.is_zero()) return true;
    if (t.dim() == 0) return false;  // reduced 0-chain: zero iff no terms

    // Group terms by their affine k-flat; flats are independent.
    std::map<FlatKey, std::vector<std::pair<Simplex, long long>>> groups;
    for (const auto& [s, w] : t.terms()) groups[flat_key(s)].push_back({s, w});

    for (const auto& [flat, terms] : groups) {
        if (t.dim() == 1) {
            if (!is_null_dim1_in_line(terms, flat)) return false;
            continue;
        }
        const auto piv = pivot_columns(flat.basis);
        // Jump of the multiplicity function across each facet hyperplane is a
        // (k-1)-chain; the group is null iff all jumps are null.
        std::map<HyperKey, Chain> jumps;
        for (const auto& [s, w] : terms) {
            std::vector<Point> chart_pts;
            chart_pts.reserve(s.verts.size());
            for (const auto& v : s.verts) chart_pts.push_back(chart_coords(v, flat, piv));
            for (size_t drop = 0; drop < s.verts.size(); ++drop) {
                std::vector<Point> facet_chart;
                std::vector<Point> facet_ambient;
                for (size_t j = 0; j < s.verts.size(); ++j) {
                    if (j == drop) continue;
                    facet_chart.push_back(chart_pts[j]);
                    facet_ambient.push_back(s.verts[j]);
                }
                HyperKey h = hyperplane_through(facet_chart);
                const Rational side = dot(h.normal, chart_pts[drop]) - h.offset;
                if (side == 0) throw InvariantViolation("degenerate simplex in null test");
                const long long signed_w = side > 0 ? w : -w;
                auto it = jumps.find(h);
                if (it == jumps.end())
                    it = jumps
                             .emplace(std::move(h),
                                      Chain(t.dim() - 1, NormSpec::euclidean(t.space().dim())))
                             .first;
                it->second.add(facet_ambient, signed_w);
            }
        }
        for (const auto& [h, jump] : jumps)
            if (!is_null_current(jump)) return false;
    }
    return true;
}

bool currents_equal(const Chain& a, const Chain& b) {
    if (a.dim() != b.dim()) return false;
    return is_null_current(a - b);
}

bool is_cycle(const Chain& t) {
    if (t.dim() == 0) {
        long long total = 0;
        for (const auto& [s, w] : t.terms()) total += w;
        return total == 0;
    }
    const Chain b = boundary(t);
    if (b.is_zero()) return true;
    return is_null_current(b);
}

}  // namespace chainfill
