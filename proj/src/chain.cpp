#include "chainfill/chain.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "chainfill/errors.hpp"

namespace chainfill {

Chain Chain::from_terms(int dim, NormSpec space, const std::vector<RawTerm>& raw) {
    Chain c(dim, std::move(space));
    for (const auto& [verts, w] : raw) {
        if ((int)verts.size() != dim + 1)
            throw InputError("mixed simplex dimensions in chain construction");
        c.add(verts, w);
    }
    return c;
}

void Chain::add(const std::vector<Point>& ordered_verts, long long w) {
    if (w == 0) return;
    if ((int)ordered_verts.size() != dim_ + 1)
        throw InputError("simplex dimension does not match chain dimension");
    auto canon = make_simplex(ordered_verts);
    if (!canon) return;  // degenerate simplices carry no current
    if (canon->first.ambient_dim() != space_.dim())
        throw InputError("simplex ambient dimension does not match chain space");
    add_canonical(canon->first, w * canon->second);
}

void Chain::add_canonical(const Simplex& s, long long w) {
    if (w == 0) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        terms_.emplace(s, w);
    } else {
        it->second += w;
        if (it->second == 0) terms_.erase(it);
    }
}

void Chain::add_chain(const Chain& other, long long multiplier) {
    if (other.dim_ != dim_ || other.space_ != space_)
        throw InputError("chain addition requires matching dimension and space");
    for (const auto& [s, w] : other.terms_) add_canonical(s, w * multiplier);
}

Chain Chain::operator+(const Chain& o) const {
    Chain r = *this;
    r.add_chain(o, 1);
    return r;
}

Chain Chain::operator-(const Chain& o) const {
    Chain r = *this;
    r.add_chain(o, -1);
    return r;
}

Chain Chain::operator*(long long c) const {
    Chain r(dim_, space_);
    if (c == 0) return r;
    for (const auto& [s, w] : terms_) r.terms_.emplace(s, w * c);
    return r;
}

Chain boundary(const Chain& t) {
    if (t.dim() < 1) throw InputError("boundary requires dimension >= 1");
    Chain b(t.dim() - 1, t.space());
    for (const auto& [s, w] : t.terms()) {
        // Faces of a sorted simplex are sorted; no re-canonicalization needed,
        // but a face of a nondegenerate simplex is nondegenerate anyway.
        for (size_t i = 0; i < s.verts.size(); ++i) {
            Simplex face;
            face.verts.reserve(s.verts.size() - 1);
            for (size_t j = 0; j < s.verts.size(); ++j)
                if (j != i) face.verts.push_back(s.verts[j]);
            b.add_canonical(face, (i % 2 == 0) ? w : -w);
        }
    }
    return b;
}

double mass(const Chain& t) {
    if (t.dim() == 0) {
        double m = 0;
        for (const auto& [s, w] : t.terms()) m += std::abs((double)w);
        return m;
    }
    std::map<std::vector<Point>, double> density_memo;
    double m = 0;
    for (const auto& [s, w] : t.terms()) {
        const auto key = plane_key(s);
        auto it = density_memo.find(key);
        if (it == density_memo.end())
            it = density_memo.emplace(key, busemann_density(t.space(), key)).first;
        m += std::abs((double)w) * it->second * euclid_volume(s);
    }
    return m;
}

std::vector<Point> support_vertices(const Chain& t) {
    std::set<Point> verts;
    for (const auto& [s, w] : t.terms())
        for (const auto& v : s.verts) verts.insert(v);
    return {verts.begin(), verts.end()};
}

double support_diameter(const Chain& t) {
    if (t.is_zero()) throw InputError("support diameter of the zero chain");
    const auto verts = support_vertices(t);
    double d = 0;
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            d = std::max(d, t.space().dist(verts[i], verts[j]));
    return d;
}

Point AffineMap::apply(const Point& x) const {
    Point y = offset;
    for (size_t i = 0; i < matrix.size(); ++i) y[i] = y[i] + dot(matrix[i], x);
    return y;
}

double AffineMap::euclid_operator_norm() const {
    const size_t n = matrix.empty() ? 0 : matrix[0].size();
    std::vector<double> v(n, 1.0 / std::sqrt((double)n));
    double norm = 0;
    for (int iter = 0; iter < 200; ++iter) {
        // w = A^T A v
        std::vector<double> av(matrix.size(), 0.0);
        for (size_t i = 0; i < matrix.size(); ++i)
            for (size_t j = 0; j < n; ++j) av[i] += to_double(matrix[i][j]) * v[j];
        std::vector<double> w(n, 0.0);
        for (size_t i = 0; i < matrix.size(); ++i)
            for (size_t j = 0; j < n; ++j) w[j] += to_double(matrix[i][j]) * av[i];
        double len = 0;
        for (double x : w) len += x * x;
        len = std::sqrt(len);
        if (len == 0) return 0;
        for (size_t j = 0; j < n; ++j) v[j] = w[j] / len;
        norm = std::sqrt(len);
    }
    return norm;
}

bool point_in_simplex(const Point& p, const Simplex& cell) {
    // Barycentric solve: p - v0 = sum_i c_i (v_i - v0), c_i >= 0, sum <= 1.
    const auto edges = edge_vectors(cell);
    const size_t k = edges.size();
    // Solve least-squares-free: the system may be overdetermined if the cell
    // is lower-dimensional than the ambient; use the Gram system and verify.
    std::vector<Point> gram(k, Point(k));
    Point rhs(k);
    const Point d = sub(p, cell.verts[0]);
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) gram[i][j] = dot(edges[i], edges[j]);
        rhs[i] = dot(edges[i], d);
    }
    // Gaussian elimination.
    for (size_t i = 0; i < k; ++i) gram[i].push_back(rhs[i]);
    for (size_t c = 0; c < k; ++c) {
        size_t pivot = c;
        while (pivot < k && gram[pivot][c] == 0) ++pivot;
        if (pivot == k) return false;
        std::swap(gram[pivot], gram[c]);
        const Rational inv = Rational(1) / gram[c][c];
        for (size_t j = c; j <= k; ++j) gram[c][j] *= inv;
        for (size_t i = 0; i < k; ++i) {
            if (i == c || gram[i][c] == 0) continue;
            const Rational f = gram[i][c];
            for (size_t j = c; j <= k; ++j) gram[i][j] -= f * gram[c][j];
        }
    }
    Point coeff(k);
    Rational sum = 0;
    for (size_t i = 0; i < k; ++i) {
        coeff[i] = gram[i][k];
        if (coeff[i] < 0) return false;
        sum += coeff[i];
    }
    if (sum > 1) return false;
    // Verify p actually lies in the affine hull (residual must vanish).
    Point recon = cell.verts[0];
    for (size_t i = 0; i < k; ++i) recon = add(recon, scale(edges[i], coeff[i]));
    return recon == p;
}

Chain pushforward(const Chain& t, const PiecewiseAffineMap& phi, const NormSpec& target_space) {
    Chain out(t.dim(), target_space);
    for (const auto& [s, w] : t.terms()) {
        const AffineMap* map = nullptr;
        for (const auto& piece : phi.pieces) {
            if (!piece.cell) {
                map = &piece.map;
                break;
            }
            bool inside = true;
            for (const auto& v : s.verts)
                if (!point_in_simplex(v, *piece.cell)) {
                    inside = false;
                    break;
                }
            if (inside) {
                map = &piece.map;
                break;
            }
        }
        if (!map)
            throw InputError("pushforward: map not affine on a chain simplex; refine the chain");
        std::vector<Point> img;
        img.reserve(s.verts.size());
        for (const auto& v : s.verts) img.push_back(map->apply(v));
        out.add(img, w);
    }
    return out;
}

}  // namespace chainfill
