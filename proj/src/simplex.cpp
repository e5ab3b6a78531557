#include "chainfill/simplex.hpp"

#include <algorithm>

#include "chainfill/errors.hpp"

namespace chainfill {

std::optional<std::pair<Simplex, int>> make_simplex(std::vector<Point> ordered) {
    if (ordered.empty()) throw InputError("simplex needs at least one vertex");
    const size_t n = ordered[0].size();
    for (const auto& v : ordered)
        if (v.size() != n) throw InputError("simplex vertices of mixed dimension");
    // Selection sort tracking permutation parity.
    int sign = 1;
    for (size_t i = 0; i + 1 < ordered.size(); ++i) {
        size_t best = i;
        for (size_t j = i + 1; j < ordered.size(); ++j)
            if (ordered[j] < ordered[best]) best = j;
        if (best != i) {
            std::swap(ordered[i], ordered[best]);
            sign = -sign;
        }
    }
    for (size_t i = 0; i + 1 < ordered.size(); ++i)
        if (ordered[i] == ordered[i + 1]) return std::nullopt;  // repeated vertex
    const int k = (int)ordered.size() - 1;
    if (k > 0) {
        std::vector<Point> edges;
        edges.reserve(k);
        for (int i = 1; i <= k; ++i) edges.push_back(sub(ordered[i], ordered[0]));
        if (rank_of(edges) != k) return std::nullopt;  // affinely dependent
    }
    Simplex s;
    s.verts = std::move(ordered);
    return std::make_pair(std::move(s), sign);
}

std::vector<Point> edge_vectors(const Simplex& s) {
    std::vector<Point> edges;
    for (size_t i = 1; i < s.verts.size(); ++i) edges.push_back(sub(s.verts[i], s.verts[0]));
    return edges;
}

double euclid_volume(const Simplex& s) {
    const int k = s.dim();
    if (k == 0) return 1.0;
    const Rational g = gram_det(edge_vectors(s));
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    return std::sqrt(to_double(g)) / fact;
}

std::vector<Point> plane_key(const Simplex& s) { return rref_basis(edge_vectors(s)); }

FlatKey flat_key(const Simplex& s) {
    FlatKey key;
    key.basis = plane_key(s);
    if (key.basis.empty()) {
        key.anchor = s.verts[0];
    } else {
        key.anchor = sub(s.verts[0], project_onto_span(s.verts[0], key.basis));
    }
    return key;
}

Point barycenter(const Simplex& s) {
    Point c(s.verts[0].size(), Rational(0));
    for (const auto& v : s.verts) c = add(c, v);
    return scale(c, Rational(1, (long long)s.verts.size()));
}

}  // namespace chainfill
