#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chainfill/rational.hpp"

namespace chainfill {

/**
 * Oriented affine k-simplex in canonical form: vertices sorted
 * lexicographically. The orientation sign of the sorting permutation is
 * reported by make_simplex and absorbed into the chain weight, which makes
 * reduction and cancellation purely combinatorial.
 */
struct Simplex {
    std::vector<Point> verts;  // k+1 points, lexicographically sorted

    int dim() const { return (int)verts.size() - 1; }
    int ambient_dim() const { return (int)verts[0].size(); }

    bool operator<(const Simplex& o) const { return verts < o.verts; }
    bool operator==(const Simplex& o) const { return verts == o.verts; }
};

// Canonicalizes an ordered vertex tuple. Returns nullopt for degenerate
// (affinely dependent) tuples; otherwise the sorted simplex and the sign
// (+1/-1) of the sorting permutation.
std::optional<std::pair<Simplex, int>> make_simplex(std::vector<Point> ordered);

// Edge vectors v_i - v_0 (empty for k = 0).
std::vector<Point> edge_vectors(const Simplex& s);

// Euclidean k-volume: sqrt(det Gram)/k!; 1 for k = 0.
double euclid_volume(const Simplex& s);

// Canonical key of the linear k-plane parallel to the simplex (RREF basis).
std::vector<Point> plane_key(const Simplex& s);

// Canonical key of the affine flat spanned by the simplex: RREF basis plus
// the anchor (component of a vertex orthogonal to the span).
struct FlatKey {
    std::vector<Point> basis;
    Point anchor;
    bool operator<(const FlatKey& o) const {
        if (basis != o.basis) return basis < o.basis;
        return anchor < o.anchor;
    }
};
FlatKey flat_key(const Simplex& s);

Point barycenter(const Simplex& s);

}  // namespace chainfill
