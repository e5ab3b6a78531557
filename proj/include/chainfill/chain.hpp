#pragma once

#include <map>
#include <optional>
#include <vector>

#include "chainfill/normed_space.hpp"
#include "chainfill/simplex.hpp"

namespace chainfill {

/**
 * Reduced integer-weighted polyhedral k-chain in an ambient normed space.
 *
 * Terms are kept in a canonical ordered map keyed by the sorted simplex, so
 * addition, cancellation and boundary are exact and order-insensitive.
 * Chains are value types; all operations on them are pure.
 */
class Chain {
public:
    Chain() : Chain(0, NormSpec::euclidean(1)) {}  // empty placeholder
    Chain(int dim, NormSpec space) : dim_(dim), space_(std::move(space)) {}

    using RawTerm = std::pair<std::vector<Point>, long long>;
    // reduce(): merges orientation-equivalent simplices, drops zeros and
    // degenerate simplices. Idempotent by construction.
    static Chain from_terms(int dim, NormSpec space, const std::vector<RawTerm>& raw);

    int dim() const { return dim_; }
    const NormSpec& space() const { return space_; }
    const std::map<Simplex, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    // Adds w times the oriented simplex, canonicalizing and cancelling.
    void add(const std::vector<Point>& ordered_verts, long long w);
    void add_canonical(const Simplex& s, long long w);
    void add_chain(const Chain& other, long long multiplier = 1);

    Chain operator+(const Chain& o) const;
    Chain operator-(const Chain& o) const;
    Chain operator*(long long c) const;
    Chain operator-() const { return *this * -1; }

private:
    int dim_;
    NormSpec space_;
    std::map<Simplex, long long> terms_;
};

// Alternating-face boundary; exact, linear, and ∂∘∂ = 0 identically.
Chain boundary(const Chain& t);

// Sum over terms of |weight| * busemann_density(plane) * euclidean volume.
double mass(const Chain& t);

// Max norm distance between support vertices. Throws on the zero chain.
double support_diameter(const Chain& t);

// Deduplicated vertex list of the reduced chain (lexicographic order).
std::vector<Point> support_vertices(const Chain& t);

// Affine map x -> A x + b.
struct AffineMap {
    std::vector<Point> matrix;  // m rows of size n
    Point offset;               // size m

    Point apply(const Point& x) const;
    // Operator norm wrt euclidean metric (power iteration, for test bounds).
    double euclid_operator_norm() const;
};

// Piecewise-affine map given by a simplicial partition of the domain. Every
// simplex of the argument chain must lie inside a single cell; otherwise the
// caller has to refine and pushforward throws.
struct PiecewiseAffineMap {
    struct Piece {
        std::optional<Simplex> cell;  // nullopt: applies everywhere
        AffineMap map;
    };
    std::vector<Piece> pieces;

    static PiecewiseAffineMap global(AffineMap m) {
        return PiecewiseAffineMap{{Piece{std::nullopt, std::move(m)}}};
    }
};

// φ#T: maps vertices cell-wise; degenerate images are dropped.
// Satisfies ∂(φ#T) = φ#(∂T) as currents.
Chain pushforward(const Chain& t, const PiecewiseAffineMap& phi, const NormSpec& target_space);

bool point_in_simplex(const Point& p, const Simplex& cell);

}  // namespace chainfill
