#pragma once

#include "chainfill/chain.hpp"

namespace chainfill {

// [t] x T: embeds T into R^{1+n} at first coordinate t.
Chain embed_at(const Chain& t, const Rational& level);

/**
 * [0,1] x T as a polyhedral chain in R^{1+n} (euclidean product metric),
 * built from the staircase triangulation of each prism Δ^k x [0,1] into
 * k+1 simplices. Satisfies, exactly and with plain top/bottom embeddings,
 *
 *     ∂(interval_product(T)) = embed_at(T,1) - embed_at(T,0)
 *                              - interval_product(∂T),
 *
 * which coincides with the product boundary theorem on cycles. (With plain
 * embeddings the sign of the third term is forced: substituting ∂T for T
 * shows the opposite sign would contradict ∂∘∂ = 0.)
 */
Chain interval_product(const Chain& t);

struct ConeResult {
    Chain filling;   // dimension k+1, ∂filling = T for cycles T
    double mass = 0;
    double diam = 0;  // diam(spt T ∪ {apex})
    double bound = 0; // (k+1) * gamma^{k+1} * diam * M(T), gamma = 1
};

/**
 * Cone over a cycle from an apex along the linear bicombing: the chain of
 * joins conv(apex, sigma). Requires the apex to avoid the affine span of
 * every simplex it is not a vertex of (pick a generic apex otherwise);
 * apex = vertex degeneracies cancel exactly and are dropped.
 * Certifies and asserts M(S) <= (k+1) * diam(spt T ∪ {apex}) * M(T).
 */
ConeResult cone(const Chain& t, const Point& apex);

// Apex auto-selected: lexicographically smallest support vertex admitting a
// nondegenerate cone; falls back to barycentric interior points (all within
// conv(spt T), so the diameter bound is unchanged).
ConeResult cone_from_support(const Chain& t);

}  // namespace chainfill
