#pragma once

#include "chainfill/growth.hpp"

namespace chainfill {

// A point on the support with positive critical radius: the ball B(y, r0)
// captures mass >= F r0^k by definition of r0.
struct WeightedCandidate {
    Point y;
    double r0 = 0;
    double captured = 0;  // beta_y(r0)
    GrowthFunction growth;
};

struct CoverSelection {
    std::vector<size_t> selected;  // indices into the candidate list, in greedy order
    double achieved_fraction = 0;  // sum captured / M(T)
};

/**
 * Discrete stand-in for "r0(y) > 0 for almost every y": simplex barycenters
 * and vertices, plus extra_per_simplex stratified points (deterministic per
 * seed). Candidates with r0 = 0 are dropped.
 */
std::vector<WeightedCandidate> select_candidates(const Chain& t, double f_const, int k,
                                                 int extra_per_simplex = 0, unsigned seed = 1);

// Greedy by decreasing r0 (ties: lexicographic center): accept iff the
// dilated ball B(y, 2 r0) is disjoint from every accepted dilated ball.
CoverSelection greedy_cover(const std::vector<WeightedCandidate>& cands, const NormSpec& space,
                            double total_mass);

// Exact disjointness of B(a, ra) and B(b, rb) (closed balls). Radii are
// dyadic doubles, so polytope and euclidean kinds compare exactly.
bool balls_disjoint_exact(const NormSpec& space, const Point& a, double ra, const Point& b,
                          double rb);

// Every candidate ball B(y, r0) is contained in B(y_sel, 5 r0_sel) for some
// selected candidate with r0_sel >= r0. The geometric engine behind the
// Vitali constant alpha = 5^{-k}.
bool five_r_cover_holds(const std::vector<WeightedCandidate>& cands,
                        const std::vector<size_t>& selected, const NormSpec& space);

}  // namespace chainfill
