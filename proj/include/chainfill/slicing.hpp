#pragma once

#include "chainfill/ball_clip.hpp"
#include "chainfill/growth.hpp"

namespace chainfill {

struct SliceResult {
    Rational radius;          // realized radius (after any snap-mode perturbation)
    double realized_tol = 0;  // max distance of slice vertices from the sphere
    Chain slice;              // dimension k-1
};

/**
 * <T, rho, r> = ∂(T|{rho <= r}) - (∂T)|{rho <= r} with rho = ||. - y||.
 * For cycles this is ∂(T|B). The slice is an integer chain supported within
 * realized_tol of the sphere. In snap mode a radius within tol of a vertex
 * distance is perturbed upward by 2 tol (slices exist for a.e. radius); in
 * exact mode such a radius is an error and the caller perturbs.
 */
SliceResult slice(const Chain& t, const Point& y, const Rational& r, const ClipMode& mode);

struct SliceDerivRow {
    double r = 0;
    double slice_mass = 0;
    double beta_right_deriv = 0;
    double violation = 0;  // max(0, slice_mass - beta')
};

struct SliceDerivReport {
    std::vector<SliceDerivRow> rows;
    double max_violation = 0;
};

// Checks M(<T,rho,r>) <= d/dr beta(r) at the sampled radii (cycles only).
SliceDerivReport slice_mass_vs_derivative(const Chain& t, const Point& y,
                                          const std::vector<double>& radii, const ClipMode& mode);

}  // namespace chainfill
