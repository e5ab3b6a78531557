#pragma once

#include <functional>
#include <optional>

#include "chainfill/ball_clip.hpp"
#include "chainfill/constants.hpp"
#include "chainfill/covering.hpp"

namespace chainfill {

/**
 * Test oracle for the growth lemma: a nondecreasing beta on [r0, r1] with
 *   (i)  beta(r0) = r0^k / (Cbar^{k-1} k^k)
 *   (ii) beta(r)  <= Cbar beta'(r)^{k/(k-1)} a.e.
 * must satisfy beta(r) >= r^k / (Cbar^{k-1} k^k) on all of [r0, r1].
 * Verified on a grid with the given relative tolerance.
 */
bool ode_lower_bound_check(double cbar, int k, const std::function<double(double)>& beta,
                           double r0, double r1, int grid = 512, double rel_tol = 1e-6);

// Fills a (k-1)-cycle and returns the filling chain (used for the slice
// fillings when k >= 2; wired to the recursive engine by the isofill module).
using SliceFiller = std::function<Chain(const Chain&)>;

/**
 * Radius at which to split T at center y.
 * k = 1: an exact radius in [r0, 2 r0) whose sphere misses spt T entirely
 *        (complement of the per-segment distance ranges; the growth bound
 *        beta(r) < r beyond r0 forces a gap to exist).
 * k >= 2: a radius in [r0, 4 r0 / 3] with C beta'(r)^{k/(k-1)} < lambda beta(r),
 *        found by scanning the growth function away from tangencies.
 * Throws NoSplitRadius when no admissible radius is found after refinement.
 */
Rational find_split_radius(const Chain& t, const Point& y, const GrowthFunction& g,
                           const ConstantsChain& consts, const ClipMode& mode);

struct SplitPiece {
    Chain piece;  // round cycle split off at y
    Chain rest;   // T - piece
    Point center;
    double r0 = 0;
    Rational radius = 0;
    double piece_mass = 0;
    double restricted_mass = 0;  // beta-hat: measured mass of T|B(y,r)
    double diam = 0;
    double slice_mass = 0;  // k >= 2
    double fill_mass = 0;   // k >= 2
    bool cone_fallback = false;
};

SplitPiece split_off(const Chain& t, const Point& y, double r0, const Rational& r,
                     const ConstantsChain& consts, const ClipMode& mode,
                     const SliceFiller& filler);

struct DecomposeConfig {
    ClipMode mode = ClipMode::exact_mode();
    int extra_candidates = 0;  // stratified extras per simplex (besides barycenters/vertices)
    unsigned seed = 1;
    int max_densify_retries = 2;
    SliceFiller filler;  // required for k >= 2
};

struct Decomposition {
    std::vector<SplitPiece> pieces;
    Chain remainder;
    ConstantsChain consts;
    double input_mass = 0;
    double achieved_fraction = 0;  // covered mass fraction of the greedy selection
};

/**
 * T = sum of round cycles + remainder, with
 *   (i)   diam(spt T_i) <= E M(T_i)^{1/k}
 *   (ii)  M(R) <= (1 - delta) M(T)
 *   (iii) sum M(T_i) <= (1 + lambda) M(T)
 * and T - sum T_i - R the zero current, exactly. All four are checked before
 * returning; a violation aborts with diagnostics.
 */
Decomposition decompose(const Chain& t, const ConstantsChain& consts, const DecomposeConfig& cfg);

}  // namespace chainfill
