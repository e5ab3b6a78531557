#pragma once

#include "chainfill/chain.hpp"

namespace chainfill {

// Closed ball {x : ||x - y|| <= r} in the chain's ambient space.
struct Ball {
    Point center;
    Rational radius;
};

/**
 * Clipping mode. Exact mode needs a polytope norm: every sphere crossing is
 * the solution of rational linear equations. Snap mode rounds crossing
 * points to rational points *on the carrier simplex* within tol, and uses
 * the same snapped points on both sides of the sphere, so the splitting
 * identity T = T|B + T|B^c stays exact as currents while the realized sphere
 * is r +- tol.
 */
struct ClipMode {
    bool exact = true;
    double tol = 0.0;

    static ClipMode exact_mode() { return ClipMode{true, 0.0}; }
    static ClipMode snap(double tol);
};

struct RestrictSplit {
    Chain inside;
    Chain outside;
    double realized_tol = 0.0;  // max |rho(snapped point) - r| over new vertices
};

// Splits T along the sphere; inside + outside == T exactly as currents.
// Pieces of zero k-volume on the sphere itself go to the inside (closed-ball
// restriction); the choice is deterministic and mass-irrelevant.
RestrictSplit restrict_split(const Chain& t, const Ball& ball, const ClipMode& mode);

// T|B, the inside half of restrict_split.
Chain restrict_to_ball(const Chain& t, const Ball& ball, const ClipMode& mode);

// Exact where the arithmetic admits it (polytope gauge, euclidean via squared
// distances); lp falls back to doubles.
bool vertex_in_ball(const NormSpec& space, const Ball& ball, const Point& v);

// Distances from the ball center to every chain vertex (used for picking
// radii away from tangencies).
std::vector<double> vertex_distances(const Chain& t, const NormSpec& space, const Point& y);

}  // namespace chainfill
