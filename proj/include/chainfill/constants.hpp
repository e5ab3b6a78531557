#pragma once

#include "chainfill/rational.hpp"

namespace chainfill {

/**
 * The full constants chain for the filling engine in dimension k:
 *
 *   F      = lambda^{k-1} / (C^{k-1} k^k)   (F = 1 when k = 1)
 *   alpha  = 5^{-k}                         (Vitali constant of the greedy cover)
 *   delta  = alpha (1 - lambda)
 *   E      = 4 / [F (1 - lambda)]^{1/k}     (roundness constant; 4 when k = 1)
 *   C_k    = (k+1) gamma^{k+1}, gamma = 1   (cone constant of the linear bicombing)
 *   D      = C_k E ((1+lambda)/delta)^{(k+1)/k}
 *
 * C is the isoperimetric constant certified for dimension k-1 (the engine
 * feeds its own D_{k-1} when recursing); lambda is 0 for k = 1 and lies in
 * (0, 1/6] otherwise, halved until F < omega_k / k^{k/2}.
 */
struct ConstantsChain {
    int k = 1;
    double C_prev = 0;   // isoperimetric constant for dimension k-1 (k >= 2)
    Rational lambda = 0; // mass slack of slice fillings
    Rational alpha = 0;  // covering fraction
    Rational delta = 0;  // per-round mass decay
    double F = 1;        // growth threshold
    double E = 4;        // roundness constant
    double cone_const = 2;  // C_k
    double D = 200;      // certified isoperimetric constant for dimension k
};

ConstantsChain constants(int k, double c_prev = 0, const Rational& lambda = Rational(1, 6));

}  // namespace chainfill
