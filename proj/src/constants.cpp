#include "chainfill/constants.hpp"

#include <cmath>

#include "chainfill/errors.hpp"
#include "chainfill/normed_space.hpp"

namespace chainfill {

ConstantsChain constants(int k, double c_prev, const Rational& lambda_in) {
    if (k < 1) throw InputError("constants: k must be >= 1");
    ConstantsChain c;
    c.k = k;
    c.alpha = Rational(1);
    for (int i = 0; i < k; ++i) c.alpha /= 5;
    c.cone_const = k + 1;  // gamma = 1
    if (k == 1) {
        c.lambda = 0;
        c.F = 1;
        c.delta = c.alpha;
        c.E = 4;
        c.D = c.cone_const * c.E *
              std::pow(to_double((1 + c.lambda) / c.delta), (k + 1.0) / k);
        return c;
    }
    if (!(c_prev > 0))
        throw InputError("constants: k >= 2 requires the dimension k-1 isoperimetric constant");
    if (lambda_in <= 0 || lambda_in > Rational(1, 6))
        throw InputError("constants: lambda must lie in (0, 1/6]");
    c.C_prev = c_prev;
    c.lambda = lambda_in;
    const double omega_k = unit_ball_volume(k);
    const double cap = omega_k / std::pow((double)k, k / 2.0);
    for (int halvings = 0;; ++halvings) {
        if (halvings > 64) throw InputError("constants: no admissible lambda");
        c.F = std::pow(to_double(c.lambda), k - 1) /
              (std::pow(c_prev, k - 1) * std::pow((double)k, k));
        if (c.F < cap) break;
        c.lambda /= 2;
    }
    // support-radius condition: 3 Ck (lambda F)^{1/k} / C^{1/k} = 3 lambda <= 1/2
    if (3 * c.lambda > Rational(1, 2))
        throw InvariantViolation("constants: support condition 3 lambda <= 1/2 failed");
    c.delta = c.alpha * (1 - c.lambda);
    c.E = 4.0 / std::pow(c.F * to_double(1 - c.lambda), 1.0 / k);
    c.D = c.cone_const * c.E * std::pow(to_double((1 + c.lambda) / c.delta), (k + 1.0) / k);
    return c;
}

}  // namespace chainfill
