#pragma once

#include "chainfill/chain.hpp"

namespace chainfill {

/**
 * Exact decision procedure: is the chain the zero current?
 *
 * Formal reduction cannot see that a simplex equals the sum of its
 * subdivisions, so chain identities that survive clipping are checked as
 * current identities. The test is exact (rational arithmetic):
 * a k-chain is null iff, within every affine k-flat it touches, the jump of
 * its multiplicity function across every facet hyperplane vanishes a.e.;
 * each jump is itself a (k-1)-chain, so the test recurses down to weights
 * of points. No tolerances are involved.
 */
bool is_null_current(const Chain& t);

// a == b as currents (exact).
bool currents_equal(const Chain& a, const Chain& b);

// ∂t = 0 as a current (total weight zero for 0-chains). The boundary of a
// reduced chain usually cancels formally; subdivided cycles need the full
// null test.
bool is_cycle(const Chain& t);

}  // namespace chainfill
