#pragma once

#include <array>
#include <variant>
#include <vector>

#include "chainfill/chain.hpp"

namespace chainfill {

namespace growth_detail {

// Piecewise polynomial (degree <= 2) with optional step discontinuities.
// Exact for polytope norms (degenerate flat tangencies become steps).
struct PolyPart {
    std::vector<double> bps;                       // sorted; value constant = total beyond back()
    std::vector<std::array<double, 3>> coeff;      // per interval [bps[i], bps[i+1])
    std::vector<std::pair<double, double>> steps;  // (radius, height), included for r >= radius
    double total = 0;
};

struct SegEuclidPart {
    double len = 0;     // euclidean length
    double h = 0;       // distance to the carrying line
    double tstar = 0;   // foot parameter
    double scale = 0;   // |weight| * busemann density * len
    double rmax = 0;
};

struct TriEuclidPart {
    std::array<std::array<double, 2>, 3> frame;  // vertices in a foot-centered orthonormal frame
    double h = 0;                                // distance to the carrying plane
    double scale = 0;                            // |weight| * density (euclidean: 1)
    double rmax = 0;
    std::vector<double> bps;
};

struct SampledPart {
    std::vector<double> r;  // strictly increasing grid
    std::vector<double> v;  // nondecreasing values
    std::vector<double> m;  // Fritsch-Carlson slopes
    double total = 0;
};

using Part = std::variant<PolyPart, SegEuclidPart, TriEuclidPart, SampledPart>;

}  // namespace growth_detail

/**
 * beta_y(r) = ||T||(B(y, r)), the mass of T inside the closed ball of radius
 * r. Nondecreasing with beta(0) = 0 and beta(r) = M(T) beyond the support
 * radius; continuous except at flagged degenerate tangencies (positive mass
 * sitting exactly on a sphere, possible for polytope norms).
 */
class GrowthFunction {
public:
    static GrowthFunction build(const Chain& t, const Point& y);

    double eval(double r) const;
    double right_derivative(double r) const;

    // Sorted union of the parts' smoothness breakpoints.
    const std::vector<double>& breakpoints() const { return bps_; }
    double total_mass() const { return total_; }
    double support_radius() const { return support_radius_; }
    const Point& center() const { return center_; }

    bool degenerate_tangency() const { return !jump_radii_.empty(); }
    const std::vector<double>& jump_radii() const { return jump_radii_; }

    // Largest r >= 0 with beta(r) >= F r^k; 0 if no positive r qualifies.
    double critical_radius(double f_const, int k) const;

private:
    std::vector<growth_detail::Part> parts_;
    std::vector<double> bps_;
    std::vector<double> jump_radii_;
    double total_ = 0;
    double support_radius_ = 0;
    Point center_;
};

// growth_function per the module surface.
inline GrowthFunction growth_function(const Chain& t, const Point& y) {
    return GrowthFunction::build(t, y);
}

// [min, max] of ||x - y|| over a segment or point simplex (exact reasoning
// for polytope and euclidean norms, ternary search for lp).
struct DistanceRange {
    double lo = 0, hi = 0;
};
DistanceRange simplex_distance_range(const NormSpec& space, const Point& y, const Simplex& s);

}  // namespace chainfill
