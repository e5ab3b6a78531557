#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "chainfill/rational.hpp"

namespace chainfill {

// k independent vectors spanning a k-plane through the origin, k in {1,2,3}.
using PlaneBasis = std::vector<Point>;

/**
 * Ambient normed space (R^n, ||.||).
 *
 * Three kinds: euclidean, lp with rational exponent p >= 1, and polytope
 * (gauge of a centrally symmetric rational polytope, the "exact mode" norm:
 * evaluation and sphere crossings stay rational).
 */
class NormSpec {
public:
    enum class Kind { Euclidean, Lp, Polytope };

    static NormSpec euclidean(int n);
    static NormSpec lp(int n, const Rational& p);
    static NormSpec polytope(int n, std::vector<Point> vertices);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    const Rational& lp_exponent() const { return p_; }
    const std::vector<Point>& polytope_vertices() const { return vertices_; }

    // Outward facet functionals a with unit ball = {x : <a,x> <= 1 for all a}.
    // Polytope kind only.
    const std::vector<Point>& facets() const;

    bool exact() const { return kind_ == Kind::Polytope; }

    double norm(const Point& v) const;
    // Polytope kind only: the gauge of a rational vector is rational.
    Rational norm_exact(const Point& v) const;

    double dist(const Point& a, const Point& b) const { return norm(sub(a, b)); }
    Rational dist_exact(const Point& a, const Point& b) const { return norm_exact(sub(a, b)); }

    // Absolute tolerance of the quadrature used for lp section volumes;
    // zero for kinds evaluated exactly or in closed form.
    double density_quadrature_tol() const;

    bool operator==(const NormSpec& o) const;
    bool operator!=(const NormSpec& o) const { return !(*this == o); }

private:
    NormSpec() = default;

    Kind kind_ = Kind::Euclidean;
    int dim_ = 0;
    Rational p_ = 2;
    std::vector<Point> vertices_;
    std::shared_ptr<const std::vector<Point>> facets_;
};

double norm_eval(const NormSpec& space, const Point& v);

/**
 * Multiplier converting Euclidean k-volume inside the plane to the Hausdorff
 * k-volume of the norm metric (Busemann convention):
 *     density = omega_k / vol_E(unit ball ∩ plane).
 * Equals 1 for the euclidean kind.
 */
double busemann_density(const NormSpec& space, const PlaneBasis& plane);

// Lebesgue volume of the Euclidean unit k-ball.
double unit_ball_volume(int k);

// Euclidean area of { (s,t) : ||s u + t v|| <= 1 } in the plane span(u, v).
// Exposed for tests; busemann_density(k = 2) is omega_2 / this.
double section_area(const NormSpec& space, const Point& u, const Point& v);

}  // namespace chainfill
