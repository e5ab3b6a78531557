#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace chainfill {

// Exact rational scalar used for all vertex coordinates and chain algebra.
// Masses and norm values that involve square roots are evaluated in double.
// Expression templates are off so values behave like plain scalars.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

// A point (or vector) with exact rational coordinates.
using Point = std::vector<Rational>;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Rational rational_of(long long num, long long den = 1) {
    return Rational(num, den);
}

// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double x);

// Round x to the dyadic grid with spacing <= step (step > 0).
Rational snap_to_grid(double x, double step);

// Parses "p/q", plain integers, and decimal literals ("0.25", "1e-3") exactly.
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& q);

// ---- small exact vector helpers (ambient dimension is 1..4) ----

Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
Point scale(const Point& a, const Rational& c);
Rational dot(const Point& a, const Point& b);

inline bool lex_less(const Point& a, const Point& b) { return a < b; }

double euclid_norm(const Point& v);
double euclid_dist(const Point& a, const Point& b);

// Divides an integer-like rational vector by the gcd of its entries and fixes
// the sign of the first nonzero entry to be positive. Input must be nonzero.
Point primitive_direction(const Point& v);

// Rational row-reduction rank of a list of vectors.
int rank_of(const std::vector<Point>& vectors);

// Reduced row echelon form of the span of `vectors`; canonical basis of the
// linear subspace (unique per subspace). Rows are returned in pivot order.
std::vector<Point> rref_basis(const std::vector<Point>& vectors);

// Orthogonal projection of p onto span(basis), computed exactly via the
// rational Gram system. basis must be linearly independent.
Point project_onto_span(const Point& p, const std::vector<Point>& basis);

// Exact determinant of the Gram matrix of the given vectors.
Rational gram_det(const std::vector<Point>& vectors);

}  // namespace chainfill
