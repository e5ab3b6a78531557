#include "chainfill/rational.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chainfill {

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
    return Rational(x);  // exact: doubles are dyadic
}

Rational snap_to_grid(double x, double step) {
    if (step <= 0) throw std::invalid_argument("snap step must be positive");
    // Grid spacing 2^-b with 2^-b <= step.
    int b = std::max(0, (int)std::ceil(-std::log2(step)));
    if (b > 300) b = 300;
    const double scaled = std::ldexp(x, b);
    const double rounded = std::nearbyint(scaled);
    Rational pow2 = 1;
    for (int i = 0; i < b; ++i) pow2 *= 2;
    return rational_from_double(rounded) / pow2;
}

Rational parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw std::invalid_argument("bad rational: " + text);
        const boost::multiprecision::mpz_int n{num};
        const boost::multiprecision::mpz_int d{den};
        if (d == 0) throw std::invalid_argument("zero denominator: " + text);
        return Rational(n) / Rational(d);
    }
    // Decimal or scientific literal, converted exactly (base-10 mantissa).
    bool neg = false;
    std::string t = s;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        neg = t[0] == '-';
        t = t.substr(1);
    }
    long long exp10 = 0;
    auto epos = t.find_first_of("eE");
    if (epos != std::string::npos) {
        exp10 = std::stoll(t.substr(epos + 1));
        t = t.substr(0, epos);
    }
    std::string digits;
    long long frac_digits = 0;
    bool seen_dot = false;
    for (char c : t) {
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("bad rational: " + text);
            seen_dot = true;
            continue;
        }
        if (c < '0' || c > '9') throw std::invalid_argument("bad rational: " + text);
        digits.push_back(c);
        if (seen_dot) ++frac_digits;
    }
    if (digits.empty()) throw std::invalid_argument("bad rational: " + text);
    const boost::multiprecision::mpz_int mant{digits};
    Rational q(mant);
    long long e = exp10 - frac_digits;
    Rational ten(10);
    for (long long i = 0; i < e; ++i) q *= ten;
    for (long long i = 0; i < -e; ++i) q /= ten;
    return neg ? -q : q;
}

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q) << "/" << denominator(q);
    return os.str();
}

Point add(const Point& a, const Point& b) {
    Point r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Point sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Point scale(const Point& a, const Rational& c) {
    Point r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

Rational dot(const Point& a, const Point& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double euclid_norm(const Point& v) {
    Rational s = dot(v, v);
    return std::sqrt(to_double(s));
}

double euclid_dist(const Point& a, const Point& b) { return euclid_norm(sub(a, b)); }

Point primitive_direction(const Point& v) {
    using boost::multiprecision::mpz_int;
    mpz_int l = 1;
    for (const auto& q : v) l = lcm(l, mpz_int(denominator(q)));
    std::vector<mpz_int> ints;
    ints.reserve(v.size());
    mpz_int g = 0;
    for (const auto& q : v) {
        mpz_int n = mpz_int(numerator(q)) * (l / mpz_int(denominator(q)));
        ints.push_back(n);
        g = gcd(g, n);
    }
    if (g == 0) throw std::invalid_argument("zero direction");
    int sign = 0;
    for (const auto& n : ints)
        if (n != 0) {
            sign = n > 0 ? 1 : -1;
            break;
        }
    Point r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rational(ints[i] * sign / g);
    return r;
}

namespace {

// Gaussian elimination to row echelon form; returns rank. Rows are modified.
int echelon(std::vector<Point>& rows) {
    if (rows.empty()) return 0;
    const size_t n = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < n && r < rows.size(); ++c) {
        size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const Rational inv = Rational(1) / rows[r][c];
        for (size_t j = c; j < n; ++j) rows[r][j] *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational f = rows[i][c];
            for (size_t j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return (int)r;
}

}  // namespace

int rank_of(const std::vector<Point>& vectors) {
    std::vector<Point> rows = vectors;
    return echelon(rows);
}

std::vector<Point> rref_basis(const std::vector<Point>& vectors) {
    std::vector<Point> rows = vectors;
    int r = echelon(rows);
    rows.resize(r);
    return rows;
}

Point project_onto_span(const Point& p, const std::vector<Point>& basis) {
    const size_t k = basis.size();
    // Solve (G c = B p) with G the Gram matrix, then return sum c_i b_i.
    std::vector<Point> aug(k, Point(k + 1));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) aug[i][j] = dot(basis[i], basis[j]);
        aug[i][k] = dot(basis[i], p);
    }
    int r = echelon(aug);
    if ((size_t)r != k) throw std::invalid_argument("basis not independent");
    Point out(p.size(), Rational(0));
    for (size_t i = 0; i < k; ++i) out = add(out, scale(basis[i], aug[i][k]));
    return out;
}

Rational gram_det(const std::vector<Point>& vectors) {
    const size_t k = vectors.size();
    std::vector<Point> g(k, Point(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) g[i][j] = dot(vectors[i], vectors[j]);
    // Fraction-free style elimination with explicit determinant tracking.
    Rational det = 1;
    for (size_t c = 0; c < k; ++c) {
        size_t pivot = c;
        while (pivot < k && g[pivot][c] == 0) ++pivot;
        if (pivot == k) return 0;
        if (pivot != c) {
            std::swap(g[pivot], g[c]);
            det = -det;
        }
        det *= g[c][c];
        const Rational inv = Rational(1) / g[c][c];
        for (size_t i = c + 1; i < k; ++i) {
            const Rational f = g[i][c] * inv;
            for (size_t j = c; j < k; ++j) g[i][j] -= f * g[c][j];
        }
    }
    return det;
}

}  // namespace chainfill
