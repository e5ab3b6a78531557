#include "chainfill/generators.hpp"

#include <cmath>
#include <map>
#include <random>

#include "chainfill/errors.hpp"
#include "chainfill/null_test.hpp"

namespace chainfill {

namespace {

constexpr double kSnapGrid = 1e-12;

Point snap2(double x, double y) { return {snap_to_grid(x, kSnapGrid), snap_to_grid(y, kSnapGrid)}; }

Chain loop_from_points(const std::vector<Point>& pts, const NormSpec& space) {
    Chain out(1, space);
    for (size_t i = 0; i < pts.size(); ++i) out.add({pts[i], pts[(i + 1) % pts.size()]}, 1);
    return out;
}

Chain octahedron(const NormSpec& space) {
    const Rational one(1);
    const Point px{one, 0, 0}, mx{-one, 0, 0}, py{0, one, 0}, my{0, -one, 0}, pz{0, 0, one},
        mz{0, 0, -one};
    Chain out(2, space);
    // outward-oriented faces
    const std::vector<std::array<Point, 3>> faces = {
        {px, py, pz}, {py, mx, pz}, {mx, my, pz}, {my, px, pz},
        {py, px, mz}, {mx, py, mz}, {my, mx, mz}, {px, my, mz}};
    for (const auto& f : faces) out.add({f[0], f[1], f[2]}, 1);
    return out;
}

Point project_to_sphere(const Point& p) {
    const double len = euclid_norm(p);
    return {snap_to_grid(to_double(p[0]) / len, kSnapGrid),
            snap_to_grid(to_double(p[1]) / len, kSnapGrid),
            snap_to_grid(to_double(p[2]) / len, kSnapGrid)};
}

}  // namespace

GeneratorSpec::Family family_from_name(const std::string& name) {
    static const std::map<std::string, GeneratorSpec::Family> names = {
        {"regular_polygon", GeneratorSpec::Family::RegularPolygon},
        {"perturbed_polygon", GeneratorSpec::Family::PerturbedPolygon},
        {"multi_loop", GeneratorSpec::Family::MultiLoop},
        {"polyhedral_sphere", GeneratorSpec::Family::PolyhedralSphere},
        {"thin_rectangle", GeneratorSpec::Family::ThinRectangle},
        {"figure_eight", GeneratorSpec::Family::FigureEight}};
    auto it = names.find(name);
    if (it == names.end()) throw InputError("unknown generator family: " + name);
    return it->second;
}

Chain generate(const GeneratorSpec& spec, unsigned seed) {
    using Family = GeneratorSpec::Family;
    Chain out(1, spec.space);
    switch (spec.family) {
        case Family::RegularPolygon:
        case Family::PerturbedPolygon: {
            if (spec.n < 3) throw InputError("polygon needs n >= 3");
            if (spec.radius <= 0) throw InputError("polygon radius must be positive");
            if (spec.space.dim() != 2) throw InputError("polygons live in ambient dimension 2");
            std::mt19937_64 rng(seed);
            std::uniform_real_distribution<double> jitter(-1.0, 1.0);
            const double r0 = to_double(spec.radius);
            std::vector<Point> pts;
            for (int i = 0; i < spec.n; ++i) {
                double rad = r0;
                if (spec.family == Family::PerturbedPolygon) {
                    if (!(spec.noise >= 0 && spec.noise < 1))
                        throw InputError("perturbed polygon noise must lie in [0, 1)");
                    rad *= 1.0 + spec.noise * jitter(rng);
                }
                const double a = 2 * M_PI * i / spec.n;
                pts.push_back(snap2(rad * std::cos(a), rad * std::sin(a)));
            }
            out = loop_from_points(pts, spec.space);
            break;
        }
        case Family::MultiLoop: {
            if (spec.count < 1) throw InputError("multi_loop needs count >= 1");
            if (spec.spacing <= 2) throw InputError("multi_loop spacing must exceed the loop size");
            if (spec.space.dim() != 2) throw InputError("multi_loop lives in ambient dimension 2");
            for (int i = 0; i < spec.count; ++i) {
                const Rational x0 = spec.spacing * i;
                const Rational one(1);
                std::vector<Point> sq = {{x0, 0}, {x0 + one, 0}, {x0 + one, one}, {x0, one}};
                out.add_chain(loop_from_points(sq, spec.space));
            }
            break;
        }
        case Family::PolyhedralSphere: {
            if (spec.level < 0 || spec.level > 5) throw InputError("sphere level in [0, 5]");
            if (spec.space.dim() != 3)
                throw InputError("polyhedral spheres live in ambient dimension 3");
            Chain sphere = octahedron(spec.space);
            for (int l = 0; l < spec.level; ++l) {
                Chain next(2, spec.space);
                for (const auto& [s, w] : sphere.terms()) {
                    // midpoints are functions of the (unordered) edge alone,
                    // so neighbouring faces share them exactly
                    const Point& a = s.verts[0];
                    const Point& b = s.verts[1];
                    const Point& c = s.verts[2];
                    const Point mab = project_to_sphere(scale(add(a, b), Rational(1, 2)));
                    const Point mbc = project_to_sphere(scale(add(b, c), Rational(1, 2)));
                    const Point mca = project_to_sphere(scale(add(c, a), Rational(1, 2)));
                    next.add({a, mab, mca}, w);
                    next.add({mab, b, mbc}, w);
                    next.add({mca, mbc, c}, w);
                    next.add({mab, mbc, mca}, w);
                }
                sphere = std::move(next);
            }
            out = std::move(sphere);
            break;
        }
        case Family::ThinRectangle: {
            if (spec.aspect <= 0) throw InputError("rectangle aspect must be positive");
            if (spec.space.dim() != 2)
                throw InputError("thin_rectangle lives in ambient dimension 2");
            const Rational a = spec.aspect, one(1);
            out = loop_from_points({{Rational(0), 0}, {a, 0}, {a, one}, {Rational(0), one}},
                                   spec.space);
            break;
        }
        case Family::FigureEight: {
            if (spec.space.dim() != 2) throw InputError("figure_eight lives in ambient dimension 2");
            const Rational one(1);
            out = loop_from_points({{Rational(0), 0}, {one, 0}, {one, one}, {Rational(0), one}},
                                   spec.space);
            out.add_chain(loop_from_points(
                {{Rational(0), 0}, {-one, 0}, {-one, -one}, {Rational(0), -one}}, spec.space));
            break;
        }
    }
    if (!is_cycle(out)) throw InvariantViolation("generator produced a non-cycle");
    return out;
}

}  // namespace chainfill
