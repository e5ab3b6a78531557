#pragma once

#include "chainfill/chain.hpp"

namespace chainfill {

/**
 * Desk-scale test-cycle families. Every generated chain is verified to be a
 * cycle before it is returned; coordinates are snapped to rationals.
 */
struct GeneratorSpec {
    enum class Family {
        RegularPolygon,    // n, radius
        PerturbedPolygon,  // n, radius, noise
        MultiLoop,         // count unit squares spaced along the x axis
        PolyhedralSphere,  // octahedron subdivided `level` times, projected
        ThinRectangle,     // aspect x 1 rectangle loop
        FigureEight        // two unit loops sharing one vertex
    };

    Family family = Family::RegularPolygon;
    int n = 8;
    Rational radius = 1;
    double noise = 0.0;
    int count = 2;
    Rational spacing = 100;
    int level = 0;
    Rational aspect = 100;
    NormSpec space = NormSpec::euclidean(2);
};

Chain generate(const GeneratorSpec& spec, unsigned seed = 1);

// Named-family convenience used by the CLI: regular_polygon, perturbed_polygon,
// multi_loop, polyhedral_sphere, thin_rectangle, figure_eight.
GeneratorSpec::Family family_from_name(const std::string& name);

}  // namespace chainfill
