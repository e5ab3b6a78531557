#include <iostream>
#include <cmath>
#include "chainfill/growth.hpp"
#include "chainfill/null_test.hpp"
using namespace chainfill;
Rational R(long long a, long long b=1){ return Rational(a,b); }
Chain square_loop(NormSpec sp){
    Chain sq(1, sp);
    sq.add({{R(-1),R(-1)},{R(1),R(-1)}},1);
    sq.add({{R(1),R(-1)},{R(1),R(1)}},1);
    sq.add({{R(1),R(1)},{R(-1),R(1)}},1);
    sq.add({{R(-1),R(1)},{R(-1),R(-1)}},1);
    return sq;
}
int main() {
    auto E2 = NormSpec::euclidean(2);
    // unit segment from endpoint: beta = min(r,1)
    Chain seg(1, E2);
    seg.add({{R(0),R(0)},{R(1),R(0)}}, 1);
    auto g = growth_function(seg, {R(0),R(0)});
    std::cout << "beta(0.5)=" << g.eval(0.5) << " beta(2)=" << g.eval(2)
              << " r0(F=1,k=1)=" << g.critical_radius(1,1) << "\n";
    // square loop euclid
    auto gs = growth_function(square_loop(E2), {R(0),R(0)});
    std::cout << "sq beta(1)=" << gs.eval(1) << " beta(sqrt2)=" << gs.eval(std::sqrt(2.0))
              << " beta(1.2)=" << gs.eval(1.2) << " total=" << gs.total_mass() << "\n";
    std::cout << "deriv(1.2)=" << gs.right_derivative(1.2)
              << " closed form=" << 8*1.2/std::sqrt(1.2*1.2-1) << "\n";
    // linf square: sides on sphere r=1 -> jump
    std::vector<Point> vs = {{R(1),R(0)},{R(0),R(1)},{R(-1),R(0)},{R(0),R(-1)},
                             {R(1),R(1)},{R(-1),R(1)},{R(-1),R(-1)},{R(1),R(-1)}};
    auto Linf = NormSpec::polytope(2, {{R(1),R(1)},{R(-1),R(1)},{R(-1),R(-1)},{R(1),R(-1)}});
    auto gl = growth_function(square_loop(Linf), {R(0),R(0)});
    std::cout << "linf beta(0.999)=" << gl.eval(0.999) << " beta(1)=" << gl.eval(1)
              << " jumps=" << gl.jump_radii().size() << " total=" << gl.total_mass() << "\n";
    // polytope exact quadratic k=2: triangle in linf
    Chain tri(2, Linf);
    tri.add({{R(0),R(0)},{R(1),R(0)},{R(0),R(1)}},1);
    auto gt = growth_function(tri, {R(0),R(0)});
    std::cout << "tri linf mass=" << gt.total_mass() << " (expect pi/8=" << M_PI/8 << ")\n";
    std::cout << "tri beta(1/2)=" << gt.eval(0.5) << " expect " << (M_PI/4)*(0.25 - 2*0.125*0.5*0.5) << "... ";
    // {max(|x|,|y|) <= 1/2} cap of the triangle: area = 1/4 - overlap... direct: region = [0,.5]^2 ∩ tri = square half? area{x,y>=0,x+y<=1, x<=.5,y<=.5} = 1/4 - ... compute: unit right triangle ∩ square [0,.5]^2 = square minus corner triangle ((.5,.5) above line x+y=1? .5+.5=1 on line -> full square 1/4... wait x+y<=1 holds on entire square (max sum=1). so area=1/4
    std::cout << "(direct: density*1/4 = " << (M_PI/4)*0.25 << ")\n";
    auto Esp = NormSpec::euclidean(2);
    return 0;
}
