#include "planarlab/polyalg.hpp"

namespace planarlab {

VectorField2 lie_bracket(const VectorField2& x, const VectorField2& y) {
    const Poly2 &p = x.p, &q = x.q, &r = y.p, &s = y.q;
    Poly2 first = p * r.partial(kVarX) + q * r.partial(kVarY)  //
                  - r * p.partial(kVarX) - s * p.partial(kVarY);
    Poly2 second = p * s.partial(kVarX) + q * s.partial(kVarY)  //
                   - r * q.partial(kVarX) - s * q.partial(kVarY);
    return {std::move(first), std::move(second)};
}

Poly2 divergence(const VectorField2& x) { return x.p.partial(kVarX) + x.q.partial(kVarY); }

VectorField2 scale_field(const Poly2& f, const VectorField2& x) { return {f * x.p, f * x.q}; }

Poly2 directional_derivative(const VectorField2& x, const Poly2& g) {
    return x.p * g.partial(kVarX) + x.q * g.partial(kVarY);
}

Rat evaluate(const Poly2& p, const Rat& px, const Rat& py) { return p.evaluate({px, py}); }

VectorField2 make_lienard(const Poly1& f) {
    Poly2 p = Poly2::variable(kVarY) - f.as_poly2_in_x();
    Poly2 q = -Poly2::variable(kVarX);
    return {std::move(p), std::move(q)};
}

VectorField2 make_homogeneous_center(int n) {
    if (n < 0 || n % 2 != 0) throw OddExponentError(n);
    Poly2 s;
    s.add_term(Mono2(2, 0), Rat(1));
    s.add_term(Mono2(0, 2), Rat(1));
    Poly2 sk = poly_pow(s, n / 2);
    return {sk * Poly2::variable(kVarY), -(sk * Poly2::variable(kVarX))};
}

}  // namespace planarlab
