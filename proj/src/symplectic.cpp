#include "planarlab/symplectic.hpp"

namespace planarlab {

Poly4 embed_plane(const Poly2& p) {
    Poly4 r;
    for (const auto& [m, c] : p.terms()) r.add_term(Mono4(m.e[0], m.e[1], 0, 0), c);
    return r;
}

LiftedHamiltonian lift(const VectorField2& x) {
    Poly4 h = Poly4::variable(kVarZ) * embed_plane(x.p) + Poly4::variable(kVarW) * embed_plane(x.q);
    return {std::move(h), x};
}

Poly4 moment(const VectorField2& y) { return lift(y).h; }

Poly4 poisson(const Poly4& f, const Poly4& g) {
    return f.partial(kVarX) * g.partial(kVarZ) + f.partial(kVarY) * g.partial(kVarW) -
           f.partial(kVarZ) * g.partial(kVarX) - f.partial(kVarW) * g.partial(kVarY);
}

Poly4 remark_defect(const VectorField2& x, const VectorField2& y) {
    const VectorField2 br = lie_bracket(x, y);
    return poisson(lift(x).h, moment(y)) + Poly4::variable(kVarZ) * embed_plane(br.p) +
           Poly4::variable(kVarW) * embed_plane(br.q);
}

int gradient_rank_at(const Poly4& f, const Poly4& g, const std::array<Rat, 4>& point) {
    ExactMatrix jac(2, 4);
    for (int v = 0; v < 4; ++v) {
        jac.at(0, v) = f.partial(v).evaluate(point);
        jac.at(1, v) = g.partial(v).evaluate(point);
    }
    return rank(jac);
}

IntegrabilityCertificate integrability_certificate(const VectorField2& x, const VectorField2& y) {
    IntegrabilityCertificate cert;
    cert.h = lift(x).h;
    cert.g = moment(y);
    cert.poisson_commutes = poisson(cert.h, cert.g).is_zero();

    // Small deterministic grid of rational sample points away from the origin.
    static const Rat vals[] = {Rat(1), Rat(-1), Rat(1, 2), Rat(-2), Rat(3, 2)};
    for (const Rat& a : vals)
        for (const Rat& b : vals) {
            const int r = gradient_rank_at(cert.h, cert.g, {a, b, Rat(1), Rat(1, 3)});
            if (r > cert.max_gradient_rank) cert.max_gradient_rank = r;
            const int r2 = gradient_rank_at(cert.h, cert.g, {a, b, Rat(-1, 2), Rat(2)});
            if (r2 > cert.max_gradient_rank) cert.max_gradient_rank = r2;
        }
    return cert;
}

}  // namespace planarlab
