#pragma once

#include <array>
#include <vector>

#include "planarlab/exactla.hpp"
#include "planarlab/polyalg.hpp"

namespace planarlab {

// Embeds a planar polynomial into the (x, y, z, w) ring.
Poly4 embed_plane(const Poly2& p);

// H = z P + w Q; linear in the momenta (z, w) by construction.
struct LiftedHamiltonian {
    Poly4 h;
    VectorField2 source;
};

LiftedHamiltonian lift(const VectorField2& x);

// G = z R + w S for Y = (R, S).
Poly4 moment(const VectorField2& y);

// Canonical bracket with pairing (x, z), (y, w):
// {F, G} = F_x G_z + F_y G_w - F_z G_x - F_w G_y.
Poly4 poisson(const Poly4& f, const Poly4& g);

// {H, G} + z [X,Y]_1 + w [X,Y]_2; identically zero for all planar X, Y, which
// ties Poisson commutation of the lifts to commutation of the fields.
Poly4 remark_defect(const VectorField2& x, const VectorField2& y);

// Rank of the gradient matrix of (F, G) at a rational point; rank 2 certifies
// functional independence at that point.
int gradient_rank_at(const Poly4& f, const Poly4& g, const std::array<Rat, 4>& point);

// Integrability certificate for the lift of X against the moment of Y:
// {H, G} = 0 plus generic independence evidence from rational sample points.
struct IntegrabilityCertificate {
    Poly4 h;
    Poly4 g;
    bool poisson_commutes = false;
    int max_gradient_rank = 0;  // over the sample points
};

IntegrabilityCertificate integrability_certificate(const VectorField2& x, const VectorField2& y);

}  // namespace planarlab
