#pragma once

#include <optional>
#include <string>

#include "planarlab/polyalg.hpp"

namespace planarlab::presets {

// (y + x(x^2+y^2-1), -x + y(x^2+y^2-1)): unstable unit-circle limit cycle.
VectorField2 example1_x();

// (2y + x(x^2+y^2-1), -2x + y(x^2+y^2-1)): commutes with example1_x and
// shares the cycle with half the period.
VectorField2 example1_y();

// example1_x with the radial part mirrored: stable unit-circle cycle.
VectorField2 example1_x_mirrored();

VectorField2 rotation();  // (y, -x)
VectorField2 dilation();  // (x, y)

// Lienard field with F(x) = x^3/3 - x (van der Pol, unit parameter).
VectorField2 van_der_pol();

// x^2 + y^2 + 1: the positive rescaling weight used with the rotation field.
Poly2 radius_square_plus_one();

// CLI preset lookup: example1-x, example1-y, vdp, rotation, dilation,
// homogeneous-n<k>.  Returns nullopt for unknown names, throws
// OddExponentError for homogeneous-n<odd>.
std::optional<VectorField2> field_by_name(const std::string& name);

}  // namespace planarlab::presets
