#include "planarlab/presets.hpp"

namespace planarlab::presets {

namespace {

Poly2 radial_part() {  // x^2 + y^2 - 1
    Poly2 s;
    s.add_term(Mono2(2, 0), Rat(1));
    s.add_term(Mono2(0, 2), Rat(1));
    s.add_term(Mono2(0, 0), Rat(-1));
    return s;
}

VectorField2 rotation_scaled(const Rat& omega, const Poly2& radial) {
    const Poly2 x = Poly2::variable(kVarX), y = Poly2::variable(kVarY);
    return {omega * y + x * radial, -(omega * x) + y * radial};
}

}  // namespace

VectorField2 example1_x() { return rotation_scaled(Rat(1), radial_part()); }

VectorField2 example1_y() { return rotation_scaled(Rat(2), radial_part()); }

VectorField2 example1_x_mirrored() { return rotation_scaled(Rat(1), -radial_part()); }

VectorField2 rotation() { return {Poly2::variable(kVarY), -Poly2::variable(kVarX)}; }

VectorField2 dilation() { return {Poly2::variable(kVarX), Poly2::variable(kVarY)}; }

VectorField2 van_der_pol() {
    Poly1 f;
    f.add_term(3, Rat(1, 3));
    f.add_term(1, Rat(-1));
    return make_lienard(f);
}

Poly2 radius_square_plus_one() {
    Poly2 f;
    f.add_term(Mono2(2, 0), Rat(1));
    f.add_term(Mono2(0, 2), Rat(1));
    f.add_term(Mono2(0, 0), Rat(1));
    return f;
}

std::optional<VectorField2> field_by_name(const std::string& name) {
    if (name == "example1-x") return example1_x();
    if (name == "example1-y") return example1_y();
    if (name == "vdp") return van_der_pol();
    if (name == "rotation") return rotation();
    if (name == "dilation") return dilation();
    constexpr const char* kPrefix = "homogeneous-n";
    if (name.rfind(kPrefix, 0) == 0) {
        const std::string tail = name.substr(std::string(kPrefix).size());
        if (!tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos)
            return make_homogeneous_center(std::stoi(tail));
    }
    return std::nullopt;
}

}  // namespace planarlab::presets
