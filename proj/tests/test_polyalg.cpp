#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planarlab/exprio.hpp"
#include "planarlab/polyalg.hpp"
#include "planarlab/presets.hpp"
#include "test_util.hpp"

using namespace planarlab;
using testutil::random_field;
using testutil::random_poly2;

namespace {
Poly2 P(const std::string& s) { return parse_poly2(s); }
}  // namespace

TEST_CASE("ring operations") {
    CHECK((P("x^2") + P("-x^2")).is_zero());
    CHECK(P("x+y") * P("x-y") == P("x^2-y^2"));
    CHECK(P("x^2*y").partial(kVarX) == P("2*x*y"));
    CHECK(P("0").degree() == kZeroDegree);
    CHECK(P("x^3+y").degree() == 3);
}

TEST_CASE("lie bracket") {
    const VectorField2 x = presets::example1_x();
    const VectorField2 y = presets::example1_y();
    CHECK(lie_bracket(x, y).is_zero());
    CHECK(lie_bracket(x, x).is_zero());

    const VectorField2 rot = presets::rotation();
    const VectorField2 sq{P("x^2"), P("0")};
    CHECK(lie_bracket(rot, sq) == VectorField2(P("2*x*y"), P("x^2")));
}

TEST_CASE("divergence") {
    CHECK(divergence(presets::example1_x()) == P("4*x^2 + 4*y^2 - 2"));
    CHECK(divergence(presets::rotation()).is_zero());
    CHECK(divergence(presets::dilation()) == P("2"));
}

TEST_CASE("field rescaling") {
    const Poly2 f = presets::radius_square_plus_one();
    const VectorField2 rot = presets::rotation();
    const VectorField2 scaled = scale_field(f, rot);
    CHECK(scaled.p == f * rot.p);
    CHECK(scaled.q == f * rot.q);
    CHECK(scale_field(P("1"), rot) == rot);
    CHECK(lie_bracket(rot, scaled).is_zero());  // rot.grad(f) = 0
}

TEST_CASE("directional derivative") {
    CHECK(directional_derivative(presets::rotation(), P("x^2+y^2")).is_zero());
    CHECK(directional_derivative(presets::dilation(), P("x^2*y")) == P("3*x^2*y"));
    CHECK(directional_derivative(presets::example1_x(), P("x^2+y^2")) ==
          P("2") * P("x^2+y^2") * P("x^2+y^2-1"));
}

TEST_CASE("exact evaluation") {
    CHECK(evaluate(P("x^2+y^2-1"), Rat(1), Rat(0)) == 0);
    CHECK(evaluate(P("x^2+y^2-1"), Rat(1, 2), Rat(1, 2)) == Rat(-1, 2));
    CHECK(evaluate(presets::example1_x().p, Rat(0), Rat(1)) == 1);
}

TEST_CASE("Lienard constructor") {
    Poly1 f;
    f.add_term(3, Rat(1, 3));
    f.add_term(1, Rat(-1));
    CHECK(make_lienard(f) == VectorField2(P("y - 1/3*x^3 + x"), P("-x")));
    CHECK(make_lienard(Poly1{}) == presets::rotation());
    Poly1 g;
    g.add_term(2, Rat(1));
    CHECK(make_lienard(g) == VectorField2(P("y - x^2"), P("-x")));
}

TEST_CASE("homogeneous center constructor") {
    CHECK(make_homogeneous_center(0) == presets::rotation());
    CHECK(make_homogeneous_center(2) ==
          VectorField2(P("y*(x^2+y^2)"), P("-x*(x^2+y^2)")));
    CHECK_THROWS_AS(make_homogeneous_center(3), OddExponentError);
    CHECK(make_homogeneous_center(4).degree() == 5);
}

TEST_CASE("bracket antisymmetry on random fields") {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 60; ++i) {
        const VectorField2 x = random_field(rng, 4), y = random_field(rng, 4);
        CHECK((lie_bracket(x, y) + lie_bracket(y, x)).is_zero());
    }
}

TEST_CASE("Jacobi identity on random triples") {
    std::mt19937 rng(7);
    for (int i = 0; i < 40; ++i) {
        const VectorField2 x = random_field(rng, 3), y = random_field(rng, 3),
                           z = random_field(rng, 3);
        const VectorField2 sum = lie_bracket(x, lie_bracket(y, z)) +
                                 lie_bracket(y, lie_bracket(z, x)) +
                                 lie_bracket(z, lie_bracket(x, y));
        CHECK(sum.is_zero());
    }
}

TEST_CASE("Leibniz rule for scaled fields") {
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        const VectorField2 x = random_field(rng, 3), y = random_field(rng, 3);
        const Poly2 g = random_poly2(rng, 3);
        const VectorField2 lhs = lie_bracket(x, scale_field(g, y));
        const VectorField2 rhs = scale_field(directional_derivative(x, g), y) +
                                 scale_field(g, lie_bracket(x, y));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("directional derivative is a derivation") {
    std::mt19937 rng(13);
    for (int i = 0; i < 40; ++i) {
        const VectorField2 x = random_field(rng, 3);
        const Poly2 g = random_poly2(rng, 3), h = random_poly2(rng, 3);
        CHECK(directional_derivative(x, g * h) ==
              directional_derivative(x, g) * h + g * directional_derivative(x, h));
    }
}

TEST_CASE("rescaling identity") {
    std::mt19937 rng(17);
    for (int i = 0; i < 40; ++i) {
        const VectorField2 x = random_field(rng, 3);
        const Poly2 f = random_poly2(rng, 3);
        CHECK(lie_bracket(x, scale_field(f, x)) ==
              scale_field(directional_derivative(x, f), x));
    }
}
