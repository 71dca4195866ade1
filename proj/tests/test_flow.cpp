#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "planarlab/exprio.hpp"
#include "planarlab/flow.hpp"
#include "planarlab/presets.hpp"

using namespace planarlab;

namespace {
const double kPi = std::acos(-1.0);

double terminal_error_rotation(const IntegratorConfig& cfg) {
    const Trajectory t = integrate(presets::rotation(), {1.0, 0.0}, 2 * kPi, cfg);
    const auto s = t.states().back();
    return std::hypot(s[0] - 1.0, s[1]);
}

double terminal_error_dilation(const IntegratorConfig& cfg) {
    const Trajectory t = integrate(presets::dilation(), {1.0, 1.0}, std::log(2.0), cfg);
    const auto s = t.states().back();
    return std::hypot(s[0] - 2.0, s[1] - 2.0);
}
}  // namespace

TEST_CASE("closed-form trajectories") {
    CHECK(terminal_error_rotation({}) < 1e-8);
    CHECK(terminal_error_dilation({}) < 1e-8);

    const VectorField2 esc{parse_poly2("x^2"), Poly2{}};
    CHECK_THROWS_AS(integrate(esc, {1.0, 0.0}, 2.0, {}), BlowupError);
}

TEST_CASE("blowup time matches the closed form") {
    const VectorField2 esc{parse_poly2("x^2"), Poly2{}};
    try {
        integrate(esc, {1.0, 0.0}, 2.0, {});
        CHECK(false);
    } catch (const BlowupError&) {
        // x(t) = 1/(1-t) exceeds the 1e12 threshold only at t = 1 - 1e-12,
        // so the full trajectory up to the throw stays below the threshold.
        const Trajectory partial = integrate(esc, {1.0, 0.0}, 0.999, {});
        CHECK(partial.states().back()[0] == doctest::Approx(1000.0).epsilon(1e-6));
    }
}

TEST_CASE("tolerance scaling") {
    IntegratorConfig cfg;
    cfg.rtol = 1e-6;
    cfg.atol = 1e-8;
    double prev_rot = terminal_error_rotation(cfg);
    double prev_dil = terminal_error_dilation(cfg);
    for (int level = 0; level < 12; ++level) {
        cfg.rtol /= 2;
        cfg.atol /= 2;
        const double rot = terminal_error_rotation(cfg);
        const double dil = terminal_error_dilation(cfg);
        CHECK(rot <= prev_rot + 1e-15);
        CHECK(dil <= prev_dil + 1e-15);
        prev_rot = rot;
        prev_dil = dil;
    }
}

TEST_CASE("trajectory invariants and dense output") {
    IntegratorConfig cfg;
    cfg.rtol = 1e-12;
    cfg.atol = 1e-10;
    const Trajectory traj = integrate(presets::rotation(), {1.0, 0.0}, 5.0, cfg);

    const auto& times = traj.times();
    for (std::size_t i = 1; i < times.size(); ++i) CHECK(times[i] > times[i - 1]);
    for (std::size_t i = 0; i < times.size(); ++i) {
        const auto dense = traj.state_at(times[i]);
        CHECK(std::abs(dense[0] - traj.states()[i][0]) <= cfg.atol);
        CHECK(std::abs(dense[1] - traj.states()[i][1]) <= cfg.atol);
    }
    CHECK_THROWS_AS(traj.state_at(5.1), std::out_of_range);
    CHECK_THROWS_AS(traj.state_at(-0.1), std::out_of_range);

    // dense interpolation vs a fresh integration stopped at the query time
    std::mt19937 rng(20240404);
    std::uniform_real_distribution<double> u(1e-3, 5.0 - 1e-3);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double t = u(rng);
        const auto dense = traj.state_at(t);
        const auto fresh = integrate(presets::rotation(), {1.0, 0.0}, t, cfg).states().back();
        worst = std::max({worst, std::abs(dense[0] - fresh[0]), std::abs(dense[1] - fresh[1])});
    }
    CHECK(worst <= 10 * cfg.atol);
}

TEST_CASE("determinism") {
    const Trajectory a = integrate(presets::van_der_pol(), {2.0, 1.0}, 10.0, {});
    const Trajectory b = integrate(presets::van_der_pol(), {2.0, 1.0}, 10.0, {});
    REQUIRE(a.states().size() == b.states().size());
    for (std::size_t i = 0; i < a.states().size(); ++i) {
        CHECK(a.states()[i][0] == b.states()[i][0]);
        CHECK(a.states()[i][1] == b.states()[i][1]);
    }
}

TEST_CASE("event location") {
    const EventSpec full_turn = EventSpec::polar_angle_progress(-2 * kPi);
    const EventResult rot = flow_to_event(presets::rotation(), {1.0, 0.0}, full_turn);
    CHECK(std::abs(rot.time - 2 * kPi) < 1e-9);

    const EventResult half = flow_to_event(presets::example1_y(), {1.0, 0.0}, full_turn);
    CHECK(std::abs(half.time - kPi) < 1e-8);  // theta-dot = -2 on the circle

    CHECK_THROWS_AS(flow_to_event(presets::dilation(), {1.0, 0.0},
                                  EventSpec::coordinate_crossing(1, 0.0, +1)),
                    NoEventError);

    const EventSpec circle = EventSpec::poly_zero(parse_poly2("x^2+y^2-4"));
    const EventResult dil = flow_to_event(presets::dilation(), {1.0, 0.0}, circle);
    CHECK(std::abs(dil.time - std::log(2.0)) < 1e-9);
}

TEST_CASE("event idempotence") {
    const EventSpec up = EventSpec::coordinate_crossing(1, 0.0, +1);
    const EventResult hit = flow_to_event(presets::rotation(), {1.0, 0.0}, up);
    CHECK(std::abs(hit.time - kPi) < 1e-9);

    // run time backwards from the located point; the mirrored crossing is
    // immediate
    const EventSpec down = EventSpec::coordinate_crossing(1, 0.0, -1);
    const EventResult back = flow_to_event(-presets::rotation(), hit.point, down);
    CHECK(std::abs(back.time) <= 1e-9);
}

TEST_CASE("quadrature along trajectories") {
    const double circ = quadrature_along(presets::rotation(), {1.0, 0.0},
                                         parse_poly2("x^2"), 2 * kPi);
    CHECK(std::abs(circ - kPi) < 1e-8);

    CHECK(quadrature_along(presets::van_der_pol(), {1.0, 0.5}, Poly2{}, 3.0) == 0.0);

    // the unit circle is repelling, so the drift must be kept below what the
    // factor e^{4 pi} amplifies past 1e-6
    IntegratorConfig tight;
    tight.rtol = 1e-13;
    tight.atol = 1e-15;
    const double divi = quadrature_along(presets::example1_x(), {1.0, 0.0},
                                         divergence(presets::example1_x()), 2 * kPi, tight);
    CHECK(std::abs(divi - 4 * kPi) < 1e-6);
}
