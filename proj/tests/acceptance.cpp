// Acceptance driver: one PASS/FAIL line per criterion A1-A9.

#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "planarlab/cycles.hpp"
#include "planarlab/exactla.hpp"
#include "planarlab/exprio.hpp"
#include "planarlab/flow.hpp"
#include "planarlab/presets.hpp"
#include "planarlab/verification.hpp"
#include "test_util.hpp"

using namespace planarlab;

namespace {

const double kPi = std::acos(-1.0);

bool property_suites() {
    bool ok = true;
    std::mt19937 rng(20250823);

    // bracket algebra, randomized and exact
    for (int i = 0; i < 40 && ok; ++i) {
        const VectorField2 x = testutil::random_field(rng, 4);
        const VectorField2 y = testutil::random_field(rng, 4);
        const VectorField2 z = testutil::random_field(rng, 3);
        const Poly2 g = testutil::random_poly2(rng, 3);
        ok = ok && (lie_bracket(x, y) + lie_bracket(y, x)).is_zero();
        ok = ok && (lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
                    lie_bracket(z, lie_bracket(x, y)))
                       .is_zero();
        ok = ok && lie_bracket(x, scale_field(g, y)) ==
                       scale_field(directional_derivative(x, g), y) +
                           scale_field(g, lie_bracket(x, y));
    }

    // exact rank-nullity
    for (int trial = 0; trial < 60 && ok; ++trial) {
        std::uniform_int_distribution<int> dim(0, 6), num(-20, 20), den(1, 5);
        ExactMatrix m(dim(rng), dim(rng));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Rat(num(rng), den(rng));
        ok = ok && rank(m) + nullspace(m).dimension() == m.cols();
    }

    // parser round trip
    for (int i = 0; i < 1000 && ok; ++i) {
        const Poly2 p = testutil::random_poly2(rng, 6);
        ok = ok && parse_poly2(format_poly(p)) == p;
    }

    // closed-form flows
    {
        const auto rot = integrate(presets::rotation(), {1.0, 0.0}, 2 * kPi).states().back();
        ok = ok && std::hypot(rot[0] - 1.0, rot[1]) < 1e-8;
        const auto dil =
            integrate(presets::dilation(), {1.0, 1.0}, std::log(2.0)).states().back();
        ok = ok && std::hypot(dil[0] - 2.0, dil[1] - 2.0) < 1e-8;
        try {
            integrate(VectorField2{parse_poly2("x^2"), Poly2{}}, {1.0, 0.0}, 2.0);
            ok = false;
        } catch (const BlowupError&) {
        }
    }

    // polar vs Cartesian return maps
    {
        const PolarForm form = polar_reduce(presets::example1_x());
        std::uniform_real_distribution<double> u(0.3, 0.95);
        for (int i = 0; i < 20 && ok; ++i) {
            const double r0 = u(rng);
            ok = ok &&
                 std::abs(polar_return(form, r0, -1) - return_map(presets::example1_x(), r0)) <=
                     1e-8;
        }
    }

    // parallel scan determinism
    {
        const CycleScan seq = find_cycles(presets::van_der_pol(), 0.5, 3.0, {}, false);
        const CycleScan par = find_cycles(presets::van_der_pol(), 0.5, 3.0, {}, true);
        ok = ok && seq.cycles.size() == par.cycles.size();
        for (std::size_t i = 0; ok && i < seq.cycles.size(); ++i)
            ok = seq.cycles[i].radius == par.cycles[i].radius &&
                 seq.cycles[i].multiplier == par.cycles[i].multiplier &&
                 seq.cycles[i].samples == par.cycles[i].samples;
    }

    return ok;
}

}  // namespace

int main() {
    const auto results = verification::run_all();

    // aggregate the detailed checks by their A<n> prefix
    std::map<std::string, bool> by_criterion;
    for (const auto& r : results) {
        const std::string key = r.id.substr(0, r.id.find('.'));
        auto [it, inserted] = by_criterion.emplace(key, r.pass);
        if (!inserted) it->second = it->second && r.pass;
    }

    bool all = true;
    for (int n = 1; n <= 8; ++n) {
        const std::string key = "A" + std::to_string(n);
        const auto it = by_criterion.find(key);
        const bool pass = it != by_criterion.end() && it->second;
        all = all && pass;
        std::printf("%s %s\n", key.c_str(), pass ? "PASS" : "FAIL");
    }

    const bool a9 = property_suites();
    all = all && a9;
    std::printf("A9 %s\n", a9 ? "PASS" : "FAIL");

    return all ? 0 : 1;
}
