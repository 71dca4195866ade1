#pragma once

#include <random>

#include "planarlab/polyalg.hpp"

namespace planarlab::testutil {

// Random sparse polynomial with small rational coefficients; term count scales
// with the degree bound so zero and near-zero polynomials appear too.
inline Poly2 random_poly2(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> terms(0, 2 * max_degree + 2);
    Poly2 p;
    const int n = terms(rng);
    for (int t = 0; t < n; ++t) {
        const int d = deg(rng);
        std::uniform_int_distribution<int> split(0, d);
        const int i = split(rng);
        p.add_term(Mono2(i, d - i), Rat(num(rng), den(rng)));
    }
    return p;
}

inline VectorField2 random_field(std::mt19937& rng, int max_degree) {
    return {random_poly2(rng, max_degree), random_poly2(rng, max_degree)};
}

inline Poly4 random_poly4(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> terms(0, 8);
    Poly4 p;
    const int n = terms(rng);
    for (int t = 0; t < n; ++t) {
        int left = deg(rng);
        Mono4 m;
        for (int v = 0; v < 4 && left > 0; ++v) {
            std::uniform_int_distribution<int> split(0, left);
            m.e[v] = split(rng);
            left -= m.e[v];
        }
        p.add_term(m, Rat(num(rng), den(rng)));
    }
    return p;
}

}  // namespace planarlab::testutil
