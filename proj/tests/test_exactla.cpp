#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "planarlab/exactla.hpp"

using namespace planarlab;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<Rat>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    ExactMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    return m;
}

ExactMatrix random_matrix(std::mt19937& rng) {
    std::uniform_int_distribution<int> dim(0, 6), num(-20, 20), den(1, 5);
    ExactMatrix m(dim(rng), dim(rng));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Rat(num(rng), den(rng));
    return m;
}

bool apply_is_zero(const ExactMatrix& m, const std::vector<Rat>& v) {
    for (int i = 0; i < m.rows(); ++i) {
        Rat acc(0);
        for (int j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[j];
        if (acc != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("rank") {
    ExactMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(rank(id) == 3);

    CHECK(rank(from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}})) == 1);

    // Hilbert 3x3: determinant 1/2160, so full rank.
    ExactMatrix h(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h.at(i, j) = Rat(1, i + j + 1);
    CHECK(rank(h) == 3);
}

TEST_CASE("nullspace normal forms") {
    const SubspaceBasis n1 = nullspace(from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}));
    REQUIRE(n1.dimension() == 1);
    CHECK(n1.basis[0] == std::vector<Rat>{Rat(-2), Rat(1)});

    ExactMatrix id(2, 2);
    id.at(0, 0) = id.at(1, 1) = 1;
    CHECK(nullspace(id).dimension() == 0);

    const SubspaceBasis full = nullspace(ExactMatrix(3, 4));
    REQUIRE(full.dimension() == 4);
    for (int k = 0; k < 4; ++k) {
        for (int j = 0; j < 4; ++j) CHECK(full.basis[k][j] == (j == k ? 1 : 0));
    }
}

TEST_CASE("rref shape") {
    const RrefResult r = rref(from_rows({{Rat(0), Rat(2), Rat(4)}, {Rat(1), Rat(1), Rat(1)}}));
    REQUIRE(r.pivots == std::vector<int>{0, 1});
    CHECK(r.reduced.at(0, 0) == 1);
    CHECK(r.reduced.at(0, 1) == 0);
    CHECK(r.reduced.at(0, 2) == -1);
    CHECK(r.reduced.at(1, 1) == 1);
    CHECK(r.reduced.at(1, 2) == 2);
}

TEST_CASE("rank-nullity and kernel membership on random matrices") {
    std::mt19937 rng(20240501);
    for (int trial = 0; trial < 120; ++trial) {
        const ExactMatrix m = random_matrix(rng);
        const int rk = rank(m);
        const SubspaceBasis ns = nullspace(m);
        CHECK(rk + ns.dimension() == m.cols());
        for (const auto& v : ns.basis) CHECK(apply_is_zero(m, v));
    }
}

TEST_CASE("determinism") {
    std::mt19937 rng(42);
    const ExactMatrix m = random_matrix(rng);
    const SubspaceBasis a = nullspace(m), b = nullspace(m);
    CHECK(a.basis == b.basis);
}

TEST_CASE("solve_in_span") {
    const std::vector<std::vector<Rat>> vecs{{Rat(1), Rat(0), Rat(1)},
                                             {Rat(0), Rat(1), Rat(1)}};
    const auto hit = solve_in_span(vecs, {Rat(2), Rat(3), Rat(5)});
    REQUIRE(hit.has_value());
    CHECK(*hit == std::vector<Rat>{Rat(2), Rat(3)});
    CHECK(!solve_in_span(vecs, {Rat(1), Rat(1), Rat(3)}).has_value());
}
