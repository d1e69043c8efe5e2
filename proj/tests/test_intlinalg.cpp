#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/intlinalg.hpp"

using namespace hecke;

namespace {
IntMatrix make(std::vector<std::vector<long>> rows) {
    IntMatrix m;
    for (auto& r : rows) {
        std::vector<Int> row;
        for (long v : r) row.emplace_back(v);
        m.push_back(std::move(row));
    }
    return m;
}
}  // namespace

TEST_CASE("hermite normal form") {
    IntMatrix a = make({{2, 0}, {1, 3}});
    HnfResult h = hermite_normal_form(a);
    CHECK(h.rank == 2);
    // H = U * A
    CHECK(int_mat_mul(h.u, a) == h.h);
    // echelon with positive pivots, reduced above
    CHECK(h.h[0][0] > 0);
    CHECK(h.h[1][0] == 0);
    CHECK(h.h[0][1] >= 0);
    CHECK(h.h[0][1] < h.h[1][1]);
    CHECK(int_mat_det(a) == 6);
}

TEST_CASE("smith normal form with transforms") {
    IntMatrix a = make({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    SnfResult s = smith_normal_form(a);
    // D = U A V
    CHECK(int_mat_mul(int_mat_mul(s.u, a), s.v) == s.d);
    // divisibility chain
    CHECK(s.d[0][0] > 0);
    CHECK(s.d[1][1] % s.d[0][0] == 0);
    CHECK(s.d[2][2] % s.d[1][1] == 0);
    // V * V^{-1} = I
    CHECK(int_mat_mul(s.v, s.v_inv) == int_identity(3));
}

TEST_CASE("left kernel and solving") {
    IntMatrix a = make({{1, 2}, {2, 4}});
    IntMatrix k = left_kernel(a);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] * 1 + k[0][1] * 2 == 0);

    auto sol = solve_left(make({{2, 0}, {0, 3}}), {Int(4), Int(9)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 2);
    CHECK((*sol)[1] == 3);
    CHECK(!solve_left(make({{2, 0}, {0, 3}}), {Int(1), Int(0)}).has_value());
}

TEST_CASE("modular solve") {
    // x + y = 1, x - y = 1 (mod 4) -> x=1,y=0 works (2x=2 mod 4 has x=1 or 3)
    IntMatrix a = make({{1, 1}, {1, -1}});
    auto x = solve_mod(a, {Int(1), Int(1)}, Int(4));
    REQUIRE(x.has_value());
    CHECK(((*x)[0] + (*x)[1]) % 4 == 1);
    CHECK((((*x)[0] - (*x)[1]) % 4 + 4) % 4 == 1);
    // 2x = 1 mod 4: unsolvable
    CHECK(!solve_mod(make({{2}}), {Int(1)}, Int(4)).has_value());
    // 2x = 2 mod 4: solvable
    auto y = solve_mod(make({{2}}), {Int(2)}, Int(4));
    REQUIRE(y.has_value());
    CHECK((2 * (*y)[0]) % 4 == 2);
}
