#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_helpers.hpp"

using namespace hecke;
using namespace hecke::testing;

TEST_CASE("trivial cocycle verifies on any finite group") {
    auto amb = symmetric_ambient(3);
    Subgroup s3 = Subgroup::generated(amb, {pe(amb, "(1 2)"), pe(amb, "(1 2 3)")});
    CHECK(verify_cocycle(Cocycle2::trivial(s3, 4)));
}

TEST_CASE("heisenberg cocycle on (Z/2)^2: identity holds, flipped entry fails") {
    auto z22 = zn_squared(2);
    Cocycle2 om = heisenberg_cocycle(z22.group, z22.x, z22.y, 2);
    CHECK(verify_cocycle(om));
    // omega((a,b),(c,d)) = (-1)^{bc}
    CHECK(om.value(z22.y, z22.x) == RootOfUnity(2, 1));
    CHECK(om.value(z22.x, z22.y).is_one());

    // flip one non-normalization entry
    size_t n = z22.group.order();
    std::vector<std::vector<long>> table(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            RootOfUnity v = om.value(z22.group.element_at(i), z22.group.element_at(j));
            table[i][j] = v.exponent() * (2 / v.order());
        }
    size_t yi = z22.group.element_index(z22.y);
    size_t xi = z22.group.element_index(z22.x);
    table[yi][xi] = (table[yi][xi] + 1) % 2;
    Cocycle2 bad = Cocycle2::from_table(z22.group, 2, table);
    CHECK(!verify_cocycle(bad));
}

TEST_CASE("heisenberg on (Z/3)^2 verifies exhaustively") {
    auto z33 = zn_squared(3);
    CHECK(verify_cocycle(heisenberg_cocycle(z33.group, z33.x, z33.y, 3)));
}

TEST_CASE("cocycle ops") {
    auto z22 = zn_squared(2);
    Cocycle2 om = heisenberg_cocycle(z22.group, z22.x, z22.y, 2);
    CHECK(om.product(om.conjugated()).is_trivial_values());
    CHECK(om.pullback_ad(GroupElement::identity(z22.ambient), z22.group).equals(om));

    // restriction to the diagonal subgroup <xy>
    Subgroup diag = Subgroup::generated(z22.ambient, {mul(z22.x, z22.y)});
    Cocycle2 res = om.restricted(diag);
    CHECK(verify_cocycle(res));
    CHECK(res.value(mul(z22.x, z22.y), mul(z22.x, z22.y)) == RootOfUnity(2, 1));

    // product with itself is trivial over mu_2
    CHECK(om.product(om).is_trivial_values());
}

TEST_CASE("swap pullback of the heisenberg cocycle") {
    // Omega((a,b),(c,d)) = (-1)^{bc} pulled back along (a,b) |-> (b,a) gives
    // (-1)^{ad}; on the permutation model the swap is conjugation by the
    // ambient element exchanging the two n-cycles.
    long n = 2;
    int degree = static_cast<int>(2 * n);
    std::vector<Perm> gens{Perm::from_cycles("(1 2)", degree), Perm::from_cycles("(3 4)", degree),
                           Perm::from_cycles("(1 3)(2 4)", degree)};
    AmbientPtr amb = AmbientGroup::permutation(degree, gens);
    GroupElement x = GroupElement::from_perm(amb, gens[0]);
    GroupElement y = GroupElement::from_perm(amb, gens[1]);
    GroupElement swap = GroupElement::from_perm(amb, gens[2]);
    Subgroup g = Subgroup::generated(amb, {x, y});
    Cocycle2 om = heisenberg_cocycle(g, x, y, 2);
    REQUIRE(conjugate(swap, x) == y);  // swap exchanges the coordinates

    Cocycle2 pulled = om.pullback_ad(swap.inverse(), g);
    // pulled(g,h) = om(swap g swap^{-1}, swap h swap^{-1}) = (-1)^{a_g d_h}
    CHECK(pulled.value(x, y) == RootOfUnity(2, 1));   // a_g=1, d_h=1
    CHECK(pulled.value(y, x).is_one());               // a_g=0
    CHECK(verify_cocycle(pulled));
}

TEST_CASE("coboundary solver") {
    auto z22 = zn_squared(2);
    Cocycle2 om = heisenberg_cocycle(z22.group, z22.x, z22.y, 2);
    // Heisenberg is not a coboundary: linear solve fails...
    CHECK(!is_coboundary(om).has_value());
    // ...and exhaustive search over all 16 maps rho agrees.
    size_t n = z22.group.order();
    size_t eidx = z22.group.element_index(z22.group.identity());
    bool found = false;
    for (long mask = 0; mask < 16; ++mask) {
        std::vector<long> rho(n, 0);
        for (size_t i = 0; i < n; ++i) rho[i] = (mask >> i) & 1;
        if (rho[eidx] != 0) continue;
        if (coboundary_of(z22.group, 2, rho).equals(om)) found = true;
    }
    CHECK(!found);

    // trivial cocycle: witness rho == 1
    auto triv = is_coboundary(Cocycle2::trivial(z22.group, 2));
    REQUIRE(triv.has_value());
    for (const auto& r : *triv) CHECK(r.is_one());

    // random coboundaries on S3 are recognized (witness re-verified inside)
    auto amb = symmetric_ambient(3);
    Subgroup s3 = Subgroup::generated(amb, {pe(amb, "(1 2)"), pe(amb, "(1 2 3)")});
    std::mt19937 rng(11);
    size_t eidx3 = s3.element_index(s3.identity());
    for (int trial = 0; trial < 25; ++trial) {
        long m = 6;
        std::vector<long> rho(s3.order());
        for (auto& e : rho) e = static_cast<long>(rng() % m);
        rho[eidx3] = 0;
        Cocycle2 om3 = coboundary_of(s3, m, rho);
        CHECK(verify_cocycle(om3));
        CHECK(is_coboundary(om3).has_value());
    }
}
