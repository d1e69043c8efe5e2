#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/cyclotomic.hpp"
#include "hecke/matrix.hpp"

using namespace hecke;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Int>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(7) == 6);
}

TEST_CASE("root of unity algebra") {
    RootOfUnity a(4, 1), b(4, 3);
    CHECK((a * b).is_one());
    CHECK(a.inverse() == b);
    CHECK(RootOfUnity(2, 1) == RootOfUnity(4, 2));
    CHECK(RootOfUnity(6, 2).reduced().order() == 3);
    CHECK(RootOfUnity::parse("z^3 (mod 4)", 1) == RootOfUnity(4, 3));
    CHECK(RootOfUnity::parse("-1", 4) == RootOfUnity(2, 1));
}

TEST_CASE("field arithmetic in Q(zeta_m)") {
    // zeta_3 satisfies 1 + z + z^2 = 0
    Cyclotomic z3 = Cyclotomic::zeta_power(3, 1);
    CHECK((Cyclotomic::one(3) + z3 + z3 * z3).is_zero());
    // zeta_4^2 = -1
    Cyclotomic z4 = Cyclotomic::zeta_power(4, 1);
    CHECK((z4 * z4 + Cyclotomic::one(4)).is_zero());
    // inverse: z * z^{-1} = 1, and (1+z3)^{-1} exact
    CHECK((z4 * z4.inverse()).is_one());
    Cyclotomic u = Cyclotomic::one(3) + z3;
    CHECK((u * u.inverse()).is_one());
    // conj is the inverse on roots of unity
    CHECK(z4.conj() == z4.inverse());
    CHECK((z3 * z3.conj()).is_one());
    // promotion: zeta_3 = zeta_6^2
    CHECK(z3.promote(6) == Cyclotomic::zeta_power(6, 2));
    CHECK(z3 == Cyclotomic::zeta_power(6, 2));
    // mixed-order arithmetic lands in the lcm field
    Cyclotomic s = z3 + z4;
    CHECK(s.order() == 12);
    CHECK(s - z4.promote(12) == z3.promote(12));
}

TEST_CASE("root detection and text forms") {
    Cyclotomic z6 = Cyclotomic::zeta_power(6, 1);
    auto r = z6.as_root_of_unity();
    REQUIRE(r.has_value());
    CHECK(*r == RootOfUnity(6, 1));
    // -zeta_3 is a root of order 6 inside Q(zeta_3)
    Cyclotomic neg = -Cyclotomic::zeta_power(3, 1);
    auto nr = neg.as_root_of_unity();
    REQUIRE(nr.has_value());
    CHECK(nr->order() == 6);
    CHECK(Cyclotomic::from_root(*nr, 6) == neg.promote(6));
    // 1 + zeta_3 = -zeta_3^2 is again a root of unity; 1 + zeta_4 is not
    CHECK((Cyclotomic::one(3) + Cyclotomic::zeta_power(3, 1)).as_root_of_unity().has_value());
    CHECK(!(Cyclotomic::one(4) + Cyclotomic::zeta_power(4, 1)).as_root_of_unity().has_value());
    CHECK(!Cyclotomic(4, Rat(2)).as_root_of_unity().has_value());

    CHECK(Cyclotomic::parse("1/2 - 1/2*z", 4).to_string() == "[1/2,-1/2]");
    CHECK(Cyclotomic::parse("1/2 - 1/2*z^2", 4).to_string() == "1");
    CHECK(Cyclotomic::parse("z^5", 4) == Cyclotomic::zeta_power(4, 1));
    CHECK(Cyclotomic::parse("-3/7", 4).as_rational().value() == Rat(-3, 7));
}

TEST_CASE("matrix inverse and nullspace over Q(zeta)") {
    long m = 4;
    CycMatrix a(2, 2, m);
    a.at(0, 0) = Cyclotomic::one(m);
    a.at(0, 1) = Cyclotomic::zeta_power(m, 1);
    a.at(1, 0) = Cyclotomic::zero(m);
    a.at(1, 1) = Cyclotomic(m, Rat(2));
    CycMatrix inv = a.inverse();
    CHECK((a * inv).is_identity());
    CHECK((inv * a).is_identity());

    // singular matrix: [[1, z],[z^3, 1]] has determinant 1 - z^4 = 0 over Q(zeta_4)
    CycMatrix s(2, 2, m);
    s.at(0, 0) = Cyclotomic::one(m);
    s.at(0, 1) = Cyclotomic::zeta_power(m, 1);
    s.at(1, 0) = Cyclotomic::zeta_power(m, 3);
    s.at(1, 1) = Cyclotomic::one(m);
    CHECK(s.rank() == 1);
    CycMatrix ns = s.nullspace();
    CHECK(ns.cols() == 1);
    CHECK((s * ns).is_zero());

    // unitarity: clock matrix diag(1, z) is unitary, [[1,1],[0,1]] is not
    CycMatrix clock(2, 2, m);
    clock.at(0, 0) = Cyclotomic::one(m);
    clock.at(1, 1) = Cyclotomic::zeta_power(m, 1);
    CHECK(clock.is_unitary());
    CycMatrix shear = CycMatrix::identity(2, m);
    shear.at(0, 1) = Cyclotomic::one(m);
    CHECK(!shear.is_unitary());

    // kronecker shape and solve
    CHECK(clock.kronecker(shear).rows() == 4);
    CycMatrix b(2, 1, m);
    b.at(0, 0) = Cyclotomic(m, Rat(3));
    b.at(1, 0) = Cyclotomic(m, Rat(4));
    auto x = solve_linear(a, b);
    REQUIRE(x.has_value());
    CHECK((a * *x) == b);
}
