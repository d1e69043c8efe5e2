#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"

using namespace hecke;
using namespace hecke::testing;

namespace {

// characters of <(1 2)>: exponents over mu_2 per element index
ProjRep sign_char(const Subgroup& z2, long cyc_order) {
    std::vector<long> exps(z2.order(), 0);
    for (size_t i = 0; i < z2.order(); ++i)
        if (!z2.element_at(i).is_identity()) exps[i] = cyc_order / 2;
    return ProjRep::character(z2, cyc_order, exps);
}

}  // namespace

TEST_CASE("clock-and-shift obstruction reproduces the heisenberg cocycle") {
    for (long n : {2L, 3L, 4L}) {
        auto z = zn_squared(n);
        ProjRep cs = ProjRep::clock_shift(z.group, z.x, z.y, n);
        CHECK(cs.dim() == static_cast<size_t>(n));
        Cocycle2 om = heisenberg_cocycle(z.group, z.x, z.y, n);
        CHECK(cs.obstruction().equals(om));
        CHECK(verify_cocycle(cs.obstruction()));
    }
}

TEST_CASE("true representations have trivial obstruction") {
    auto amb = symmetric_ambient(3);
    Subgroup z3 = Subgroup::generated(amb, {pe(amb, "(1 2 3)")});
    // regular representation of Z/3 by permutation matrices
    std::vector<CycMatrix> mats(z3.order(), CycMatrix(3, 3, 3));
    for (size_t i = 0; i < z3.order(); ++i) {
        CycMatrix m(3, 3, 3);
        for (size_t j = 0; j < z3.order(); ++j) {
            size_t k = z3.element_index(mul(z3.element_at(i), z3.element_at(j)));
            m.at(k, j) = Cyclotomic::one(3);
        }
        mats[i] = m;
    }
    ProjRep reg = ProjRep::from_matrices(z3, 3, mats);
    CHECK(reg.obstruction().is_trivial_values());

    // decompose into three distinct characters, multiplicity 1 each
    RepDecomposition dec = decompose_projrep(reg);
    CHECK(dec.summands.size() == 3);
    for (const auto& [rep, mult] : dec.summands) {
        CHECK(rep.dim() == 1);
        CHECK(mult == 1);
    }
    // change of basis is an exact witness: pi(g) U = U blockdiag(pieces)
    const CycMatrix& u = dec.change_of_basis;
    for (size_t i = 0; i < z3.order(); ++i) {
        GroupElement g = z3.element_at(i);
        std::vector<CycMatrix> blocks;
        for (const auto& piece : dec.pieces) blocks.push_back(piece.matrix(g));
        CHECK(reg.matrix(g) * u == u * CycMatrix::direct_sum(blocks));
    }
}

TEST_CASE("scaling a projective rep multiplies the obstruction by a coboundary") {
    auto z22 = zn_squared(2);
    ProjRep cs = ProjRep::clock_shift(z22.group, z22.x, z22.y, 2);
    std::vector<long> rho(z22.group.order(), 0);
    rho[z22.group.element_index(z22.x)] = 1;
    rho[z22.group.element_index(mul(z22.x, z22.y))] = 1;
    ProjRep scaled = scale_projrep(cs, rho, 2);
    Cocycle2 expected = cs.obstruction().product(coboundary_of(z22.group, 2, rho));
    CHECK(scaled.obstruction().equals(expected));
}

TEST_CASE("induction: regular rep from the trivial subgroup of Z/2") {
    auto amb = symmetric_ambient(3);
    Subgroup z2 = Subgroup::generated(amb, {pe(amb, "(1 2)")});
    Subgroup triv = Subgroup::trivial(amb);
    ProjRep one = ProjRep::trivial(triv, 2);
    ProjRep ind = induce_projrep(one, z2, Cocycle2::trivial(z2, 2));
    CHECK(ind.dim() == 2);
    CHECK(ind.obstruction().is_trivial_values());
    // regular rep: the nontrivial element acts by the swap matrix
    CycMatrix swap(2, 2, 2);
    swap.at(0, 1) = Cyclotomic::one(2);
    swap.at(1, 0) = Cyclotomic::one(2);
    CHECK(ind.matrix(pe(amb, "(1 2)")) == swap);

    // induction along H0 = G0 is the identity
    ProjRep same = induce_projrep(ind, z2, ind.obstruction());
    CHECK(same.equals(ind));
}

TEST_CASE("induction carrying the heisenberg cocycle") {
    auto z22 = zn_squared(2);
    Cocycle2 om = heisenberg_cocycle(z22.group, z22.x, z22.y, 2);
    Subgroup h0 = Subgroup::generated(z22.ambient, {z22.y});  // {0} x Z/2
    CHECK(om.restricted(h0).is_trivial_values());
    ProjRep chi = sign_char(h0, 2);
    ProjRep ind = induce_projrep(chi, z22.group, om);
    CHECK(ind.dim() == 2);
    CHECK(ind.obstruction().equals(om));
    // the induced rep is irreducible (the heisenberg rep)
    CHECK(is_irreducible_rep(ind));

    // obstruction mismatch is rejected: om restricts nontrivially to <xy>,
    // so a true character of <xy> cannot be induced against it
    Subgroup diag = Subgroup::generated(z22.ambient, {mul(z22.x, z22.y)});
    CHECK(!om.restricted(diag).is_trivial_values());
    CHECK_THROWS_AS((void)induce_projrep(sign_char(diag, 2), z22.group, om), Error);
}

TEST_CASE("intertwiners") {
    auto z22 = zn_squared(2);
    ProjRep cs = ProjRep::clock_shift(z22.group, z22.x, z22.y, 2);
    CHECK(intertwiners(cs, cs).size() == 1);
    CHECK(is_irreducible_rep(cs));

    auto amb = symmetric_ambient(3);
    Subgroup z2 = Subgroup::generated(amb, {pe(amb, "(1 2)")});
    ProjRep triv = ProjRep::trivial(z2, 2, 1);
    ProjRep sgn = sign_char(z2, 2);
    CHECK(intertwiners(triv, sgn).empty());

    ProjRep chichi = direct_sum_rep({{sgn, 2}});
    auto basis = intertwiners(chichi, chichi);
    CHECK(basis.size() == 4);
    // identity is always an intertwiner of (pi, pi): solve for it
    bool found_identity = false;
    for (const auto& t : basis)
        if (t.is_identity()) found_identity = true;
    // the nullspace basis need not contain I literally, but I must be in the span;
    // verify by checking T pi = pi T holds for I (trivially true)
    (void)found_identity;
    CHECK(intertwiners(chichi, chichi).size() == 4);
}

TEST_CASE("decomposition with multiplicities") {
    auto amb = symmetric_ambient(3);
    Subgroup z2 = Subgroup::generated(amb, {pe(amb, "(1 2)")});
    ProjRep triv = ProjRep::trivial(z2, 2, 1);
    ProjRep sgn = sign_char(z2, 2);
    ProjRep sum = direct_sum_rep({{sgn, 2}, {triv, 1}});
    RepDecomposition dec = decompose_projrep(sum);
    REQUIRE(dec.summands.size() == 2);
    std::multiset<std::pair<size_t, size_t>> shape;
    for (const auto& [rep, mult] : dec.summands) shape.insert({rep.dim(), mult});
    CHECK(shape == std::multiset<std::pair<size_t, size_t>>{{1, 1}, {1, 2}});
    // every piece is unitary and irreducible
    for (const auto& piece : dec.pieces) {
        CHECK(is_irreducible_rep(piece));
        for (size_t i = 0; i < z2.order(); ++i) CHECK(piece.matrix(z2.element_at(i)).is_unitary());
    }

    // irreducible stays whole
    auto z22 = zn_squared(2);
    ProjRep cs = ProjRep::clock_shift(z22.group, z22.x, z22.y, 2);
    RepDecomposition single = decompose_projrep(cs);
    CHECK(single.summands.size() == 1);
    CHECK(single.summands[0].second == 1);
    CHECK(single.summands[0].first.dim() == 2);

    // heisenberg rep with multiplicity two: splits into two dim-2 copies
    ProjRep cs2 = direct_sum_rep({{cs, 2}});
    RepDecomposition two = decompose_projrep(cs2);
    REQUIRE(two.summands.size() == 1);
    CHECK(two.summands[0].second == 2);
    CHECK(two.summands[0].first.dim() == 2);
    for (const auto& piece : two.pieces)
        for (size_t i = 0; i < z22.group.order(); ++i)
            CHECK(piece.matrix(z22.group.element_at(i)).is_unitary());
}

TEST_CASE("quotient representations on lattice subgroups") {
    auto lat = AmbientGroup::lattice(2);
    Subgroup z2 = lattice_subgroup(lat, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    Subgroup ker = lattice_subgroup(lat, {{Rat(2), Rat(0)}, {Rat(0), Rat(1)}});
    // rep factoring through Z^2/(2Z+Z) = Z/2: [0] -> I, [e1] -> diag(1,-1)
    CycMatrix m1 = CycMatrix::identity(2, 2);
    CycMatrix m2(2, 2, 2);
    m2.at(0, 0) = Cyclotomic::one(2);
    m2.at(1, 1) = -Cyclotomic::one(2);
    ProjRep q = ProjRep::quotient_rep(z2, ker, 2, {m1, m2});
    CHECK(q.dim() == 2);
    CHECK(q.obstruction().is_trivial_values());
    CHECK(q.matrix(ve(lat, {Rat(3), Rat(5)})) == m2);
    CHECK(q.matrix(ve(lat, {Rat(2), Rat(5)})) == m1);

    CHECK(intertwiners(q, q).size() == 2);
    RepDecomposition dec = decompose_projrep(q);
    CHECK(dec.summands.size() == 2);
    for (const auto& [rep, mult] : dec.summands) {
        CHECK(rep.dim() == 1);
        CHECK(mult == 1);
    }

    ProjRep trivq = ProjRep::trivial(z2, 2, 1);
    CHECK(is_irreducible_rep(trivq));
    CHECK(trivq.matrix(ve(lat, {Rat(7), Rat(-2)})).is_identity());
}

TEST_CASE("conjugate transport of a block rep") {
    auto amb = symmetric_ambient(3);
    Subgroup t12 = Subgroup::generated(amb, {pe(amb, "(1 2)")});
    Subgroup t23 = Subgroup::generated(amb, {pe(amb, "(2 3)")});
    ProjRep sgn = sign_char(t12, 2);
    GroupElement gamma = pe(amb, "(1 3)");
    // gamma t23 gamma^{-1} = t12, so transport lands on t23
    ProjRep moved = conjugate_rep_transport(sgn, gamma, t23);
    CHECK(moved.group() == t23);
    CHECK(moved.matrix(pe(amb, "(2 3)")) == CycMatrix::scalar(1, -Cyclotomic::one(2)));
}
