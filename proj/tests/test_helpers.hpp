#pragma once

#include <string>
#include <vector>

#include "hecke/cocycle.hpp"
#include "hecke/group.hpp"
#include "hecke/projrep.hpp"

namespace hecke::testing {

inline AmbientPtr symmetric_ambient(int n) {
    std::vector<Perm> gens;
    gens.push_back(Perm::from_cycles("(1 2)", n));
    std::string cyc = "(";
    for (int i = 1; i <= n; ++i) cyc += std::to_string(i) + (i < n ? " " : ")");
    gens.push_back(Perm::from_cycles(cyc, n));
    return AmbientGroup::permutation(n, gens);
}

inline GroupElement pe(const AmbientPtr& amb, const std::string& cycles) {
    return GroupElement::from_perm(amb, Perm::from_cycles(cycles, amb->degree()));
}

inline GroupElement ve(const AmbientPtr& amb, std::vector<Rat> v) {
    return GroupElement::from_vector(amb, std::move(v));
}

inline Subgroup lattice_subgroup(const AmbientPtr& amb, std::vector<std::vector<Rat>> rows) {
    std::vector<GroupElement> gens;
    for (auto& r : rows) gens.push_back(GroupElement::from_vector(amb, std::move(r)));
    return Subgroup::generated(amb, gens);
}

// (Z/n)^2 as a permutation group on 2n points: x cycles 1..n, y cycles n+1..2n.
struct ZnSquared {
    AmbientPtr ambient;
    Subgroup group;
    GroupElement x, y;
    long n;
};

inline ZnSquared zn_squared(long n) {
    int degree = static_cast<int>(2 * n);
    auto cycle = [&](int lo, int hi) {
        std::string s = "(";
        for (int i = lo; i <= hi; ++i) s += std::to_string(i) + (i < hi ? " " : ")");
        return Perm::from_cycles(s, degree);
    };
    std::vector<Perm> gens{cycle(1, static_cast<int>(n)), cycle(static_cast<int>(n) + 1, degree)};
    AmbientPtr amb = AmbientGroup::permutation(degree, gens);
    GroupElement gx = GroupElement::from_perm(amb, gens[0]);
    GroupElement gy = GroupElement::from_perm(amb, gens[1]);
    Subgroup g = Subgroup::generated(amb, {gx, gy});
    return ZnSquared{amb, g, gx, gy, n};
}

}  // namespace hecke::testing
