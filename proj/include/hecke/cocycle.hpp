#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hecke/cyclotomic.hpp"
#include "hecke/group.hpp"

namespace hecke {

// mu_m-valued 2-cocycle on a subgroup. Finite groups carry an explicit
// exponent table indexed by element indices; the trivial cocycle is a rule
// and works on any backend (the only cocycle available on lattice subgroups).
class Cocycle2 {
public:
    enum class Kind { Trivial, Table };

    Cocycle2() = default;
    static Cocycle2 trivial(Subgroup g0, long order = 1);
    static Cocycle2 from_table(Subgroup g0, long order, std::vector<std::vector<long>> exponents);
    static Cocycle2 from_rule(Subgroup g0, long order,
                              const std::function<long(const GroupElement&, const GroupElement&)>& exponent);

    const Subgroup& group() const { return group_; }
    long order() const { return order_; }
    Kind kind() const { return kind_; }

    RootOfUnity value(const GroupElement& g, const GroupElement& h) const;
    Cyclotomic value_in(const GroupElement& g, const GroupElement& h, long field_order) const;

    bool is_trivial_values() const;  // all values equal 1

    Cocycle2 product(const Cocycle2& o) const;                // pointwise, same group
    Cocycle2 conjugated() const;                              // complex conjugate
    // (g,h) -> value(gamma^{-1} g gamma, gamma^{-1} h gamma) on `target`;
    // requires gamma^{-1} target gamma inside this cocycle's group.
    Cocycle2 pullback_ad(const GroupElement& gamma, const Subgroup& target) const;
    Cocycle2 restricted(const Subgroup& k) const;

    // On-the-nose equality of values (groups must agree).
    bool equals(const Cocycle2& o) const;

private:
    Subgroup group_;
    long order_ = 1;
    Kind kind_ = Kind::Trivial;
    std::vector<std::vector<long>> table_;
};

// Exhaustive check of normalization and the cocycle identity
// value(g,h)*value(gh,k) == value(h,k)*value(g,hk) on finite groups.
bool verify_cocycle(const Cocycle2& om);

// Solve d(rho) = om over Z/mZ; witness rho as one root of unity per element
// (indexed like group().elements()). Absent when om is not a coboundary.
std::optional<std::vector<RootOfUnity>> is_coboundary(const Cocycle2& om);

// d(rho)(g,h) = rho(g) rho(h) rho(gh)^{-1} from exponents mod `order`.
Cocycle2 coboundary_of(const Subgroup& g0, long order, const std::vector<long>& rho_exponents);

// Omega((a,b),(c,d)) = zeta^{b*c} for an abelian group with two distinguished
// generators x (order n) and y (order n): the clock-and-shift obstruction.
Cocycle2 heisenberg_cocycle(const Subgroup& g0, const GroupElement& x, const GroupElement& y, long n);

}  // namespace hecke
