#include "hecke/cocycle.hpp"

#include <map>
#include <numeric>

namespace hecke {

Cocycle2 Cocycle2::trivial(Subgroup g0, long order) {
    Cocycle2 c;
    c.group_ = std::move(g0);
    c.order_ = order;
    c.kind_ = Kind::Trivial;
    return c;
}

Cocycle2 Cocycle2::from_table(Subgroup g0, long order, std::vector<std::vector<long>> exponents) {
    if (g0.backend() != Backend::Permutation)
        throw precondition_error("BackendUnsupported", "table cocycles need a finite group");
    size_t n = g0.order();
    if (exponents.size() != n)
        throw precondition_error("BadTable", "cocycle table size mismatch");
    for (auto& row : exponents) {
        if (row.size() != n) throw precondition_error("BadTable", "cocycle table row mismatch");
        for (auto& e : row) e = ((e % order) + order) % order;
    }
    Cocycle2 c;
    c.group_ = std::move(g0);
    c.order_ = order;
    c.kind_ = Kind::Table;
    c.table_ = std::move(exponents);
    return c;
}

Cocycle2 Cocycle2::from_rule(Subgroup g0, long order,
                             const std::function<long(const GroupElement&, const GroupElement&)>& exponent) {
    size_t n = g0.order();
    std::vector<std::vector<long>> table(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            table[i][j] = exponent(g0.element_at(i), g0.element_at(j));
    return from_table(std::move(g0), order, std::move(table));
}

RootOfUnity Cocycle2::value(const GroupElement& g, const GroupElement& h) const {
    if (kind_ == Kind::Trivial) return RootOfUnity(1, 0);
    return RootOfUnity(order_, table_[group_.element_index(g)][group_.element_index(h)]);
}

Cyclotomic Cocycle2::value_in(const GroupElement& g, const GroupElement& h, long field_order) const {
    return Cyclotomic::from_root(value(g, h), field_order);
}

bool Cocycle2::is_trivial_values() const {
    if (kind_ == Kind::Trivial) return true;
    for (const auto& row : table_)
        for (long e : row)
            if (e != 0) return false;
    return true;
}

Cocycle2 Cocycle2::product(const Cocycle2& o) const {
    if (group_ != o.group_)
        throw precondition_error("IncompatibleDomain", "cocycle product across different groups");
    if (kind_ == Kind::Trivial && o.kind_ == Kind::Trivial)
        return trivial(group_, std::lcm(order_, o.order_));
    long m = std::lcm(order_, o.order_);
    size_t n = group_.order();
    std::vector<std::vector<long>> table(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            RootOfUnity v = value(group_.element_at(i), group_.element_at(j)) *
                            o.value(group_.element_at(i), group_.element_at(j));
            table[i][j] = v.exponent() * (m / v.order());
        }
    return from_table(group_, m, std::move(table));
}

Cocycle2 Cocycle2::conjugated() const {
    if (kind_ == Kind::Trivial) return *this;
    size_t n = group_.order();
    std::vector<std::vector<long>> table(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) table[i][j] = (order_ - table_[i][j]) % order_;
    return from_table(group_, order_, std::move(table));
}

Cocycle2 Cocycle2::pullback_ad(const GroupElement& gamma, const Subgroup& target) const {
    GroupElement gi = gamma.inverse();
    auto transport = [&](const GroupElement& t) { return conjugate(gi, t); };
    if (target.backend() == Backend::Permutation) {
        for (size_t i = 0; i < target.order(); ++i)
            if (!group_.contains(transport(target.element_at(i))))
                throw precondition_error("IncompatibleDomain",
                                         "pullback target not conjugated into cocycle domain");
    } else {
        for (const auto& g : target.generators())
            if (!group_.contains(transport(g)))
                throw precondition_error("IncompatibleDomain",
                                         "pullback target not conjugated into cocycle domain");
    }
    if (kind_ == Kind::Trivial) return trivial(target, order_);
    size_t n = target.order();
    std::vector<std::vector<long>> table(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            RootOfUnity v = value(transport(target.element_at(i)), transport(target.element_at(j)));
            table[i][j] = v.exponent() * (order_ / v.order());
        }
    return from_table(target, order_, std::move(table));
}

Cocycle2 Cocycle2::restricted(const Subgroup& k) const {
    return pullback_ad(GroupElement::identity(group_.ambient()), k);
}

bool Cocycle2::equals(const Cocycle2& o) const {
    if (group_ != o.group_) return false;
    if (kind_ == Kind::Trivial && o.kind_ == Kind::Trivial) return true;
    if (group_.backend() != Backend::Permutation) return kind_ == o.kind_;
    size_t n = group_.order();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (value(group_.element_at(i), group_.element_at(j)) !=
                o.value(group_.element_at(i), group_.element_at(j)))
                return false;
    return true;
}

bool verify_cocycle(const Cocycle2& om) {
    if (om.kind() == Cocycle2::Kind::Trivial) return true;
    const Subgroup& g0 = om.group();
    size_t n = g0.order();
    GroupElement e = g0.identity();
    for (size_t i = 0; i < n; ++i) {
        GroupElement g = g0.element_at(i);
        if (!om.value(e, g).is_one() || !om.value(g, e).is_one()) return false;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                GroupElement g = g0.element_at(i), h = g0.element_at(j), l = g0.element_at(k);
                RootOfUnity lhs = om.value(g, h) * om.value(mul(g, h), l);
                RootOfUnity rhs = om.value(h, l) * om.value(g, mul(h, l));
                if (lhs != rhs) return false;
            }
    return true;
}

std::optional<std::vector<RootOfUnity>> is_coboundary(const Cocycle2& om) {
    size_t n = om.group().order();
    long m = om.order();
    if (om.kind() == Cocycle2::Kind::Trivial || om.is_trivial_values())
        return std::vector<RootOfUnity>(n, RootOfUnity(1, 0));

    const Subgroup& g0 = om.group();
    // Additive reformulation over Z/m: rho(g) + rho(h) - rho(gh) = log om(g,h).
    IntMatrix a;
    std::vector<Int> b;
    a.reserve(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<Int> row(n, Int(0));
            size_t k = g0.element_index(mul(g0.element_at(i), g0.element_at(j)));
            row[i] += 1;
            row[j] += 1;
            row[k] -= 1;
            RootOfUnity v = om.value(g0.element_at(i), g0.element_at(j));
            a.push_back(std::move(row));
            b.emplace_back(v.exponent() * (m / v.order()));
        }
    auto x = solve_mod(a, b, Int(m));
    if (!x) return std::nullopt;
    std::vector<RootOfUnity> rho;
    rho.reserve(n);
    for (size_t i = 0; i < n; ++i) rho.emplace_back(m, to_int64((*x)[i]));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            size_t k = g0.element_index(mul(g0.element_at(i), g0.element_at(j)));
            RootOfUnity lhs = rho[i] * rho[j] * rho[k].inverse();
            if (lhs != om.value(g0.element_at(i), g0.element_at(j)))
                throw precondition_error("Internal", "coboundary witness failed re-verification");
        }
    return rho;
}

Cocycle2 coboundary_of(const Subgroup& g0, long order, const std::vector<long>& rho_exponents) {
    size_t n = g0.order();
    if (rho_exponents.size() != n)
        throw precondition_error("BadTable", "coboundary needs one exponent per element");
    size_t eidx = g0.element_index(g0.identity());
    if (rho_exponents[eidx] % order != 0)
        throw precondition_error("BadTable", "coboundary witness must send e to 1");
    std::vector<std::vector<long>> table(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            size_t k = g0.element_index(mul(g0.element_at(i), g0.element_at(j)));
            long e = rho_exponents[i] + rho_exponents[j] - rho_exponents[k];
            table[i][j] = ((e % order) + order) % order;
        }
    return Cocycle2::from_table(g0, order, std::move(table));
}

Cocycle2 heisenberg_cocycle(const Subgroup& g0, const GroupElement& x, const GroupElement& y, long n) {
    if (g0.backend() != Backend::Permutation)
        throw precondition_error("BackendUnsupported", "heisenberg cocycle needs a finite group");
    if (static_cast<long>(g0.order()) != n * n)
        throw precondition_error("BadTable", "group order must be n^2 for the clock-and-shift cocycle");
    // coordinates g = x^a y^b
    std::map<size_t, std::pair<long, long>> coords;
    GroupElement xa = g0.identity();
    for (long a = 0; a < n; ++a) {
        GroupElement xayb = xa;
        for (long b = 0; b < n; ++b) {
            coords[g0.element_index(xayb)] = {a, b};
            xayb = mul(xayb, y);
        }
        xa = mul(xa, x);
    }
    if (coords.size() != g0.order())
        throw precondition_error("BadTable", "x,y do not give (Z/n)^2 coordinates");
    size_t sz = g0.order();
    std::vector<std::vector<long>> table(sz, std::vector<long>(sz, 0));
    for (size_t i = 0; i < sz; ++i)
        for (size_t j = 0; j < sz; ++j) {
            long bg = coords[i].second;
            long ah = coords[j].first;
            table[i][j] = (bg * ah) % n;
        }
    return Cocycle2::from_table(g0, n, std::move(table));
}

}  // namespace hecke
