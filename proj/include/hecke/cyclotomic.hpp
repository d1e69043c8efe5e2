#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

// Root of unity zeta_m^e, stored as (order, exponent mod order).
class RootOfUnity {
public:
    RootOfUnity() : order_(1), exp_(0) {}
    RootOfUnity(long order, long exponent);

    long order() const { return order_; }
    long exponent() const { return exp_; }

    bool is_one() const { return exp_ == 0; }

    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity inverse() const { return RootOfUnity(order_, -exp_); }
    RootOfUnity conj() const { return inverse(); }
    RootOfUnity pow(long k) const;

    // Same value under a common order (exponents compared after lcm embedding).
    bool operator==(const RootOfUnity& o) const;
    bool operator!=(const RootOfUnity& o) const { return !(*this == o); }

    // Reduce to the smallest order with the same value.
    RootOfUnity reduced() const;

    std::string to_string() const;  // "z^e (mod m)"
    static RootOfUnity parse(const std::string& text, long default_order);

private:
    long order_;
    long exp_;
};

namespace detail {
struct CycContext;
}

// Element of Q(zeta_m): rational coefficient vector of length phi(m),
// reduced modulo the m-th cyclotomic polynomial. The reduced form is the
// canonical form; equality is coefficient equality at a common order.
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(1) {}
    explicit Cyclotomic(long order);
    Cyclotomic(long order, const Rat& value);

    static Cyclotomic zero(long order) { return Cyclotomic(order); }
    static Cyclotomic one(long order) { return Cyclotomic(order, Rat(1)); }
    static Cyclotomic zeta_power(long order, long exponent);
    static Cyclotomic from_root(const RootOfUnity& r, long order);

    long order() const { return order_; }
    const std::vector<Rat>& coefficients() const { return coeff_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    std::optional<Rat> as_rational() const;
    // Exact test: is this value zeta_m^e for some e? (order divides order()).
    std::optional<RootOfUnity> as_root_of_unity() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const;
    Cyclotomic inverse() const;
    Cyclotomic conj() const;  // zeta -> zeta^{-1}
    Cyclotomic pow(long k) const;

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Rewrite in Q(zeta_new) where order() divides new_order.
    Cyclotomic promote(long new_order) const;

    // Numeric value under the embedding zeta -> exp(2*pi*i*k/m), gcd(k,m)=1.
    std::complex<double> eval(long embedding = 1) const;

    std::string to_string() const;
    static Cyclotomic parse(const std::string& text, long order);

private:
    Cyclotomic(std::shared_ptr<const detail::CycContext> ctx, std::vector<Rat> coeff);

    long order_;
    std::shared_ptr<const detail::CycContext> ctx_;
    std::vector<Rat> coeff_;

    friend struct detail::CycContext;
};

long euler_phi(long m);
// Coefficients (low degree first) of the m-th cyclotomic polynomial.
std::vector<Int> cyclotomic_polynomial(long m);

}  // namespace hecke
