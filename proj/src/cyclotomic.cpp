#include "hecke/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hecke {

long euler_phi(long m) {
    long result = m;
    long n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

using Poly = std::vector<Int>;  // low degree first

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// Exact division, assumes divisor is monic and divides evenly.
Poly poly_div_exact(Poly num, const Poly& den) {
    Poly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
    for (long i = static_cast<long>(num.size()) - 1;
         i >= static_cast<long>(den.size()) - 1; --i) {
        Int c = num[static_cast<size_t>(i)];
        if (c == 0) continue;
        size_t shift = static_cast<size_t>(i) - (den.size() - 1);
        quot[shift] = c;
        for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    return poly_trim(quot);
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(long m) {
    // (x^m - 1) divided by the product of Phi_d over proper divisors d of m.
    Poly num(static_cast<size_t>(m) + 1, Int(0));
    num[0] = -1;
    num[static_cast<size_t>(m)] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = poly_div_exact(num, cyclotomic_polynomial(d));
    }
    return num;
}

namespace detail {

struct CycContext {
    long order = 1;
    long degree = 1;  // phi(order)
    std::vector<Int> phi_poly;
    // zeta^k expressed in the power basis 1, zeta, ..., zeta^{degree-1},
    // for k in [0, 2*order).
    std::vector<std::vector<Rat>> zeta_powers;

    static std::shared_ptr<const CycContext> get(long order);
};

std::shared_ptr<const CycContext> CycContext::get(long order) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const CycContext>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(order);
    if (it != registry.end()) return it->second;

    auto ctx = std::make_shared<CycContext>();
    ctx->order = order;
    ctx->degree = euler_phi(order);
    ctx->phi_poly = cyclotomic_polynomial(order);
    const long deg = ctx->degree;
    ctx->zeta_powers.reserve(static_cast<size_t>(2 * order));
    std::vector<Rat> cur(static_cast<size_t>(deg), Rat(0));
    cur[0] = 1;
    for (long k = 0; k < 2 * order; ++k) {
        ctx->zeta_powers.push_back(cur);
        // multiply by zeta: shift up, reduce x^deg via the monic Phi.
        std::vector<Rat> next(static_cast<size_t>(deg), Rat(0));
        Rat top = cur[static_cast<size_t>(deg - 1)];
        for (long j = deg - 1; j > 0; --j) next[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)];
        next[0] = 0;
        if (top != 0) {
            for (long j = 0; j < deg; ++j)
                next[static_cast<size_t>(j)] -= top * Rat(ctx->phi_poly[static_cast<size_t>(j)]);
        }
        cur = std::move(next);
    }
    registry[order] = ctx;
    return ctx;
}

}  // namespace detail

// ---------------------------------------------------------------- RootOfUnity

RootOfUnity::RootOfUnity(long order, long exponent) : order_(order) {
    if (order <= 0) throw precondition_error("BadOrder", "root of unity order must be positive");
    exp_ = ((exponent % order) + order) % order;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    long m = std::lcm(order_, o.order_);
    return RootOfUnity(m, exp_ * (m / order_) + o.exp_ * (m / o.order_));
}

RootOfUnity RootOfUnity::pow(long k) const {
    long e = ((exp_ * (k % order_)) % order_ + order_) % order_;
    return RootOfUnity(order_, e);
}

bool RootOfUnity::operator==(const RootOfUnity& o) const {
    long m = std::lcm(order_, o.order_);
    return exp_ * (m / order_) == o.exp_ * (m / o.order_);
}

RootOfUnity RootOfUnity::reduced() const {
    long g = std::gcd(exp_, order_);
    if (exp_ == 0) return RootOfUnity(1, 0);
    return RootOfUnity(order_ / g, exp_ / g);
}

std::string RootOfUnity::to_string() const {
    std::ostringstream os;
    os << "z^" << exp_ << " (mod " << order_ << ")";
    return os.str();
}

RootOfUnity RootOfUnity::parse(const std::string& text, long default_order) {
    // Accepts "1", "-1", "z^k", "z^k (mod m)".
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t == "1") return RootOfUnity(1, 0);
    if (t == "-1") return RootOfUnity(2, 1);
    if (t.rfind("z^", 0) != 0) throw parse_error("ParseError", "invalid root of unity '" + text + "'");
    size_t pos = 2;
    size_t mod = t.find("(mod");
    std::string expstr = (mod == std::string::npos) ? t.substr(pos) : t.substr(pos, mod - pos);
    long order = default_order;
    if (mod != std::string::npos) {
        size_t close = t.find(')', mod);
        if (close == std::string::npos) throw parse_error("ParseError", "invalid root of unity '" + text + "'");
        order = std::stol(t.substr(mod + 4, close - mod - 4));
    }
    try {
        return RootOfUnity(order, std::stol(expstr));
    } catch (const std::logic_error&) {
        throw parse_error("ParseError", "invalid root of unity '" + text + "'");
    }
}

// ----------------------------------------------------------------- Cyclotomic

Cyclotomic::Cyclotomic(long order)
    : order_(order), ctx_(detail::CycContext::get(order)),
      coeff_(static_cast<size_t>(ctx_->degree), Rat(0)) {}

Cyclotomic::Cyclotomic(long order, const Rat& value) : Cyclotomic(order) {
    coeff_[0] = value;
}

Cyclotomic::Cyclotomic(std::shared_ptr<const detail::CycContext> ctx, std::vector<Rat> coeff)
    : order_(ctx->order), ctx_(std::move(ctx)), coeff_(std::move(coeff)) {}

Cyclotomic Cyclotomic::zeta_power(long order, long exponent) {
    auto ctx = detail::CycContext::get(order);
    long e = ((exponent % order) + order) % order;
    return Cyclotomic(ctx, ctx->zeta_powers[static_cast<size_t>(e)]);
}

Cyclotomic Cyclotomic::from_root(const RootOfUnity& r, long order) {
    if (order % r.order() != 0)
        throw precondition_error("OrderMismatch",
                                 "root of order " + std::to_string(r.order()) +
                                     " does not embed in Q(zeta_" + std::to_string(order) + ")");
    return zeta_power(order, r.exponent() * (order / r.order()));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeff_.begin(), coeff_.end(), [](const Rat& c) { return c == 0; });
}

bool Cyclotomic::is_one() const {
    if (coeff_[0] != 1) return false;
    return std::all_of(coeff_.begin() + 1, coeff_.end(), [](const Rat& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
    return std::all_of(coeff_.begin() + 1, coeff_.end(), [](const Rat& c) { return c == 0; });
}

std::optional<Rat> Cyclotomic::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeff_[0];
}

std::optional<RootOfUnity> Cyclotomic::as_root_of_unity() const {
    // The torsion units of Q(zeta_m) are exactly +-zeta_m^e.
    for (long e = 0; e < order_; ++e) {
        if (coeff_ == ctx_->zeta_powers[static_cast<size_t>(e)])
            return RootOfUnity(order_, e).reduced();
    }
    Cyclotomic neg = -*this;
    for (long e = 0; e < order_; ++e) {
        if (neg.coeff_ == ctx_->zeta_powers[static_cast<size_t>(e)])
            return (RootOfUnity(2, 1) * RootOfUnity(order_, e)).reduced();
    }
    return std::nullopt;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (order_ != o.order_) {
        long m = std::lcm(order_, o.order_);
        return promote(m) + o.promote(m);
    }
    std::vector<Rat> c(coeff_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeff_[i];
    return Cyclotomic(ctx_, std::move(c));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rat> c(coeff_);
    for (auto& x : c) x = -x;
    return Cyclotomic(ctx_, std::move(c));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (order_ != o.order_) {
        long m = std::lcm(order_, o.order_);
        return promote(m) * o.promote(m);
    }
    const long deg = ctx_->degree;
    std::vector<Rat> prod(static_cast<size_t>(2 * deg - 1), Rat(0));
    for (long i = 0; i < deg; ++i) {
        if (coeff_[static_cast<size_t>(i)] == 0) continue;
        for (long j = 0; j < deg; ++j) {
            if (o.coeff_[static_cast<size_t>(j)] == 0) continue;
            prod[static_cast<size_t>(i + j)] += coeff_[static_cast<size_t>(i)] * o.coeff_[static_cast<size_t>(j)];
        }
    }
    std::vector<Rat> out(static_cast<size_t>(deg), Rat(0));
    for (long k = 0; k < 2 * deg - 1; ++k) {
        const Rat& c = prod[static_cast<size_t>(k)];
        if (c == 0) continue;
        if (k < deg) {
            out[static_cast<size_t>(k)] += c;
        } else {
            const auto& row = ctx_->zeta_powers[static_cast<size_t>(k)];
            for (long j = 0; j < deg; ++j) out[static_cast<size_t>(j)] += c * row[static_cast<size_t>(j)];
        }
    }
    return Cyclotomic(ctx_, std::move(out));
}

namespace {

using RPoly = std::vector<Rat>;

RPoly rpoly_trim(RPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// num = quot * den + rem over Q[x].
std::pair<RPoly, RPoly> rpoly_divmod(RPoly num, const RPoly& den) {
    RPoly quot;
    if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, Rat(0));
    const Rat lead = den.back();
    for (long i = static_cast<long>(num.size()) - 1;
         i >= static_cast<long>(den.size()) - 1; --i) {
        Rat c = num[static_cast<size_t>(i)] / lead;
        if (c == 0) continue;
        size_t shift = static_cast<size_t>(i) - (den.size() - 1);
        quot[shift] = c;
        for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    return {rpoly_trim(std::move(quot)), rpoly_trim(std::move(num))};
}

RPoly rpoly_mul(const RPoly& a, const RPoly& b) {
    if (a.empty() || b.empty()) return {};
    RPoly out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

RPoly rpoly_sub(RPoly a, const RPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return rpoly_trim(std::move(a));
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw precondition_error("DivisionByZero", "inverse of zero cyclotomic");
    // Extended Euclid: u*f + v*Phi = 1 in Q[x]; inverse is u mod Phi.
    RPoly f = rpoly_trim(coeff_);
    RPoly phi(ctx_->phi_poly.size());
    for (size_t i = 0; i < phi.size(); ++i) phi[i] = Rat(ctx_->phi_poly[i]);

    RPoly r0 = phi, r1 = f;
    RPoly s0 = {}, s1 = {Rat(1)};  // coefficients of f
    while (!r1.empty()) {
        auto [q, r2] = rpoly_divmod(r0, r1);
        RPoly s2 = rpoly_sub(s0, rpoly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant, since Phi is irreducible and f != 0).
    if (r0.size() != 1)
        throw precondition_error("Internal", "cyclotomic gcd not constant");
    Rat g = r0[0];
    std::vector<Rat> out(static_cast<size_t>(ctx_->degree), Rat(0));
    for (size_t i = 0; i < s0.size() && i < out.size(); ++i) out[i] = s0[i] / g;
    return Cyclotomic(ctx_, std::move(out));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

Cyclotomic Cyclotomic::conj() const {
    std::vector<Rat> out(static_cast<size_t>(ctx_->degree), Rat(0));
    for (long j = 0; j < ctx_->degree; ++j) {
        const Rat& c = coeff_[static_cast<size_t>(j)];
        if (c == 0) continue;
        long e = (order_ - j) % order_;
        const auto& row = ctx_->zeta_powers[static_cast<size_t>(e)];
        for (long i = 0; i < ctx_->degree; ++i) out[static_cast<size_t>(i)] += c * row[static_cast<size_t>(i)];
    }
    return Cyclotomic(ctx_, std::move(out));
}

Cyclotomic Cyclotomic::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Cyclotomic result = Cyclotomic::one(order_);
    Cyclotomic base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (order_ == o.order_) return coeff_ == o.coeff_;
    long m = std::lcm(order_, o.order_);
    return promote(m).coeff_ == o.promote(m).coeff_;
}

Cyclotomic Cyclotomic::promote(long new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0)
        throw precondition_error("OrderMismatch",
                                 "cannot promote Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                                     std::to_string(new_order) + ")");
    auto ctx = detail::CycContext::get(new_order);
    long step = new_order / order_;
    std::vector<Rat> out(static_cast<size_t>(ctx->degree), Rat(0));
    for (long j = 0; j < ctx_->degree; ++j) {
        const Rat& c = coeff_[static_cast<size_t>(j)];
        if (c == 0) continue;
        const auto& row = ctx->zeta_powers[static_cast<size_t>((j * step) % new_order)];
        for (long i = 0; i < ctx->degree; ++i) out[static_cast<size_t>(i)] += c * row[static_cast<size_t>(i)];
    }
    return Cyclotomic(ctx, std::move(out));
}

std::complex<double> Cyclotomic::eval(long embedding) const {
    std::complex<double> z = 0;
    const double two_pi = 6.283185307179586476925287;
    for (long j = 0; j < ctx_->degree; ++j) {
        const Rat& c = coeff_[static_cast<size_t>(j)];
        if (c == 0) continue;
        double angle = two_pi * static_cast<double>((embedding * j) % order_) / static_cast<double>(order_);
        double cd = c.convert_to<double>();
        z += cd * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return z;
}

std::string Cyclotomic::to_string() const {
    // Canonical text: rational, "z^k", or coefficient list "[c0,c1,...]".
    if (auto r = as_rational()) return rat_to_string(*r);
    if (auto root = as_root_of_unity()) {
        RootOfUnity r = *root;
        if (r.order() == order_) {
            std::ostringstream os;
            os << "z^" << r.exponent();
            return os.str();
        }
    }
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (i) os << ",";
        os << rat_to_string(coeff_[i]);
    }
    os << "]";
    return os.str();
}

Cyclotomic Cyclotomic::parse(const std::string& text, long order) {
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw parse_error("ParseError", "empty cyclotomic literal");

    if (t.front() == '[') {
        if (t.back() != ']') throw parse_error("ParseError", "unterminated coefficient list");
        std::vector<Rat> coeffs;
        std::string body = t.substr(1, t.size() - 2);
        std::istringstream is(body);
        std::string item;
        while (std::getline(is, item, ','))
            coeffs.push_back(parse_rat(item));
        Cyclotomic out(order);
        if (coeffs.size() > out.coeff_.size())
            throw parse_error("ParseError", "coefficient list longer than phi(order)");
        for (size_t i = 0; i < coeffs.size(); ++i) out.coeff_[i] = coeffs[i];
        return out;
    }

    // Sum of terms: [+-] coef [* z^k] | [+-] z^k
    Cyclotomic out(order);
    size_t pos = 0;
    while (pos < t.size()) {
        int sign = 1;
        if (t[pos] == '+') ++pos;
        else if (t[pos] == '-') { sign = -1; ++pos; }
        size_t end = pos;
        while (end < t.size() && t[end] != '+' && t[end] != '-') ++end;
        std::string term = t.substr(pos, end - pos);
        pos = end;
        if (term.empty()) throw parse_error("ParseError", "empty term in '" + text + "'");
        Rat coef(1);
        long zexp = -1;
        auto star = term.find('*');
        std::string zpart;
        if (star != std::string::npos) {
            coef = parse_rat(term.substr(0, star));
            zpart = term.substr(star + 1);
        } else if (term[0] == 'z') {
            zpart = term;
        } else {
            coef = parse_rat(term);
        }
        if (!zpart.empty()) {
            if (zpart == "z") zexp = 1;
            else if (zpart.rfind("z^", 0) == 0) {
                try { zexp = std::stol(zpart.substr(2)); }
                catch (const std::logic_error&) { throw parse_error("ParseError", "bad power in '" + text + "'"); }
            } else {
                throw parse_error("ParseError", "bad term '" + term + "'");
            }
        }
        Cyclotomic val = (zexp < 0) ? Cyclotomic(order, coef)
                                    : Cyclotomic(order, coef) * zeta_power(order, zexp);
        if (sign < 0) val = -val;
        out += val;
    }
    return out;
}

}  // namespace hecke
