#include "hecke/projrep.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>

namespace hecke {

namespace {

void require_unitary_table(const std::vector<CycMatrix>& mats) {
    for (const auto& m : mats)
        if (!m.is_unitary())
            throw precondition_error("NotProjective", "representation matrix is not unitary");
}

}  // namespace

Cocycle2 obstruction_of(const Subgroup& group, long cyc_order, const std::vector<CycMatrix>& by_element) {
    if (group.backend() != Backend::Permutation)
        throw precondition_error("BackendUnsupported", "obstruction table needs a finite group");
    size_t n = group.order();
    if (by_element.size() != n)
        throw precondition_error("NotProjective", "need one matrix per group element");
    size_t eidx = group.element_index(group.identity());
    if (!by_element[eidx].is_identity())
        throw precondition_error("NotProjective", "pi(e) must be the identity matrix");
    std::vector<std::vector<long>> table(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            size_t k = group.element_index(mul(group.element_at(i), group.element_at(j)));
            CycMatrix q = by_element[i] * by_element[j] * by_element[k].inverse();
            auto c = q.as_scalar();
            if (!c)
                throw precondition_error("NotProjective",
                                         "pi(g)pi(h)pi(gh)^{-1} is not scalar");
            auto root = c->as_root_of_unity();
            if (!root || cyc_order % root->order() != 0)
                throw precondition_error("NotProjective",
                                         "obstruction value is not a root of unity of order dividing " +
                                             std::to_string(cyc_order));
            table[i][j] = root->exponent() * (cyc_order / root->order());
        }
    return Cocycle2::from_table(group, cyc_order, std::move(table));
}

ProjRep ProjRep::from_matrices(Subgroup group, long cyc_order, std::vector<CycMatrix> by_element) {
    require_unitary_table(by_element);
    ProjRep p;
    p.kind_ = Kind::Table;
    p.obstruction_ = obstruction_of(group, cyc_order, by_element);
    p.group_ = std::move(group);
    p.cyc_order_ = cyc_order;
    p.dim_ = by_element.empty() ? 0 : by_element[0].rows();
    for (auto& m : by_element)
        if (m.rows() != p.dim_ || m.cols() != p.dim_)
            throw precondition_error("NotProjective", "matrix dimensions differ across elements");
    p.mats_ = std::move(by_element);
    return p;
}

ProjRep ProjRep::trivial(Subgroup group, long cyc_order, size_t dim) {
    if (group.backend() == Backend::Permutation) {
        std::vector<CycMatrix> mats(group.order(), CycMatrix::identity(dim, cyc_order));
        return from_matrices(std::move(group), cyc_order, std::move(mats));
    }
    return quotient_rep(group, group, cyc_order, {CycMatrix::identity(dim, cyc_order)});
}

ProjRep ProjRep::quotient_rep(Subgroup group, Subgroup kernel, long cyc_order,
                              std::vector<CycMatrix> by_coset) {
    if (group.backend() != Backend::Lattice)
        throw precondition_error("BackendUnsupported", "quotient storage is for lattice subgroups");
    std::vector<GroupElement> tr = left_transversal(group, kernel);
    if (by_coset.size() != tr.size())
        throw precondition_error("NotProjective", "need one matrix per coset");
    require_unitary_table(by_coset);
    // coset index lookup and homomorphism check over the finite quotient
    auto coset_index = [&](const GroupElement& g) -> size_t {
        for (size_t i = 0; i < tr.size(); ++i)
            if (kernel.contains(mul(tr[i].inverse(), g))) return i;
        throw precondition_error("NotAMember", "element not in quotient domain");
    };
    if (!by_coset[0].is_identity() || !tr[0].is_identity())
        throw precondition_error("NotProjective", "pi(e) must be the identity matrix");
    for (size_t i = 0; i < tr.size(); ++i)
        for (size_t j = 0; j < tr.size(); ++j) {
            size_t k = coset_index(mul(tr[i], tr[j]));
            if (by_coset[i] * by_coset[j] != by_coset[k])
                throw precondition_error("NotProjective",
                                         "coset matrices are not a representation of the quotient");
        }
    ProjRep p;
    p.kind_ = Kind::Quotient;
    p.group_ = std::move(group);
    p.kernel_ = std::move(kernel);
    p.cyc_order_ = cyc_order;
    p.dim_ = by_coset[0].rows();
    p.transversal_ = std::move(tr);
    p.mats_ = std::move(by_coset);
    p.obstruction_ = Cocycle2::trivial(p.group_, cyc_order);
    return p;
}

ProjRep ProjRep::clock_shift(const Subgroup& group, const GroupElement& x, const GroupElement& y,
                             long n) {
    size_t sz = group.order();
    if (static_cast<long>(sz) != n * n)
        throw precondition_error("NotProjective", "clock_shift needs |G| = n^2");
    CycMatrix shift(static_cast<size_t>(n), static_cast<size_t>(n), n);
    for (long j = 0; j < n; ++j) shift.at(static_cast<size_t>((j + 1) % n), static_cast<size_t>(j)) =
        Cyclotomic::one(n);
    CycMatrix clock(static_cast<size_t>(n), static_cast<size_t>(n), n);
    for (long j = 0; j < n; ++j) clock.at(static_cast<size_t>(j), static_cast<size_t>(j)) =
        Cyclotomic::zeta_power(n, j);

    std::vector<CycMatrix> mats(sz, CycMatrix::identity(static_cast<size_t>(n), n));
    GroupElement xa = group.identity();
    CycMatrix xpow = CycMatrix::identity(static_cast<size_t>(n), n);
    for (long a = 0; a < n; ++a) {
        GroupElement g = xa;
        CycMatrix m = xpow;
        for (long b = 0; b < n; ++b) {
            mats[group.element_index(g)] = m;
            g = mul(g, y);
            m = m * clock;
        }
        xa = mul(xa, x);
        xpow = xpow * shift;
    }
    return from_matrices(group, n, std::move(mats));
}

ProjRep ProjRep::character(const Subgroup& group, long cyc_order,
                           const std::vector<long>& exponent_by_element) {
    size_t n = group.order();
    if (exponent_by_element.size() != n)
        throw precondition_error("NotProjective", "need one exponent per element");
    std::vector<CycMatrix> mats;
    mats.reserve(n);
    for (size_t i = 0; i < n; ++i)
        mats.push_back(CycMatrix::scalar(1, Cyclotomic::zeta_power(cyc_order, exponent_by_element[i])));
    ProjRep p = from_matrices(group, cyc_order, std::move(mats));
    if (!p.obstruction().is_trivial_values())
        throw precondition_error("NotProjective", "character exponents are not multiplicative");
    return p;
}

CycMatrix ProjRep::matrix(const GroupElement& g) const {
    if (kind_ == Kind::Table) return mats_[group_.element_index(g)];
    for (size_t i = 0; i < transversal_.size(); ++i)
        if (kernel_.contains(mul(transversal_[i].inverse(), g))) return mats_[i];
    throw precondition_error("NotAMember", "element not in representation domain");
}

bool ProjRep::equals(const ProjRep& o) const {
    if (group_ != o.group_ || dim_ != o.dim_) return false;
    if (kind_ == Kind::Table && o.kind_ == Kind::Table) return mats_ == o.mats_;
    if (group_.backend() != Backend::Lattice) return false;
    // compare pointwise over a common refinement transversal
    Subgroup common = intersect(kind_ == Kind::Quotient ? kernel_ : group_,
                                o.kind_ == Kind::Quotient ? o.kernel_ : o.group_);
    for (const auto& t : left_transversal(group_, common))
        if (matrix(t) != o.matrix(t)) return false;
    return true;
}

ProjRep scale_projrep(const ProjRep& p, const std::vector<long>& rho_exponents, long root_order) {
    if (p.kind() != ProjRep::Kind::Table)
        throw precondition_error("BackendUnsupported", "scaling needs a finite-table rep");
    size_t n = p.group().order();
    if (rho_exponents.size() != n)
        throw precondition_error("NotProjective", "need one scalar per element");
    long m = std::lcm(p.cyc_order(), root_order);
    std::vector<CycMatrix> mats;
    mats.reserve(n);
    for (size_t i = 0; i < n; ++i)
        mats.push_back(p.matrices()[i] * Cyclotomic::zeta_power(m, rho_exponents[i] * (m / root_order)));
    return ProjRep::from_matrices(p.group(), m, std::move(mats));
}

ProjRep induce_projrep(const ProjRep& p, const Subgroup& g0, const Cocycle2& om) {
    if (p.kind() != ProjRep::Kind::Table || g0.backend() != Backend::Permutation)
        throw precondition_error("BackendUnsupported", "induction needs finite groups");
    const Subgroup& h0 = p.group();
    if (om.group() != g0)
        throw precondition_error("IncompatibleDomain", "cocycle must live on the induction target");
    if (!om.restricted(h0).equals(p.obstruction()))
        throw precondition_error("ObstructionMismatch",
                                 "restriction of the target cocycle differs from the obstruction");
    std::vector<GroupElement> tr = left_transversal(g0, h0);
    size_t blocks = tr.size();
    size_t d = p.dim();
    long m = std::lcm(p.cyc_order(), om.order());
    size_t n = g0.order();

    std::vector<CycMatrix> mats;
    mats.reserve(n);
    for (size_t gi = 0; gi < n; ++gi) {
        GroupElement g = g0.element_at(gi);
        CycMatrix big(blocks * d, blocks * d, m);
        for (size_t j = 0; j < blocks; ++j) {
            GroupElement gtj = mul(g, tr[j]);
            // unique i with g t_j in t_i H0
            for (size_t i = 0; i < blocks; ++i) {
                GroupElement h = mul(tr[i].inverse(), gtj);
                if (!h0.contains(h)) continue;
                Cyclotomic scalar = om.value_in(g, tr[j], m) *
                                    om.value_in(tr[i], h, m).inverse();
                CycMatrix blockm = p.matrix(h) * scalar;
                for (size_t r = 0; r < d; ++r)
                    for (size_t c = 0; c < d; ++c) big.at(i * d + r, j * d + c) = blockm.at(r, c).promote(m);
                break;
            }
        }
        mats.push_back(std::move(big));
    }
    ProjRep out = ProjRep::from_matrices(g0, m, std::move(mats));
    if (!out.obstruction().equals(om))
        throw precondition_error("ObstructionMismatch",
                                 "induced representation obstruction mismatch");
    return out;
}

namespace {

std::vector<GroupElement> rep_sample_points(const ProjRep& p) {
    // Points whose matrices determine the rep: all elements (Table) or a
    // quotient transversal (Quotient).
    std::vector<GroupElement> pts;
    if (p.kind() == ProjRep::Kind::Table) {
        for (size_t i = 0; i < p.group().order(); ++i) pts.push_back(p.group().element_at(i));
    } else {
        pts = p.coset_transversal();
    }
    return pts;
}

}  // namespace

std::vector<CycMatrix> intertwiners(const ProjRep& pi, const ProjRep& pi_prime) {
    if (pi.group() != pi_prime.group())
        throw precondition_error("ObstructionMismatch", "intertwiners need a common group");
    if (!pi.obstruction().equals(pi_prime.obstruction()))
        throw precondition_error("ObstructionMismatch", "intertwiners need equal obstructions");
    long m = std::lcm(pi.cyc_order(), pi_prime.cyc_order());
    size_t d = pi.dim(), dp = pi_prime.dim();
    std::vector<GroupElement> pts = rep_sample_points(pi);
    // Unknown T is d x dp, vectorized row-major. Condition per point g:
    // pi(g) T - T pi'(g) = 0.
    CycMatrix sys(pts.size() * d * dp, d * dp, m);
    size_t row = 0;
    for (const auto& g : pts) {
        CycMatrix a = pi.matrix(g).promote(m);
        CycMatrix b = pi_prime.matrix(g).promote(m);
        for (size_t r = 0; r < d; ++r)
            for (size_t c = 0; c < dp; ++c) {
                for (size_t k = 0; k < d; ++k) {
                    // + pi(g)[r,k] * T[k,c]
                    sys.at(row, k * dp + c) = sys.at(row, k * dp + c) + a.at(r, k);
                }
                for (size_t k = 0; k < dp; ++k) {
                    // - T[r,k] * pi'(g)[k,c]
                    sys.at(row, r * dp + k) = sys.at(row, r * dp + k) - b.at(k, c);
                }
                ++row;
            }
    }
    CycMatrix null = sys.nullspace();
    std::vector<CycMatrix> basis;
    for (size_t j = 0; j < null.cols(); ++j) {
        CycMatrix t(d, dp, m);
        for (size_t r = 0; r < d; ++r)
            for (size_t c = 0; c < dp; ++c) t.at(r, c) = null.at(r * dp + c, j);
        basis.push_back(std::move(t));
    }
    return basis;
}

size_t end_dimension(const ProjRep& p) { return intertwiners(p, p).size(); }

bool is_irreducible_rep(const ProjRep& p) { return end_dimension(p) == 1; }

ProjRep conjugate_rep_transport(const ProjRep& p, const GroupElement& gamma, const Subgroup& new_group) {
    long m = p.cyc_order();
    auto image = [&](const GroupElement& h) { return conjugate(gamma, h); };
    if (new_group.backend() == Backend::Permutation) {
        size_t n = new_group.order();
        std::vector<CycMatrix> mats;
        mats.reserve(n);
        for (size_t i = 0; i < n; ++i) mats.push_back(p.matrix(image(new_group.element_at(i))).conj());
        return ProjRep::from_matrices(new_group, m, std::move(mats));
    }
    // lattice: conj(gamma)=identity map; transport the quotient structure
    std::vector<CycMatrix> mats;
    for (const auto& mt : p.matrices()) mats.push_back(mt.conj());
    return ProjRep::quotient_rep(new_group, p.quotient_kernel(), m, std::move(mats));
}

ProjRep direct_sum_rep(const std::vector<std::pair<ProjRep, size_t>>& parts) {
    if (parts.empty()) throw precondition_error("NotProjective", "empty direct sum");
    const ProjRep& first = parts[0].first;
    const Subgroup& g = first.group();
    long m = 1;
    for (const auto& [rep, mult] : parts) {
        if (rep.group() != g)
            throw precondition_error("IncompatibleDomain", "direct sum across different groups");
        if (!rep.obstruction().equals(first.obstruction()))
            throw precondition_error("ObstructionMismatch", "direct sum needs equal obstructions");
        m = std::lcm(m, rep.cyc_order());
    }
    auto assemble = [&](const GroupElement& x) {
        std::vector<CycMatrix> blocks;
        for (const auto& [rep, mult] : parts)
            for (size_t k = 0; k < mult; ++k) blocks.push_back(rep.matrix(x).promote(m));
        return CycMatrix::direct_sum(blocks);
    };
    if (g.backend() == Backend::Permutation) {
        std::vector<CycMatrix> mats;
        for (size_t i = 0; i < g.order(); ++i) mats.push_back(assemble(g.element_at(i)));
        return ProjRep::from_matrices(g, m, std::move(mats));
    }
    Subgroup common = first.quotient_kernel();
    for (const auto& [rep, mult] : parts) common = intersect(common, rep.quotient_kernel());
    std::vector<CycMatrix> mats;
    for (const auto& t : left_transversal(g, common)) mats.push_back(assemble(t));
    return ProjRep::quotient_rep(g, common, m, std::move(mats));
}

ProjRep tensor_rep(const ProjRep& a, const ProjRep& b) {
    if (a.group() != b.group())
        throw precondition_error("IncompatibleDomain", "tensor across different groups");
    long m = std::lcm(a.cyc_order(), b.cyc_order());
    if (a.group().backend() == Backend::Permutation) {
        std::vector<CycMatrix> mats;
        for (size_t i = 0; i < a.group().order(); ++i) {
            GroupElement g = a.group().element_at(i);
            mats.push_back(a.matrix(g).kronecker(b.matrix(g)));
        }
        return ProjRep::from_matrices(a.group(), m, std::move(mats));
    }
    Subgroup common = intersect(a.quotient_kernel(), b.quotient_kernel());
    std::vector<CycMatrix> mats;
    for (const auto& t : left_transversal(a.group(), common))
        mats.push_back(a.matrix(t).kronecker(b.matrix(t)));
    return ProjRep::quotient_rep(a.group(), common, m, std::move(mats));
}

// ------------------------------------------------------------- decomposition

namespace {

// Uniform finite sampling of a rep for the splitting machinery.
struct FiniteView {
    std::vector<GroupElement> points;
    std::vector<CycMatrix> mats;  // unitary, original space, promoted to `field`
    long field = 1;

    size_t dim() const { return mats.empty() ? 0 : mats[0].rows(); }
};

FiniteView make_view(const ProjRep& p) {
    FiniteView v;
    v.points = rep_sample_points(p);
    v.field = p.cyc_order();
    for (const auto& g : v.points) v.mats.push_back(p.matrix(g));
    return v;
}

// <u, w> = sum conj(u_i) w_i on column vectors.
Cyclotomic inner(const CycMatrix& u, const CycMatrix& w) {
    long m = std::lcm(u.order(), w.order());
    Cyclotomic s = Cyclotomic::zero(m);
    for (size_t i = 0; i < u.rows(); ++i) s += u.at(i, 0).conj().promote(m) * w.at(i, 0).promote(m);
    return s;
}

CycMatrix column(const CycMatrix& m, size_t j) {
    CycMatrix c(m.rows(), 1, m.order());
    for (size_t i = 0; i < m.rows(); ++i) c.at(i, 0) = m.at(i, j);
    return c;
}

// Matrices of the sub-representation on the column span of B: X_g with
// pi(g) B = B X_g, i.e. X_g = (B^* B)^{-1} B^* pi(g) B.
std::vector<CycMatrix> subrep_matrices(const FiniteView& v, const CycMatrix& basis) {
    CycMatrix gram = basis.conj_transpose() * basis;
    CycMatrix gram_inv = gram.inverse();
    std::vector<CycMatrix> out;
    out.reserve(v.mats.size());
    for (const auto& m : v.mats) out.push_back(gram_inv * (basis.conj_transpose() * (m * basis)));
    return out;
}

// End dimension of the sub-rep spanned by basis (exact nullspace count).
size_t sub_end_dimension(const std::vector<CycMatrix>& sub, long field) {
    size_t d = sub.empty() ? 0 : sub[0].rows();
    CycMatrix sys(sub.size() * d * d, d * d, field);
    size_t row = 0;
    for (const auto& a : sub) {
        for (size_t r = 0; r < d; ++r)
            for (size_t c = 0; c < d; ++c) {
                for (size_t k = 0; k < d; ++k) {
                    sys.at(row, k * d + c) = sys.at(row, k * d + c) + a.at(r, k);
                    sys.at(row, r * d + k) = sys.at(row, r * d + k) - a.at(k, c);
                }
                ++row;
            }
    }
    return sys.nullspace().cols();
}

// Nearest rational with bounded denominator (continued fractions).
std::optional<Rat> bounded_rational(double x, long max_den, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        if (fl > 1e17 || fl < -1e17) break;
        long a = static_cast<long>(fl);
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double frac = v - fl;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    if (q1 == 0) return std::nullopt;
    Rat cand(p1, q1);
    if (std::abs(cand.convert_to<double>() - x) <= tol) return cand;
    return std::nullopt;
}

struct Splitter {
    const FiniteView& view;
    std::mt19937_64 rng;
    int denominator_bound = 16;

    explicit Splitter(const FiniteView& v, unsigned long seed) : view(v), rng(seed) {}

    Rat rand_rat() {
        long num = static_cast<long>(rng() % 17) - 8;
        return Rat(num);
    }

    // T = sum_g pi(g) xi eta^* pi(g)^{-1} with xi, eta random in the span of B.
    CycMatrix averaged_seed(const CycMatrix& basis) {
        size_t d = view.dim();
        size_t k = basis.cols();
        CycMatrix xi(d, 1, view.field), eta(d, 1, view.field);
        for (size_t j = 0; j < k; ++j) {
            Rat a = rand_rat(), b = rand_rat();
            for (size_t i = 0; i < d; ++i) {
                xi.at(i, 0) += basis.at(i, j) * Cyclotomic(view.field, a);
                eta.at(i, 0) += basis.at(i, j) * Cyclotomic(view.field, b);
            }
        }
        CycMatrix seed = xi * eta.conj_transpose();
        CycMatrix t(d, d, view.field);
        for (const auto& m : view.mats) t = t + m * seed * m.conj_transpose();
        return t;
    }

    // Invariant subspace basis inside B from ker(T) when proper; T maps the
    // span of B into itself and kills its orthocomplement.
    std::optional<std::pair<CycMatrix, CycMatrix>> split_by_kernel(const CycMatrix& basis,
                                                                   const CycMatrix& t) {
        CycMatrix restricted = t * basis;  // d x k
        CycMatrix coeff = restricted.nullspace();
        size_t k = basis.cols();
        if (coeff.cols() == 0 || coeff.cols() == k) return std::nullopt;
        CycMatrix w1 = basis * coeff;
        // orthocomplement of W1 inside span(B): {B c : W1^* B c = 0}
        CycMatrix sys = w1.conj_transpose() * basis;
        CycMatrix coeff2 = sys.nullspace();
        if (coeff2.cols() + coeff.cols() != k)
            throw precondition_error("SplitFailed", "orthocomplement dimension mismatch");
        CycMatrix w2 = basis * coeff2;
        return std::make_pair(std::move(w1), std::move(w2));
    }

    // Central group candidates: pi(h) in End(pi) with explicit root-of-unity
    // eigenvalue candidates lambda^N = c.
    std::optional<std::pair<CycMatrix, CycMatrix>> central_split(const CycMatrix& basis) {
        size_t n = view.points.size();
        for (size_t hi = 0; hi < n; ++hi) {
            const CycMatrix& mh = view.mats[hi];
            bool commutes = true;
            for (size_t gi = 0; gi < n && commutes; ++gi)
                if (mh * view.mats[gi] != view.mats[gi] * mh) commutes = false;
            if (!commutes) continue;
            // order and accumulated scalar: mh^N = c I
            CycMatrix pw = mh;
            long bigN = 1;
            std::optional<Cyclotomic> c;
            while (bigN <= 4 * static_cast<long>(n) + 4) {
                auto s = pw.as_scalar();
                if (s) {
                    c = *s;
                    break;
                }
                pw = pw * mh;
                ++bigN;
            }
            if (!c) continue;
            auto croot = c->as_root_of_unity();
            if (!croot) continue;
            long mprime = std::lcm(view.field, std::lcm(bigN * croot->order(), bigN));
            for (long e = 0; e < mprime; ++e) {
                RootOfUnity lam(mprime, e);
                if (!(lam.pow(bigN) == *croot)) continue;
                CycMatrix shifted =
                    (mh.promote(mprime) - CycMatrix::scalar(mh.rows(), Cyclotomic::from_root(lam, mprime))) *
                    basis.promote(mprime);
                CycMatrix coeff = shifted.nullspace();
                if (coeff.cols() == 0 || coeff.cols() == basis.cols()) continue;
                CycMatrix w1 = basis.promote(mprime) * coeff;
                CycMatrix sys = w1.conj_transpose() * basis.promote(mprime);
                CycMatrix coeff2 = sys.nullspace();
                if (coeff.cols() + coeff2.cols() != basis.cols())
                    throw precondition_error("SplitFailed", "orthocomplement dimension mismatch");
                CycMatrix w2 = basis.promote(mprime) * coeff2;
                return std::make_pair(std::move(w1), std::move(w2));
            }
        }
        return std::nullopt;
    }

    // Class-averaged operators with numerically located, exactly verified
    // rational eigenvalues.
    std::optional<std::pair<CycMatrix, CycMatrix>> class_average_split(const CycMatrix& basis) {
        size_t n = view.points.size();
        size_t d = view.dim();
        for (size_t hi = 0; hi < n; ++hi) {
            if (view.points[hi].is_identity()) continue;
            CycMatrix theta(d, d, view.field);
            for (size_t gi = 0; gi < n; ++gi)
                theta = theta + view.mats[gi] * view.mats[hi] * view.mats[gi].conj_transpose();
            if (theta.as_scalar()) continue;
            // numeric eigenvalues of theta
            Eigen::MatrixXcd num(d, d);
            for (size_t r = 0; r < d; ++r)
                for (size_t c = 0; c < d; ++c) num(static_cast<long>(r), static_cast<long>(c)) =
                    theta.at(r, c).eval();
            Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(num, false);
            for (long i = 0; i < es.eigenvalues().size(); ++i) {
                std::complex<double> z = es.eigenvalues()(i);
                if (std::abs(z.imag()) > 1e-9) continue;
                auto cand = bounded_rational(z.real(), denominator_bound, 1e-6);
                if (!cand) continue;
                CycMatrix shifted =
                    (theta - CycMatrix::scalar(d, Cyclotomic(view.field, *cand))) * basis;
                CycMatrix coeff = shifted.nullspace();
                if (coeff.cols() == 0 || coeff.cols() == basis.cols()) continue;
                CycMatrix w1 = basis * coeff;
                CycMatrix sys = w1.conj_transpose() * basis;
                CycMatrix coeff2 = sys.nullspace();
                if (coeff.cols() + coeff2.cols() != basis.cols())
                    throw precondition_error("SplitFailed", "orthocomplement dimension mismatch");
                CycMatrix w2 = basis * coeff2;
                return std::make_pair(std::move(w1), std::move(w2));
            }
        }
        return std::nullopt;
    }

    void recurse(const CycMatrix& basis, std::vector<CycMatrix>& pieces) {
        std::vector<CycMatrix> sub = subrep_matrices(view, basis);
        long field = std::lcm(view.field, basis.order());
        if (sub_end_dimension(sub, field) == 1) {
            pieces.push_back(basis);
            return;
        }
        // multiplicity layer: averaged rank-1 seeds
        for (int trial = 0; trial < 12; ++trial) {
            CycMatrix t = averaged_seed(basis);
            if (t.is_zero()) continue;
            if (auto sp = split_by_kernel(basis, t)) {
                recurse(sp->first, pieces);
                recurse(sp->second, pieces);
                return;
            }
        }
        // exact eigen-splits by central elements
        if (auto sp = central_split(basis)) {
            recurse(sp->first, pieces);
            recurse(sp->second, pieces);
            return;
        }
        // class averages with verified rational eigenvalues (bound escalates)
        for (int round = 0; round < 4; ++round) {
            if (auto sp = class_average_split(basis)) {
                recurse(sp->first, pieces);
                recurse(sp->second, pieces);
                return;
            }
            denominator_bound *= 2;
        }
        throw precondition_error("SplitFailed",
                                 "no exact splitting certificate found for a reducible block");
    }
};

// Unitary basis for the invariant subspace: translates of one vector are
// pairwise orthogonal with equal norms, so the sub-rep matrices come out
// exactly unitary.
std::optional<CycMatrix> unitary_adapted_basis(const FiniteView& v, const CycMatrix& basis) {
    size_t d = v.dim();
    size_t k = basis.cols();
    long field = std::lcm(v.field, basis.order());
    std::vector<CycMatrix> candidates;
    for (size_t j = 0; j < k; ++j) candidates.push_back(column(basis, j).promote(field));
    // projections of standard basis vectors onto the span
    CycMatrix b = basis.promote(field);
    CycMatrix gram_inv = (b.conj_transpose() * b).inverse();
    CycMatrix proj = b * (gram_inv * b.conj_transpose());
    for (size_t i = 0; i < d; ++i) {
        CycMatrix e(d, 1, field);
        e.at(i, 0) = Cyclotomic::one(field);
        CycMatrix pe = proj * e;
        if (!pe.is_zero()) candidates.push_back(pe);
    }
    for (const auto& v0 : candidates) {
        std::vector<CycMatrix> chosen{v0};
        for (const auto& m : v.mats) {
            if (chosen.size() == k) break;
            CycMatrix w = m.promote(field) * v0;
            bool ok = true;
            for (const auto& s : chosen)
                if (!inner(s, w).is_zero()) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            // must stay independent (orthogonal nonzero vectors are)
            if (w.is_zero()) continue;
            chosen.push_back(w);
        }
        if (chosen.size() == k) {
            CycMatrix out(d, k, field);
            for (size_t j = 0; j < k; ++j)
                for (size_t i = 0; i < d; ++i) out.at(i, j) = chosen[j].at(i, 0).promote(field);
            return out;
        }
    }
    return std::nullopt;
}

// Piece rep plus the adapted basis realizing it inside the parent space.
std::pair<ProjRep, CycMatrix> extract_subrep(const ProjRep& parent, const FiniteView& v,
                                             const CycMatrix& basis) {
    auto adapted = unitary_adapted_basis(v, basis);
    if (!adapted)
        throw precondition_error("SplitFailed", "no exactly-unitary basis found for a summand");
    const CycMatrix& b = *adapted;
    long field = b.order();
    Cyclotomic q = inner(column(b, 0), column(b, 0));
    Cyclotomic qinv = q.inverse();
    std::vector<CycMatrix> mats;
    mats.reserve(v.mats.size());
    for (const auto& m : v.mats) mats.push_back((b.conj_transpose() * (m.promote(field) * b)) * qinv);
    ProjRep rep = (parent.kind() == ProjRep::Kind::Table)
                      ? ProjRep::from_matrices(parent.group(), field, std::move(mats))
                      : ProjRep::quotient_rep(parent.group(), parent.quotient_kernel(), field,
                                              std::move(mats));
    return {std::move(rep), b};
}

}  // namespace

RepDecomposition decompose_projrep(const ProjRep& p, unsigned long seed) {
    FiniteView view = make_view(p);
    Splitter splitter(view, seed * 2654435761ULL + 0x9e3779b97f4a7c15ULL);

    CycMatrix full = CycMatrix::identity(p.dim(), p.cyc_order());
    std::vector<CycMatrix> bases;
    splitter.recurse(full, bases);

    RepDecomposition out;
    long field = p.cyc_order();
    for (const auto& b : bases) field = std::lcm(field, b.order());
    size_t total_cols = 0;
    for (const auto& b : bases) total_cols += b.cols();
    if (total_cols != p.dim())
        throw precondition_error("SplitFailed", "basis columns do not fill the space");
    std::vector<std::pair<ProjRep, CycMatrix>> extracted;
    for (const auto& b : bases) extracted.push_back(extract_subrep(p, view, b));
    for (const auto& [piece, adapted] : extracted) field = std::lcm(field, adapted.order());
    CycMatrix u(p.dim(), p.dim(), field);
    size_t col = 0;
    for (auto& [piece, adapted] : extracted) {
        for (size_t j = 0; j < adapted.cols(); ++j)
            for (size_t i = 0; i < p.dim(); ++i) u.at(i, col + j) = adapted.at(i, j).promote(field);
        col += adapted.cols();
        out.pieces.push_back(std::move(piece));
    }
    out.change_of_basis = std::move(u);

    // group pieces by isomorphism class
    std::vector<bool> used(out.pieces.size(), false);
    for (size_t i = 0; i < out.pieces.size(); ++i) {
        if (used[i]) continue;
        size_t mult = 1;
        used[i] = true;
        for (size_t j = i + 1; j < out.pieces.size(); ++j) {
            if (used[j] || out.pieces[j].dim() != out.pieces[i].dim()) continue;
            if (!intertwiners(out.pieces[i], out.pieces[j]).empty()) {
                used[j] = true;
                ++mult;
            }
        }
        out.summands.emplace_back(out.pieces[i], mult);
    }

    size_t dimsum = 0;
    for (const auto& [rep, mult] : out.summands) dimsum += rep.dim() * mult;
    if (dimsum != p.dim())
        throw precondition_error("SplitFailed", "summand dimensions do not add up");
    return out;
}

}  // namespace hecke
