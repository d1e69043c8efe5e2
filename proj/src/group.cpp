#include "hecke/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace hecke {

// ---------------------------------------------------------------- AmbientGroup

std::shared_ptr<const AmbientGroup> AmbientGroup::permutation(int degree, std::vector<Perm> generators) {
    if (degree <= 0) throw precondition_error("BadAmbient", "permutation degree must be positive");
    for (const Perm& g : generators)
        if (g.degree() != degree)
            throw precondition_error("AmbientMismatch", "generator degree mismatch");
    auto g = std::shared_ptr<AmbientGroup>(new AmbientGroup());
    g->backend_ = Backend::Permutation;
    g->n_ = degree;
    g->generators_ = std::move(generators);
    return g;
}

std::shared_ptr<const AmbientGroup> AmbientGroup::lattice(int rank) {
    if (rank <= 0) throw precondition_error("BadAmbient", "lattice rank must be positive");
    auto g = std::shared_ptr<AmbientGroup>(new AmbientGroup());
    g->backend_ = Backend::Lattice;
    g->n_ = rank;
    return g;
}

namespace {

std::vector<Perm> closure(int degree, const std::vector<Perm>& gens, size_t bound) {
    std::set<Perm> seen;
    std::deque<Perm> todo;
    Perm e(degree);
    seen.insert(e);
    todo.push_back(e);
    while (!todo.empty()) {
        Perm cur = todo.front();
        todo.pop_front();
        for (const Perm& g : gens) {
            Perm next = cur.then(g);
            if (seen.insert(next).second) {
                if (seen.size() > bound)
                    throw bound_error("BoundExceeded",
                                      "group closure exceeds bound " + std::to_string(bound));
                todo.push_back(next);
            }
        }
    }
    return std::vector<Perm>(seen.begin(), seen.end());
}

}  // namespace

const std::vector<Perm>& AmbientGroup::elements() const {
    if (backend_ != Backend::Permutation)
        throw precondition_error("BackendUnsupported", "lattice ambient has no element list");
    if (!enumerated_) {
        elements_ = closure(n_, generators_, 400000);
        enumerated_ = true;
    }
    return elements_;
}

// ---------------------------------------------------------------- GroupElement

GroupElement GroupElement::from_perm(AmbientPtr ambient, Perm p) {
    if (ambient->backend() != Backend::Permutation)
        throw precondition_error("AmbientMismatch", "permutation element in lattice ambient");
    if (p.degree() != ambient->degree())
        throw precondition_error("AmbientMismatch", "permutation degree mismatch");
    GroupElement g;
    g.ambient_ = std::move(ambient);
    g.perm_ = std::move(p);
    return g;
}

GroupElement GroupElement::from_vector(AmbientPtr ambient, std::vector<Rat> v) {
    if (ambient->backend() != Backend::Lattice)
        throw precondition_error("AmbientMismatch", "vector element in permutation ambient");
    if (static_cast<int>(v.size()) != ambient->rank())
        throw precondition_error("AmbientMismatch", "vector rank mismatch");
    GroupElement g;
    g.ambient_ = std::move(ambient);
    g.vec_ = std::move(v);
    return g;
}

GroupElement GroupElement::identity(const AmbientPtr& ambient) {
    if (ambient->backend() == Backend::Permutation)
        return from_perm(ambient, Perm(ambient->degree()));
    return from_vector(ambient, std::vector<Rat>(static_cast<size_t>(ambient->rank()), Rat(0)));
}

bool GroupElement::is_identity() const {
    if (backend() == Backend::Permutation) return perm_.is_identity();
    return std::all_of(vec_.begin(), vec_.end(), [](const Rat& r) { return r == 0; });
}

GroupElement GroupElement::inverse() const {
    if (backend() == Backend::Permutation) return from_perm(ambient_, perm_.inverse());
    std::vector<Rat> v(vec_);
    for (auto& x : v) x = -x;
    return from_vector(ambient_, std::move(v));
}

bool GroupElement::operator==(const GroupElement& o) const {
    if (backend() != o.backend()) return false;
    if (backend() == Backend::Permutation) return perm_ == o.perm_;
    return vec_ == o.vec_;
}

bool GroupElement::operator<(const GroupElement& o) const {
    if (backend() == Backend::Permutation) return perm_ < o.perm_;
    return vec_ < o.vec_;
}

std::string GroupElement::to_string() const {
    if (backend() == Backend::Permutation) return perm_.to_cycles();
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < vec_.size(); ++i) {
        if (i) os << ", ";
        os << rat_to_string(vec_[i]);
    }
    os << ")";
    return os.str();
}

GroupElement mul(const GroupElement& a, const GroupElement& b) {
    if (a.backend() != b.backend())
        throw precondition_error("AmbientMismatch", "product across backends");
    if (a.backend() == Backend::Permutation)
        return GroupElement::from_perm(a.ambient(), a.perm().then(b.perm()));
    std::vector<Rat> v(a.vec());
    for (size_t i = 0; i < v.size(); ++i) v[i] += b.vec()[i];
    return GroupElement::from_vector(a.ambient(), std::move(v));
}

GroupElement conjugate(const GroupElement& gamma, const GroupElement& g) {
    return mul(mul(gamma, g), gamma.inverse());
}

// -------------------------------------------------------------------- Subgroup

namespace {

// Canonical lattice form: rows/denom in HNF with the denominator reduced.
void canonicalize_lattice(IntMatrix& basis, Int& denom) {
    HnfResult h = hermite_normal_form(basis);
    basis.assign(h.h.begin(), h.h.begin() + static_cast<long>(h.rank));
    Int g = denom;
    for (const auto& row : basis)
        for (const Int& x : row) g = int_gcd(g, boost::multiprecision::abs(x));
    if (g > 1) {
        denom /= g;
        for (auto& row : basis)
            for (auto& x : row) x /= g;
    }
}

std::string lattice_key(const IntMatrix& basis, const Int& denom) {
    std::ostringstream os;
    os << denom.str() << "|";
    for (const auto& row : basis) {
        for (const Int& x : row) os << x.str() << ",";
        os << ";";
    }
    return os.str();
}

std::string perm_key(const std::vector<Perm>& elements) {
    std::ostringstream os;
    for (const Perm& p : elements) {
        for (int i = 0; i < p.degree(); ++i) os << p.apply(i) << ",";
        os << ";";
    }
    return os.str();
}

}  // namespace

Subgroup Subgroup::generated(AmbientPtr ambient, const std::vector<GroupElement>& generators,
                             size_t element_bound) {
    Subgroup s;
    s.ambient_ = ambient;
    s.generators_ = generators;
    for (const auto& g : generators)
        if (g.backend() != ambient->backend())
            throw precondition_error("AmbientMismatch", "generator backend mismatch");

    if (ambient->backend() == Backend::Permutation) {
        std::vector<Perm> gens;
        gens.reserve(generators.size());
        for (const auto& g : generators) gens.push_back(g.perm());
        s.elements_ = closure(ambient->degree(), gens, element_bound);
        s.key_ = perm_key(s.elements_);
        return s;
    }

    // Lattice backend: scale generators to a common denominator, HNF.
    size_t n = static_cast<size_t>(ambient->rank());
    Int den = 1;
    for (const auto& g : generators)
        for (const Rat& x : g.vec()) den = int_lcm(den, boost::multiprecision::denominator(x));
    IntMatrix rows;
    for (const auto& g : generators) {
        std::vector<Int> row(n);
        for (size_t i = 0; i < n; ++i) {
            Rat scaled = g.vec()[i] * Rat(den);
            row[i] = boost::multiprecision::numerator(scaled);
        }
        rows.push_back(std::move(row));
    }
    canonicalize_lattice(rows, den);
    if (rows.size() != n)
        throw precondition_error("NotFullRank",
                                 "lattice subgroup must have full rank " + std::to_string(n));
    s.basis_ = std::move(rows);
    s.denom_ = den;
    s.key_ = lattice_key(s.basis_, s.denom_);
    return s;
}

Subgroup Subgroup::trivial(AmbientPtr ambient) {
    if (ambient->backend() == Backend::Lattice)
        throw precondition_error("NotFullRank", "trivial lattice subgroup is not full rank");
    return generated(ambient, {});
}

const std::vector<Perm>& Subgroup::elements() const {
    if (backend() != Backend::Permutation)
        throw precondition_error("BackendUnsupported", "lattice subgroup has no element list");
    return elements_;
}

size_t Subgroup::order() const { return elements().size(); }

size_t Subgroup::element_index(const GroupElement& g) const {
    const auto& el = elements();
    auto it = std::lower_bound(el.begin(), el.end(), g.perm());
    if (it == el.end() || *it != g.perm())
        throw precondition_error("NotAMember", "element not in subgroup");
    return static_cast<size_t>(it - el.begin());
}

GroupElement Subgroup::element_at(size_t i) const {
    return GroupElement::from_perm(ambient_, elements().at(i));
}

bool Subgroup::contains(const GroupElement& g) const {
    if (g.backend() != backend()) return false;
    if (backend() == Backend::Permutation)
        return std::binary_search(elements_.begin(), elements_.end(), g.perm());
    // v in rows(basis)/denom  <=>  denom * v is an integer row combination.
    size_t n = basis_.size();
    std::vector<Int> target(n);
    for (size_t i = 0; i < n; ++i) {
        Rat scaled = g.vec()[i] * Rat(denom_);
        if (boost::multiprecision::denominator(scaled) != 1) return false;
        target[i] = boost::multiprecision::numerator(scaled);
    }
    return solve_left(basis_, target).has_value();
}

std::string Subgroup::to_string() const {
    std::ostringstream os;
    if (backend() == Backend::Permutation) {
        os << "<";
        for (size_t i = 0; i < generators_.size(); ++i) {
            if (i) os << ", ";
            os << generators_[i].to_string();
        }
        if (generators_.empty()) os << "e";
        os << "> (order " << elements_.size() << ")";
    } else {
        os << "lattice rows/" << denom_.str() << " ";
        os << "[";
        for (size_t i = 0; i < basis_.size(); ++i) {
            if (i) os << "; ";
            for (size_t j = 0; j < basis_[i].size(); ++j) {
                if (j) os << " ";
                os << basis_[i][j].str();
            }
        }
        os << "]";
    }
    return os.str();
}

// ------------------------------------------------------------------ operations

namespace {

void require_same_ambient(const Subgroup& H, const Subgroup& K) {
    if (H.backend() != K.backend() || H.ambient()->degree() != K.ambient()->degree())
        throw precondition_error("AmbientMismatch", "subgroups live in different ambient groups");
}

Rat lattice_covolume(const Subgroup& L) {
    // |det(basis)| / denom^n
    Int d = int_mat_det(L.basis());
    Int den = 1;
    for (size_t i = 0; i < L.basis().size(); ++i) den *= L.denom();
    return Rat(d, den);
}

bool lattice_contains_all(const Subgroup& H, const Subgroup& K) {
    // every row of K (as vector) must lie in H
    size_t n = K.basis().size();
    for (size_t i = 0; i < n; ++i) {
        std::vector<Rat> v(n);
        for (size_t j = 0; j < n; ++j) v[j] = Rat(K.basis()[i][j], K.denom());
        if (!H.contains(GroupElement::from_vector(H.ambient(), v))) return false;
    }
    return true;
}

}  // namespace

Int subgroup_index(const Subgroup& H, const Subgroup& K) {
    require_same_ambient(H, K);
    if (H.backend() == Backend::Permutation) {
        for (const Perm& p : K.elements())
            if (!H.contains(GroupElement::from_perm(H.ambient(), p)))
                throw precondition_error("NotASubgroup", "K is not contained in H");
        return Int(H.order() / K.order());
    }
    if (!lattice_contains_all(H, K))
        throw precondition_error("NotASubgroup", "K is not contained in H");
    Rat ratio = lattice_covolume(K) / lattice_covolume(H);
    if (boost::multiprecision::denominator(ratio) != 1)
        throw precondition_error("Internal", "non-integer lattice index");
    return boost::multiprecision::numerator(ratio);
}

std::vector<GroupElement> left_transversal(const Subgroup& H, const Subgroup& K) {
    require_same_ambient(H, K);
    std::vector<GroupElement> reps;
    if (H.backend() == Backend::Permutation) {
        Int idx = subgroup_index(H, K);  // containment check
        (void)idx;
        for (const Perm& p : H.elements()) {
            GroupElement g = GroupElement::from_perm(H.ambient(), p);
            bool fresh = true;
            for (const auto& r : reps)
                if (K.contains(mul(r.inverse(), g))) {
                    fresh = false;
                    break;
                }
            if (fresh) reps.push_back(g);
        }
        return reps;
    }
    // Lattice: K = C * (H basis rows) for an integer matrix C; coset reps of
    // Z^n / rows(C) via Smith normal form, mapped back through H's basis.
    if (!lattice_contains_all(H, K))
        throw precondition_error("NotASubgroup", "K is not contained in H");
    size_t n = H.basis().size();
    IntMatrix c(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i) {
        // solve row_i(K)/denK = x * rows(H)/denH  =>  x * rows(H) = row_i(K)*denH/denK
        std::vector<Int> target(n);
        for (size_t j = 0; j < n; ++j) {
            Rat t = Rat(K.basis()[i][j], K.denom()) * Rat(H.denom());
            if (boost::multiprecision::denominator(t) != 1)
                throw precondition_error("Internal", "non-integral coordinates");
            target[j] = boost::multiprecision::numerator(t);
        }
        auto x = solve_left(H.basis(), target);
        if (!x) throw precondition_error("Internal", "containment solve failed");
        c[i] = *x;
    }
    SnfResult s = smith_normal_form(c);
    // coset reps: r' in prod [0, d_i); element = (r' * V^{-1}) * rows(H)/denH
    std::vector<Int> diag(n);
    for (size_t i = 0; i < n; ++i) diag[i] = s.d[i][i];
    std::vector<Int> counter(n, Int(0));
    while (true) {
        // map back
        std::vector<Int> coords(n, Int(0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) coords[j] += counter[i] * s.v_inv[i][j];
        std::vector<Rat> v(n, Rat(0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) v[j] += Rat(coords[i] * H.basis()[i][j], H.denom());
        reps.push_back(GroupElement::from_vector(H.ambient(), std::move(v)));
        // increment mixed-radix counter
        size_t pos = 0;
        while (pos < n) {
            counter[pos] += 1;
            if (counter[pos] < diag[pos]) break;
            counter[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return reps;
}

Subgroup intersect(const Subgroup& H, const Subgroup& K) {
    require_same_ambient(H, K);
    if (H.backend() == Backend::Permutation) {
        std::vector<GroupElement> gens;
        for (const Perm& p : H.elements()) {
            GroupElement g = GroupElement::from_perm(H.ambient(), p);
            if (K.contains(g)) gens.push_back(g);
        }
        return Subgroup::generated(H.ambient(), gens);
    }
    // Lattice intersection via the left kernel of the stacked bases.
    size_t n = H.basis().size();
    Int den = int_lcm(H.denom(), K.denom());
    IntMatrix m1 = H.basis(), m2 = K.basis();
    Int f1 = den / H.denom(), f2 = den / K.denom();
    for (auto& row : m1)
        for (auto& x : row) x *= f1;
    for (auto& row : m2)
        for (auto& x : row) x *= f2;
    IntMatrix stacked = m1;
    for (auto& row : m2) {
        std::vector<Int> neg(row.size());
        for (size_t i = 0; i < row.size(); ++i) neg[i] = -row[i];
        stacked.push_back(std::move(neg));
    }
    IntMatrix kern = left_kernel(stacked);
    std::vector<GroupElement> gens;
    for (const auto& krow : kern) {
        std::vector<Rat> v(n, Rat(0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) v[j] += Rat(krow[i] * m1[i][j], den);
        gens.push_back(GroupElement::from_vector(H.ambient(), std::move(v)));
    }
    return Subgroup::generated(H.ambient(), gens);
}

bool is_commensurate(const Subgroup& H, const Subgroup& K) {
    require_same_ambient(H, K);
    Subgroup m = intersect(H, K);
    if (H.backend() == Backend::Permutation) return true;  // all finite
    // full-rank sublattices always commensurate; verify indices are finite.
    return subgroup_index(H, m) > 0 && subgroup_index(K, m) > 0;
}

Subgroup conjugate_subgroup(const GroupElement& gamma, const Subgroup& H) {
    if (H.backend() == Backend::Lattice) return H;  // abelian
    std::vector<GroupElement> gens;
    for (const auto& g : H.generators()) gens.push_back(conjugate(gamma, g));
    if (gens.empty()) return H;
    return Subgroup::generated(H.ambient(), gens);
}

Subgroup join(const Subgroup& H, const Subgroup& K) {
    require_same_ambient(H, K);
    std::vector<GroupElement> gens = H.generators();
    gens.insert(gens.end(), K.generators().begin(), K.generators().end());
    return Subgroup::generated(H.ambient(), gens);
}

bool in_double_coset(const Subgroup& G1, const GroupElement& rep, const Subgroup& G2,
                     const GroupElement& x) {
    if (G1.backend() == Backend::Lattice) {
        Subgroup sum = join(G1, G2);
        return sum.contains(mul(x, rep.inverse()));
    }
    for (const Perm& p : G1.elements()) {
        GroupElement a = GroupElement::from_perm(G1.ambient(), p);
        // x = a * rep * b  =>  b = rep^{-1} a^{-1} x
        GroupElement b = mul(mul(rep.inverse(), a.inverse()), x);
        if (G2.contains(b)) return true;
    }
    return false;
}

GroupElement double_coset_canonical_rep(const Subgroup& G1, const GroupElement& x, const Subgroup& G2) {
    if (G1.backend() == Backend::Lattice) {
        // canonical residue of x modulo the sum lattice, coordinates reduced
        // into [0,1) fundamental blocks of the HNF basis.
        Subgroup sum = join(G1, G2);
        size_t n = sum.basis().size();
        std::vector<Rat> v = x.vec();
        // Full-rank HNF basis is upper triangular with pivot i at column i.
        // Reducing rows in increasing order never disturbs earlier columns.
        for (size_t i = 0; i < n; ++i) {
            size_t pc = i;
            if (sum.basis()[i][pc] == 0) continue;
            Rat piv = Rat(sum.basis()[i][pc], sum.denom());
            Rat q = v[pc] / piv;
            // floor(q)
            Int num = boost::multiprecision::numerator(q);
            Int den = boost::multiprecision::denominator(q);
            Int fl = num / den;
            if (num < 0 && fl * den != num) fl -= 1;
            if (fl != 0)
                for (size_t j = 0; j < n; ++j) v[j] -= Rat(fl) * Rat(sum.basis()[i][j], sum.denom());
        }
        return GroupElement::from_vector(x.ambient(), std::move(v));
    }
    GroupElement best = x;
    bool first = true;
    for (const Perm& pa : G1.elements())
        for (const Perm& pb : G2.elements()) {
            GroupElement cand = mul(mul(GroupElement::from_perm(G1.ambient(), pa), x),
                                    GroupElement::from_perm(G2.ambient(), pb));
            if (first || cand < best) {
                best = cand;
                first = false;
            }
        }
    return best;
}

Int DoubleCosetDecomposition::total_left_cosets() const {
    Int t = 0;
    for (const auto& b : blocks) t += b.left_cosets;
    return t;
}

Int DoubleCosetDecomposition::total_right_cosets() const {
    Int t = 0;
    for (const auto& b : blocks) t += b.right_cosets;
    return t;
}

DoubleCosetDecomposition double_cosets(const Subgroup& G1, const std::vector<GroupElement>& seeds,
                                       const Subgroup& G2) {
    require_same_ambient(G1, G2);
    DoubleCosetDecomposition out;
    out.left = G1;
    out.right = G2;

    std::vector<GroupElement> reps;
    for (const auto& s : seeds) {
        GroupElement canon = double_coset_canonical_rep(G1, s, G2);
        bool fresh = true;
        for (const auto& r : reps)
            if (r == canon) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(canon);
    }
    std::sort(reps.begin(), reps.end());

    for (const auto& rep : reps) {
        DoubleCosetBlock block;
        block.representative = rep;
        Subgroup conj = conjugate_subgroup(rep, G2);
        block.stabilizer = intersect(G1, conj);
        Subgroup conj1 = conjugate_subgroup(rep.inverse(), G1);
        block.left_cosets = subgroup_index(G2, intersect(G2, conj1));
        block.right_cosets = subgroup_index(G1, block.stabilizer);
        out.blocks.push_back(std::move(block));
    }

    if (G1.backend() == Backend::Permutation) {
        std::set<Perm> carrier;
        for (const auto& rep : reps)
            for (const Perm& pa : G1.elements())
                for (const Perm& pb : G2.elements()) {
                    GroupElement el = mul(mul(GroupElement::from_perm(G1.ambient(), pa), rep),
                                          GroupElement::from_perm(G2.ambient(), pb));
                    carrier.insert(el.perm());
                }
        for (const Perm& p : carrier)
            out.carrier.push_back(GroupElement::from_perm(G1.ambient(), p));
        out.carrier_is_explicit = true;
    }
    return out;
}

std::vector<Subgroup> enumerate_subgroups(const Subgroup& G, size_t order_bound) {
    if (G.backend() != Backend::Permutation)
        throw precondition_error("BackendUnsupported", "subgroup enumeration needs a finite backend");
    if (G.order() > order_bound)
        throw bound_error("BoundExceeded", "group order " + std::to_string(G.order()) +
                                               " exceeds bound " + std::to_string(order_bound));
    std::map<std::string, Subgroup> known;
    std::deque<Subgroup> todo;
    Subgroup triv = Subgroup::trivial(G.ambient());
    known[triv.canonical_key()] = triv;
    todo.push_back(triv);
    while (!todo.empty()) {
        Subgroup h = todo.front();
        todo.pop_front();
        for (const Perm& p : G.elements()) {
            GroupElement g = GroupElement::from_perm(G.ambient(), p);
            if (h.contains(g)) continue;
            std::vector<GroupElement> gens = h.generators();
            gens.push_back(g);
            Subgroup bigger = Subgroup::generated(G.ambient(), gens);
            auto [it, fresh] = known.emplace(bigger.canonical_key(), bigger);
            if (fresh) todo.push_back(bigger);
        }
    }
    std::vector<Subgroup> out;
    for (auto& [k, v] : known) out.push_back(std::move(v));
    return out;
}

}  // namespace hecke
