#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hecke/intlinalg.hpp"
#include "hecke/perm.hpp"
#include "hecke/rational.hpp"

namespace hecke {

enum class Backend { Permutation, Lattice };

// Computable model of the ambient group: a finite permutation group, or the
// additive group Q^n whose subgroups are full-rank lattices.
class AmbientGroup {
public:
    static std::shared_ptr<const AmbientGroup> permutation(int degree, std::vector<Perm> generators);
    static std::shared_ptr<const AmbientGroup> lattice(int rank);

    Backend backend() const { return backend_; }
    int degree() const { return n_; }  // permutation degree
    int rank() const { return n_; }    // lattice rank
    const std::vector<Perm>& generators() const { return generators_; }

    // All elements of the generated permutation group, sorted. Cached.
    const std::vector<Perm>& elements() const;

private:
    AmbientGroup() = default;
    Backend backend_ = Backend::Permutation;
    int n_ = 0;
    std::vector<Perm> generators_;
    mutable std::vector<Perm> elements_;
    mutable bool enumerated_ = false;
};

using AmbientPtr = std::shared_ptr<const AmbientGroup>;

class GroupElement {
public:
    GroupElement() = default;
    static GroupElement from_perm(AmbientPtr ambient, Perm p);
    static GroupElement from_vector(AmbientPtr ambient, std::vector<Rat> v);
    static GroupElement identity(const AmbientPtr& ambient);

    Backend backend() const { return ambient_->backend(); }
    const AmbientPtr& ambient() const { return ambient_; }
    const Perm& perm() const { return perm_; }
    const std::vector<Rat>& vec() const { return vec_; }

    bool is_identity() const;
    GroupElement inverse() const;

    bool operator==(const GroupElement& o) const;
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool operator<(const GroupElement& o) const;

    std::string to_string() const;

private:
    AmbientPtr ambient_;
    Perm perm_;
    std::vector<Rat> vec_;
};

// Group product: the left factor acts first ((a*b)(p) = b(a(p)) on points).
GroupElement mul(const GroupElement& a, const GroupElement& b);
// gamma * g * gamma^{-1}.
GroupElement conjugate(const GroupElement& gamma, const GroupElement& g);

// Finite-index-commensurate subgroup with a canonical form: the sorted element
// list (permutation backend) or a Hermite-normal-form basis over a common
// denominator (lattice backend, always full rank).
class Subgroup {
public:
    Subgroup() = default;
    static Subgroup generated(AmbientPtr ambient, const std::vector<GroupElement>& generators,
                              size_t element_bound = 200000);
    static Subgroup trivial(AmbientPtr ambient);

    Backend backend() const { return ambient_->backend(); }
    const AmbientPtr& ambient() const { return ambient_; }
    const std::vector<GroupElement>& generators() const { return generators_; }

    // Permutation backend: sorted elements; order; index lookup.
    const std::vector<Perm>& elements() const;
    size_t order() const;
    size_t element_index(const GroupElement& g) const;
    GroupElement element_at(size_t i) const;

    // Lattice backend: canonical basis rows/denominator, lattice = rows(basis)/denom.
    const IntMatrix& basis() const { return basis_; }
    const Int& denom() const { return denom_; }

    bool contains(const GroupElement& g) const;
    GroupElement identity() const { return GroupElement::identity(ambient_); }

    bool operator==(const Subgroup& o) const { return canonical_key() == o.canonical_key(); }
    bool operator!=(const Subgroup& o) const { return !(*this == o); }
    const std::string& canonical_key() const { return key_; }

    std::string to_string() const;

private:
    AmbientPtr ambient_;
    std::vector<GroupElement> generators_;
    std::vector<Perm> elements_;  // permutation backend
    IntMatrix basis_;             // lattice backend (HNF)
    Int denom_ = 1;
    std::string key_;
};

struct DoubleCosetBlock {
    GroupElement representative;  // canonical
    Subgroup stabilizer;          // G1 ∩ rep G2 rep^{-1}
    Int left_cosets;              // [G2 : G2 ∩ rep^{-1} G1 rep]  = |G1\block|
    Int right_cosets;             // [G1 : G1 ∩ rep G2 rep^{-1}] = |block/G2|
};

struct DoubleCosetDecomposition {
    Subgroup left;   // G1
    Subgroup right;  // G2
    std::vector<DoubleCosetBlock> blocks;      // sorted by representative
    std::vector<GroupElement> carrier;         // explicit I (finite backend only)
    bool carrier_is_explicit = false;

    Int total_left_cosets() const;   // |G1\I|
    Int total_right_cosets() const;  // |I/G2|
};

// [H:K]; throws NotASubgroup when K is not contained in H.
Int subgroup_index(const Subgroup& H, const Subgroup& K);
// Representatives t1..tn, t1 = e, with H the disjoint union of the ti*K.
std::vector<GroupElement> left_transversal(const Subgroup& H, const Subgroup& K);
Subgroup intersect(const Subgroup& H, const Subgroup& K);
bool is_commensurate(const Subgroup& H, const Subgroup& K);
// gamma H gamma^{-1}
Subgroup conjugate_subgroup(const GroupElement& gamma, const Subgroup& H);
// Sum/join of subgroups: smallest subgroup containing both.
Subgroup join(const Subgroup& H, const Subgroup& K);

bool in_double_coset(const Subgroup& G1, const GroupElement& rep, const Subgroup& G2,
                     const GroupElement& x);
GroupElement double_coset_canonical_rep(const Subgroup& G1, const GroupElement& x, const Subgroup& G2);
DoubleCosetDecomposition double_cosets(const Subgroup& G1, const std::vector<GroupElement>& seeds,
                                       const Subgroup& G2);

// All subgroups of a finite permutation group, up to equality.
std::vector<Subgroup> enumerate_subgroups(const Subgroup& G, size_t order_bound = 2000);

}  // namespace hecke
