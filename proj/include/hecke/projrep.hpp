#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hecke/cocycle.hpp"
#include "hecke/matrix.hpp"

namespace hecke {

// Finite dimensional projective unitary representation with exact cyclotomic
// matrices. Two storages: a full matrix table on a finite group, or matrices
// per coset of a finite-index sublattice acting trivially (the lattice-backend
// case, where the rep factors through the finite quotient and the obstruction
// is trivial).
class ProjRep {
public:
    enum class Kind { Table, Quotient };

    ProjRep() = default;

    // Matrices indexed like group.elements(). Validates unitarity, pi(e)=I,
    // and extracts the obstruction cocycle (NotProjective on failure).
    static ProjRep from_matrices(Subgroup group, long cyc_order, std::vector<CycMatrix> by_element);
    static ProjRep trivial(Subgroup group, long cyc_order, size_t dim = 1);
    // Lattice rep factoring through group/kernel; matrices indexed like
    // left_transversal(group, kernel). Must be a true unitary rep of the quotient.
    static ProjRep quotient_rep(Subgroup group, Subgroup kernel, long cyc_order,
                                std::vector<CycMatrix> by_coset);
    // Clock-and-shift rep of an abelian group with (Z/n)^2 coordinates x,y:
    // pi(x^a y^b) = X^a Z^b, obstruction zeta_n^{bc}.
    static ProjRep clock_shift(const Subgroup& group, const GroupElement& x, const GroupElement& y,
                               long n);
    // Dimension-1 rep from exponents per element (must be multiplicative).
    static ProjRep character(const Subgroup& group, long cyc_order,
                             const std::vector<long>& exponent_by_element);

    Kind kind() const { return kind_; }
    const Subgroup& group() const { return group_; }
    size_t dim() const { return dim_; }
    long cyc_order() const { return cyc_order_; }
    const Cocycle2& obstruction() const { return obstruction_; }

    CycMatrix matrix(const GroupElement& g) const;
    const std::vector<CycMatrix>& matrices() const { return mats_; }

    // Quotient storage accessors.
    const Subgroup& quotient_kernel() const { return kernel_; }
    const std::vector<GroupElement>& coset_transversal() const { return transversal_; }

    bool equals(const ProjRep& o) const;

private:
    Kind kind_ = Kind::Table;
    Subgroup group_;
    long cyc_order_ = 1;
    size_t dim_ = 0;
    std::vector<CycMatrix> mats_;  // by element index (Table) or coset index (Quotient)
    Cocycle2 obstruction_;
    Subgroup kernel_;                        // Quotient only
    std::vector<GroupElement> transversal_;  // Quotient only
};

// Obstruction extraction from a raw matrix table (errors: NotProjective).
Cocycle2 obstruction_of(const Subgroup& group, long cyc_order, const std::vector<CycMatrix>& by_element);
inline const Cocycle2& obstruction_of(const ProjRep& p) { return p.obstruction(); }

// pi'(g) = rho(g) pi(g); multiplies the obstruction by the coboundary of rho.
ProjRep scale_projrep(const ProjRep& p, const std::vector<long>& rho_exponents, long root_order);

// Induction from H0 = p.group() to g0 carrying the cocycle om on g0.
// Contract: obstruction_of(result) == om exactly (errors: ObstructionMismatch).
ProjRep induce_projrep(const ProjRep& p, const Subgroup& g0, const Cocycle2& om);

// Basis of {T : T pi'(g) = pi(g) T for all g}; obstructions must agree.
std::vector<CycMatrix> intertwiners(const ProjRep& pi, const ProjRep& pi_prime);
size_t end_dimension(const ProjRep& p);
bool is_irreducible_rep(const ProjRep& p);

// h |-> conj(p(gamma h gamma^{-1})) on new_group (used by duals of blocks).
ProjRep conjugate_rep_transport(const ProjRep& p, const GroupElement& gamma, const Subgroup& new_group);

ProjRep direct_sum_rep(const std::vector<std::pair<ProjRep, size_t>>& parts);
ProjRep tensor_rep(const ProjRep& a, const ProjRep& b);  // same group, pointwise Kronecker

struct RepDecomposition {
    // Irreducible summands grouped by isomorphism class, with multiplicities.
    std::vector<std::pair<ProjRep, size_t>> summands;
    // The irreducible pieces in basis order and the exact change of basis U
    // with pi(g) U = U (direct sum of pieces), columns grouped accordingly.
    std::vector<ProjRep> pieces;
    CycMatrix change_of_basis;
};

// Exact decomposition into irreducible summands. Numeric eigenvalue hints are
// re-verified exactly; throws SplitFailed when no exact split certificate is
// found after retries.
RepDecomposition decompose_projrep(const ProjRep& p, unsigned long seed = 0);

}  // namespace hecke
