#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "hecke/cyclotomic.hpp"
#include "hecke/errors.hpp"

namespace hecke {

// Dense matrix over Q(zeta_m). Mixed orders promote to the lcm.
class CycMatrix {
public:
    CycMatrix() : order_(1), rows_(0), cols_(0) {}
    CycMatrix(size_t rows, size_t cols, long order)
        : order_(order), rows_(rows), cols_(cols),
          data_(rows * cols, Cyclotomic::zero(order)) {}

    static CycMatrix identity(size_t n, long order) {
        CycMatrix m(n, n, order);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one(order);
        return m;
    }
    static CycMatrix scalar(size_t n, const Cyclotomic& c) {
        CycMatrix m(n, n, c.order());
        for (size_t i = 0; i < n; ++i) m.at(i, i) = c;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    long order() const { return order_; }

    const Cyclotomic& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    Cyclotomic& at(size_t i, size_t j) { return data_[i * cols_ + j]; }

    CycMatrix promote(long new_order) const;

    CycMatrix operator+(const CycMatrix& o) const;
    CycMatrix operator-(const CycMatrix& o) const;
    CycMatrix operator*(const CycMatrix& o) const;
    CycMatrix operator*(const Cyclotomic& c) const;
    bool operator==(const CycMatrix& o) const;
    bool operator!=(const CycMatrix& o) const { return !(*this == o); }

    CycMatrix conj_transpose() const;
    CycMatrix transpose() const;
    CycMatrix conj() const;  // entrywise zeta -> zeta^{-1}

    bool is_zero() const;
    bool is_identity() const;
    // c*I for some c; returns c if so.
    std::optional<Cyclotomic> as_scalar() const;
    bool is_unitary() const;  // A * A^dagger == I

    CycMatrix inverse() const;
    size_t rank() const;
    // Basis of {v : A v = 0}, returned as columns of a matrix (cols = nullity).
    CycMatrix nullspace() const;

    CycMatrix kronecker(const CycMatrix& o) const;
    static CycMatrix direct_sum(const std::vector<CycMatrix>& blocks);

    // Columns spanning the same space in reduced column-echelon form.
    CycMatrix column_reduced() const;

    std::string to_string() const;

private:
    long order_;
    size_t rows_, cols_;
    std::vector<Cyclotomic> data_;
};

// Solve A x = b exactly; empty optional when inconsistent. b is a column.
std::optional<CycMatrix> solve_linear(const CycMatrix& A, const CycMatrix& b);

}  // namespace hecke
