#include "hecke/matrix.hpp"

#include <numeric>
#include <sstream>

namespace hecke {

CycMatrix CycMatrix::promote(long new_order) const {
    CycMatrix out(rows_, cols_, new_order);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].promote(new_order);
    return out;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw precondition_error("ShapeMismatch", "matrix addition shape mismatch");
    long m = std::lcm(order_, o.order_);
    CycMatrix a = promote(m), b = o.promote(m), out(rows_, cols_, m);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw precondition_error("ShapeMismatch", "matrix subtraction shape mismatch");
    long m = std::lcm(order_, o.order_);
    CycMatrix a = promote(m), b = o.promote(m), out(rows_, cols_, m);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (cols_ != o.rows_)
        throw precondition_error("ShapeMismatch", "matrix product shape mismatch");
    long m = std::lcm(order_, o.order_);
    CycMatrix a = promote(m), b = o.promote(m), out(rows_, o.cols_, m);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Cyclotomic& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                out.at(i, j) += aik * b.at(k, j);
            }
        }
    return out;
}

CycMatrix CycMatrix::operator*(const Cyclotomic& c) const {
    long m = std::lcm(order_, c.order());
    CycMatrix a = promote(m), out(rows_, cols_, m);
    Cyclotomic cc = c.promote(m);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = a.data_[i] * cc;
    return out;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != o.data_[i]) return false;
    return true;
}

CycMatrix CycMatrix::conj_transpose() const {
    CycMatrix out(cols_, rows_, order_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).conj();
    return out;
}

CycMatrix CycMatrix::transpose() const {
    CycMatrix out(cols_, rows_, order_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

CycMatrix CycMatrix::conj() const {
    CycMatrix out(rows_, cols_, order_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].conj();
    return out;
}

bool CycMatrix::is_zero() const {
    for (const auto& c : data_)
        if (!c.is_zero()) return false;
    return true;
}

bool CycMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

std::optional<Cyclotomic> CycMatrix::as_scalar() const {
    if (rows_ != cols_ || rows_ == 0) return std::nullopt;
    const Cyclotomic& c = at(0, 0);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (i == j && at(i, j) != c) return std::nullopt;
            if (i != j && !at(i, j).is_zero()) return std::nullopt;
        }
    return c;
}

bool CycMatrix::is_unitary() const {
    if (rows_ != cols_) return false;
    return ((*this) * conj_transpose()).is_identity();
}

namespace {

// Row echelon reduction; returns pivot column per row and transforms rhs alongside.
struct Echelon {
    CycMatrix mat;
    std::vector<size_t> pivot_cols;
};

Echelon row_reduce(CycMatrix a) {
    Echelon e{a, {}};
    CycMatrix& m = e.mat;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t piv = r;
        while (piv < m.rows() && m.at(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        Cyclotomic inv = m.at(r, c).inverse();
        for (size_t j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Cyclotomic f = m.at(i, c);
            for (size_t j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

}  // namespace

CycMatrix CycMatrix::inverse() const {
    if (rows_ != cols_)
        throw precondition_error("ShapeMismatch", "inverse of non-square matrix");
    CycMatrix aug(rows_, 2 * cols_, order_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Cyclotomic::one(order_);
    }
    Echelon e = row_reduce(aug);
    for (size_t i = 0; i < rows_; ++i)
        if (i >= e.pivot_cols.size() || e.pivot_cols[i] != i)
            throw precondition_error("Singular", "matrix is not invertible");
    CycMatrix out(rows_, cols_, order_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(i, j) = e.mat.at(i, cols_ + j);
    return out;
}

size_t CycMatrix::rank() const { return row_reduce(*this).pivot_cols.size(); }

CycMatrix CycMatrix::nullspace() const {
    Echelon e = row_reduce(*this);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    CycMatrix basis(cols_, free_cols.size(), order_);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        basis.at(fc, k) = Cyclotomic::one(order_);
        for (size_t r = 0; r < e.pivot_cols.size(); ++r)
            basis.at(e.pivot_cols[r], k) = -e.mat.at(r, fc);
    }
    return basis;
}

CycMatrix CycMatrix::kronecker(const CycMatrix& o) const {
    long m = std::lcm(order_, o.order_);
    CycMatrix a = promote(m), b = o.promote(m);
    CycMatrix out(rows_ * o.rows_, cols_ * o.cols_, m);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (size_t p = 0; p < o.rows_; ++p)
                for (size_t q = 0; q < o.cols_; ++q)
                    out.at(i * o.rows_ + p, j * o.cols_ + q) = a.at(i, j) * b.at(p, q);
        }
    return out;
}

CycMatrix CycMatrix::direct_sum(const std::vector<CycMatrix>& blocks) {
    size_t r = 0, c = 0;
    long m = 1;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
        m = std::lcm(m, b.order());
    }
    CycMatrix out(r, c, m);
    size_t ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (size_t i = 0; i < b.rows(); ++i)
            for (size_t j = 0; j < b.cols(); ++j) out.at(ro + i, co + j) = b.at(i, j).promote(m);
        ro += b.rows();
        co += b.cols();
    }
    return out;
}

CycMatrix CycMatrix::column_reduced() const {
    // RREF of the transpose is a canonical basis of the column space.
    Echelon e = row_reduce(this->transpose());
    size_t r = e.pivot_cols.size();
    CycMatrix out(rows_, r, order_);
    for (size_t k = 0; k < r; ++k)
        for (size_t i = 0; i < rows_; ++i) out.at(i, k) = e.mat.at(k, i);
    return out;
}

std::string CycMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        os << "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).to_string();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::optional<CycMatrix> solve_linear(const CycMatrix& A, const CycMatrix& b) {
    if (A.rows() != b.rows() || b.cols() != 1)
        throw precondition_error("ShapeMismatch", "solve_linear shape mismatch");
    long m = std::lcm(A.order(), b.order());
    CycMatrix aug(A.rows(), A.cols() + 1, m);
    for (size_t i = 0; i < A.rows(); ++i) {
        for (size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j).promote(m);
        aug.at(i, A.cols()) = b.at(i, 0).promote(m);
    }
    Echelon e = row_reduce(aug);
    for (size_t c : e.pivot_cols)
        if (c == A.cols()) return std::nullopt;  // inconsistent
    CycMatrix x(A.cols(), 1, m);
    for (size_t r = 0; r < e.pivot_cols.size(); ++r)
        x.at(e.pivot_cols[r], 0) = e.mat.at(r, A.cols());
    return x;
}

}  // namespace hecke
