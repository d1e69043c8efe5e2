#include "hecke/intlinalg.hpp"

#include <algorithm>
#include <optional>

namespace hecke {

IntMatrix int_identity(size_t n) {
    IntMatrix m(n, std::vector<Int>(n, Int(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix int_mat_mul(const IntMatrix& a, const IntMatrix& b) {
    size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    IntMatrix out(n, std::vector<Int>(p, Int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t c = 0; c < p; ++c) out[i][c] += a[i][j] * b[j][c];
        }
    return out;
}

HnfResult hermite_normal_form(IntMatrix a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    IntMatrix u = int_identity(rows);

    auto row_op = [&](size_t i, size_t j, const Int& f) {
        // row_i -= f * row_j
        for (size_t c = 0; c < cols; ++c) a[i][c] -= f * a[j][c];
        for (size_t c = 0; c < rows; ++c) u[i][c] -= f * u[j][c];
    };
    auto row_swap = [&](size_t i, size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    };
    auto row_neg = [&](size_t i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : u[i]) x = -x;
    };

    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // Euclidean elimination in column c below row r.
        while (true) {
            size_t piv = rows;
            for (size_t i = r; i < rows; ++i)
                if (a[i][c] != 0 && (piv == rows || boost::multiprecision::abs(a[i][c]) <
                                                        boost::multiprecision::abs(a[piv][c])))
                    piv = i;
            if (piv == rows) break;  // column all zero below
            row_swap(r, piv);
            if (a[r][c] < 0) row_neg(r);
            bool clean = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                Int q = a[i][c] / a[r][c];
                // floor division toward -inf to keep remainders in [0, pivot)
                if (a[i][c] - q * a[r][c] < 0) q -= 1;
                row_op(i, r, q);
                if (a[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (a[r][c] == 0) continue;
        // Reduce entries above the pivot into [0, pivot).
        for (size_t i = 0; i < r; ++i) {
            Int q = a[i][c] / a[r][c];
            if (a[i][c] - q * a[r][c] < 0) q -= 1;
            row_op(i, r, q);
        }
        ++r;
    }
    return HnfResult{std::move(a), std::move(u), r};
}

SnfResult smith_normal_form(IntMatrix a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    IntMatrix u = int_identity(rows);
    IntMatrix v = int_identity(cols);
    IntMatrix v_inv = int_identity(cols);

    auto row_op = [&](size_t i, size_t j, const Int& f) {
        for (size_t c = 0; c < cols; ++c) a[i][c] -= f * a[j][c];
        for (size_t c = 0; c < rows; ++c) u[i][c] -= f * u[j][c];
    };
    auto col_op = [&](size_t i, size_t j, const Int& f) {
        // col_i -= f * col_j ; v tracks A -> A V, v_inv tracks the inverse.
        for (size_t r2 = 0; r2 < rows; ++r2) a[r2][i] -= f * a[r2][j];
        for (size_t r2 = 0; r2 < cols; ++r2) v[r2][i] -= f * v[r2][j];
        for (size_t c2 = 0; c2 < cols; ++c2) v_inv[j][c2] += f * v_inv[i][c2];
    };
    auto row_swap = [&](size_t i, size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    };
    auto col_swap = [&](size_t i, size_t j) {
        for (size_t r2 = 0; r2 < rows; ++r2) std::swap(a[r2][i], a[r2][j]);
        for (size_t r2 = 0; r2 < cols; ++r2) std::swap(v[r2][i], v[r2][j]);
        std::swap(v_inv[i], v_inv[j]);
    };
    auto row_neg = [&](size_t i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : u[i]) x = -x;
    };

    size_t t = 0;
    while (t < rows && t < cols) {
        // find nonzero pivot
        size_t pi = rows, pj = cols;
        for (size_t i = t; i < rows && pi == rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows) break;
        row_swap(t, pi);
        col_swap(t, pj);

        bool again = true;
        while (again) {
            again = false;
            for (size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                row_op(i, t, q);
                if (a[i][t] != 0) {
                    row_swap(t, i);
                    again = true;
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                col_op(j, t, q);
                if (a[t][j] != 0) {
                    col_swap(t, j);
                    again = true;
                }
            }
        }
        if (a[t][t] < 0) row_neg(t);
        // divisibility fix: ensure d_t divides all remaining entries
        bool fixed = false;
        for (size_t i = t + 1; i < rows && !fixed; ++i)
            for (size_t j = t + 1; j < cols && !fixed; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    // add row i to row t and redo
                    row_op(t, i, Int(-1));
                    fixed = true;
                }
        if (fixed) continue;
        ++t;
    }
    return SnfResult{std::move(a), std::move(u), std::move(v), std::move(v_inv)};
}

Int int_mat_det(IntMatrix a) {
    HnfResult h = hermite_normal_form(std::move(a));
    size_t n = h.h.size();
    Int det = 1;
    for (size_t i = 0; i < n; ++i) det *= h.h[i][i];
    // HNF transform is unimodular up to sign; recover the sign from U.
    // det(U) is +-1; det(A) = det(H)/det(U). For index computations only
    // |det| is used, so return the absolute value.
    return boost::multiprecision::abs(det);
}

IntMatrix left_kernel(const IntMatrix& a) {
    HnfResult h = hermite_normal_form(a);
    IntMatrix out;
    for (size_t i = h.rank; i < h.h.size(); ++i) out.push_back(h.u[i]);
    return out;
}

std::optional<std::vector<Int>> solve_left(const IntMatrix& a, const std::vector<Int>& b) {
    // x * A = b  <=>  express b as an integer combination of the rows of A.
    HnfResult h = hermite_normal_form(a);
    size_t cols = a.empty() ? b.size() : a[0].size();
    std::vector<Int> residual = b;
    std::vector<Int> coeffs(h.h.size(), Int(0));
    for (size_t r = 0; r < h.rank; ++r) {
        size_t pc = 0;
        while (pc < cols && h.h[r][pc] == 0) ++pc;
        if (pc == cols) break;
        if (residual[pc] % h.h[r][pc] != 0) return std::nullopt;
        Int q = residual[pc] / h.h[r][pc];
        if (q != 0)
            for (size_t j = 0; j < cols; ++j) residual[j] -= q * h.h[r][j];
        coeffs[r] = q;
    }
    for (const Int& x : residual)
        if (x != 0) return std::nullopt;
    // x = coeffs * U
    std::vector<Int> x(a.size(), Int(0));
    for (size_t i = 0; i < h.h.size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (size_t j = 0; j < a.size(); ++j) x[j] += coeffs[i] * h.u[i][j];
    }
    return x;
}

std::optional<std::vector<Int>> solve_mod(const IntMatrix& a, const std::vector<Int>& b, const Int& mod) {
    // Solve A x ≡ b (mod m) via SNF: D = U A V, solve D y ≡ U b, x = V y.
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    SnfResult s = smith_normal_form(a);
    std::vector<Int> ub(rows, Int(0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < rows; ++j) ub[i] += s.u[i][j] * b[j];
    std::vector<Int> y(cols, Int(0));
    for (size_t i = 0; i < rows; ++i) {
        Int d = (i < cols && i < s.d.size()) ? s.d[i][i] : Int(0);
        Int c = ((ub[i] % mod) + mod) % mod;
        if (d == 0 || i >= cols) {
            if (c != 0) return std::nullopt;
            continue;
        }
        // d * y ≡ c (mod m): solvable iff gcd(d, m) | c.
        Int g = int_gcd(d % mod == 0 ? mod : d % mod, mod);
        if (g == 0) g = mod;
        if (c % g != 0) return std::nullopt;
        // y = (c/g) * inv(d/g mod m/g) mod (m/g)
        Int mg = mod / g;
        Int dg = (d / g) % mg;
        if (mg == 1) {
            y[i] = 0;
            continue;
        }
        // modular inverse of dg mod mg via extended Euclid
        Int t0 = 0, t1 = 1, r0 = mg, r1 = ((dg % mg) + mg) % mg;
        while (r1 != 0) {
            Int q = r0 / r1;
            Int tmp = r0 - q * r1;
            r0 = r1;
            r1 = tmp;
            tmp = t0 - q * t1;
            t0 = t1;
            t1 = tmp;
        }
        if (r0 != 1) return std::nullopt;
        Int inv = ((t0 % mg) + mg) % mg;
        y[i] = ((c / g) % mg) * inv % mg;
    }
    std::vector<Int> x(cols, Int(0));
    for (size_t i = 0; i < cols; ++i) {
        for (size_t j = 0; j < cols; ++j) x[i] += s.v[i][j] * y[j];
        x[i] = ((x[i] % mod) + mod) % mod;
    }
    return x;
}

}  // namespace hecke
