#pragma once

#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix int_identity(size_t n);
IntMatrix int_mat_mul(const IntMatrix& a, const IntMatrix& b);

// Row-style Hermite normal form: H = U * A with U unimodular, H in row
// echelon form, positive pivots, entries above each pivot reduced into
// [0, pivot). Zero rows sink to the bottom.
struct HnfResult {
    IntMatrix h;
    IntMatrix u;      // transform, h = u * a
    size_t rank = 0;
};
HnfResult hermite_normal_form(IntMatrix a);

// Smith normal form: D = U * A * V, D diagonal with d1 | d2 | ... >= 0.
struct SnfResult {
    IntMatrix d;
    IntMatrix u;      // rows transform
    IntMatrix v;      // columns transform
    IntMatrix v_inv;
};
SnfResult smith_normal_form(IntMatrix a);

Int int_mat_det(IntMatrix a);  // square

// Basis (as rows) of {x : x * A = 0} over the integers.
IntMatrix left_kernel(const IntMatrix& a);

// One solution of x * A = b over the integers, if any.
std::optional<std::vector<Int>> solve_left(const IntMatrix& a, const std::vector<Int>& b);

// One solution of A x = b modulo mod (componentwise), if any.
std::optional<std::vector<Int>> solve_mod(const IntMatrix& a, const std::vector<Int>& b, const Int& mod);

}  // namespace hecke
