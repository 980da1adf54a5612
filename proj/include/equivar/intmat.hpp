#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "equivar/errors.hpp"

namespace equivar {

/// Dense matrix over the integers (arbitrary precision, so pivoting in the
/// Smith reduction can never overflow).
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<mpz_class> entries; // row-major

    IntMatrix() = default;
    IntMatrix(int rows_, int cols_) : rows(rows_), cols(cols_), entries(size_t(rows_) * cols_, 0) {}

    mpz_class& at(int i, int j) { return entries[size_t(i) * cols + j]; }
    const mpz_class& at(int i, int j) const { return entries[size_t(i) * cols + j]; }

    static IntMatrix identity(int n);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b);
std::vector<mpz_class> int_apply(const IntMatrix& a, const std::vector<mpz_class>& v);

/// Exact determinant (Bareiss fraction-free elimination).
mpz_class int_determinant(IntMatrix m);

struct SmithResult {
    IntMatrix u; // unimodular, rows x rows
    IntMatrix d; // diagonal, d1 | d2 | ...
    IntMatrix v; // unimodular, cols x cols
};

/// Smith normal form: U * M * V = D with D diagonal, nonnegative, and each
/// diagonal entry dividing the next.
SmithResult smith_normal_form(const IntMatrix& m);

/// Workhorse used where only parts of the transform are needed.  Any of the
/// accumulator outputs can be skipped; inverses are tracked directly so no
/// unimodular matrix ever needs to be inverted after the fact.
struct SnfCore {
    IntMatrix d;
    std::optional<IntMatrix> u, uinv, v, vinv;
    std::vector<mpz_class> diag; // nonzero diagonal entries, in order
};

struct SnfWant {
    bool u = false;
    bool uinv = false;
    bool v = false;
    bool vinv = false;
};

SnfCore snf_core(IntMatrix m, SnfWant want);

/// Integer solution of A x = b, if one exists.
std::optional<std::vector<mpz_class>> solve_integer(const IntMatrix& a,
                                                    const std::vector<mpz_class>& b);

} // namespace equivar
