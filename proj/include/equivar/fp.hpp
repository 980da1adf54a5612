#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "equivar/errors.hpp"

namespace equivar {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

bool is_prime(u32 n);

/// Residue arithmetic mod a prime that fits in 32 bits.
inline u32 add_mod(u32 a, u32 b, u32 p) { return (a + b) % p; }
inline u32 sub_mod(u32 a, u32 b, u32 p) { return (a + p - b % p) % p; }
inline u32 mul_mod(u32 a, u32 b, u32 p) { return static_cast<u32>((u64(a) * b) % p); }
u32 pow_mod(u32 a, u64 e, u32 p);
u32 inv_mod(u32 a, u32 p); // requires a != 0 mod p

/// Scalar of the prime field F_p, carrying its modulus.
struct FpScalar {
    u32 value = 0;
    u32 p = 2;

    FpScalar() = default;
    FpScalar(u32 value_, u32 p_) : value(value_ % p_), p(p_) {}

    friend bool operator==(const FpScalar&, const FpScalar&) = default;
};

FpScalar operator+(FpScalar a, FpScalar b);
FpScalar operator-(FpScalar a, FpScalar b);
FpScalar operator*(FpScalar a, FpScalar b);
FpScalar inverse(FpScalar a);

/// Coordinate vector over F_p; the modulus travels with the matrices.
using Vec = std::vector<u32>;

Vec vec_add(const Vec& a, const Vec& b, u32 p);
Vec vec_sub(const Vec& a, const Vec& b, u32 p);
Vec vec_scale(u32 c, const Vec& a, u32 p);
bool vec_is_zero(const Vec& a);

/// Dense row-major matrix over F_p.
struct FpMatrix {
    u32 p = 2;
    int rows = 0;
    int cols = 0;
    std::vector<u32> entries; // rows*cols, row-major

    FpMatrix() = default;
    FpMatrix(u32 p_, int rows_, int cols_)
        : p(p_), rows(rows_), cols(cols_), entries(size_t(rows_) * size_t(cols_), 0) {}

    u32& at(int i, int j) { return entries[size_t(i) * cols + j]; }
    u32 at(int i, int j) const { return entries[size_t(i) * cols + j]; }

    static FpMatrix identity(u32 p, int n);
    static FpMatrix zero(u32 p, int rows, int cols);

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
};

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b);
FpMatrix mat_add(const FpMatrix& a, const FpMatrix& b);
FpMatrix mat_sub(const FpMatrix& a, const FpMatrix& b);
FpMatrix mat_scale(u32 c, const FpMatrix& a);
Vec mat_apply(const FpMatrix& a, const Vec& v);
FpMatrix mat_transpose(const FpMatrix& a);
FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);
FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);

/// In-place reduced row echelon form; returns the pivot column indices.
std::vector<int> rref(FpMatrix& m);

int rank(FpMatrix m);

/// Canonical kernel basis read off the reduced row echelon form,
/// one vector per free column, in ascending free-column order.
std::vector<Vec> kernel_basis(FpMatrix m);

/// Two-sided inverse of a square matrix, if it has one.
std::optional<FpMatrix> mat_inverse(const FpMatrix& m);
bool mat_is_invertible(const FpMatrix& m);

struct LinearSolution {
    Vec particular;
    std::vector<Vec> kernel;
};

/// Exact solution of A x = b over F_p: a particular solution together with a
/// basis of the kernel, or nothing when the system is inconsistent.
std::optional<LinearSolution> solve_mod_p(const FpMatrix& a, const Vec& b);

/// FpScalar-typed entry point; raises ModulusMismatch when the right-hand
/// side does not live over the matrix's field.
std::optional<LinearSolution> solve_mod_p(const FpMatrix& a, const std::vector<FpScalar>& b);

/// Express b as a linear combination of the columns of basis (unique when the
/// columns are independent); nullopt when b is outside the span.
std::optional<Vec> express_in_basis(const FpMatrix& basis, const Vec& b);

/// Enumeration order shared by every brute-force search in the workbench:
/// coordinate vectors over [0,p)^dim in lexicographic order, leftmost
/// coordinate most significant.
bool lex_next(Vec& v, u32 p);

/// Number of vectors in [0,p)^dim, guarded against the cap.
u64 search_space_size(u32 p, int dim, u64 cap);

/// Yields the coordinate vectors (lexicographic order) whose combination
/// over the given n-by-n matrices is invertible.
void for_each_invertible(const std::vector<FpMatrix>& basis, u64 cap,
                         const std::function<void(const Vec&)>& fn);

std::vector<Vec> invertible_elements(const std::vector<FpMatrix>& basis, u64 cap = 1000000);

} // namespace equivar
